#pragma once

#include <lieq/algebra.hpp>
#include <lieq/poly.hpp>

namespace lieq {

/// Lie derivative of a symbol along the field X, acting on polynomials in
/// (x, xi) where xi transforms as a derivative covector, with a density twist
/// of weight delta:
///   X.P - sum_ij dX^i/dx_j xi_i dP/dxi_j + delta div(X) P.
Poly lie_tensor(const PolyVectorField& X, const Poly& P, const Rat& delta);

/// Lie derivative of a lambda-density: X.f + lambda div(X) f. f has no xi
/// part.
Poly lie_density(const PolyVectorField& X, const Poly& f, const Rat& lambda);

/// Differential operator from lambda-densities to mu-densities, stored as a
/// normal-ordered total symbol: a polynomial whose xi slots stand for partial
/// derivatives placed to the right of all coefficients.
struct DiffOp {
  Poly p;
  Rat lambda, mu;
};

/// Reads a symbol as the normal-ordered operator with that total symbol.
DiffOp symbol_to_operator(const Poly& P, const Rat& lambda, const Rat& mu);
/// Total symbol of a normal-ordered operator.
Poly normal_order(const DiffOp& D);
/// Top xi-degree part of the total symbol.
Poly principal_symbol(const DiffOp& D);

/// Operator composition d1 after d2 via the Leibniz rule, re-normal-ordered.
/// Throws std::invalid_argument when d2's output weight is not d1's input
/// weight.
DiffOp compose(const DiffOp& d1, const DiffOp& d2);

/// Applies the operator to a polynomial in x.
Poly apply_operator(const DiffOp& D, const Poly& f);

/// First-order operator f -> X.f + weight div(X) f as a DiffOp from weight-
/// densities to weight-densities.
DiffOp density_lie_operator(const PolyVectorField& X, const Rat& weight);

/// Lie derivative on operator symbols: the total symbol of
/// L^mu_X after D  -  D after L^lambda_X, where D is the normal-ordered
/// operator with total symbol P.
Poly lie_diffop(const PolyVectorField& X, const Poly& P, const Rat& lambda, const Rat& mu);

/// Cocycle gamma(X) P = lie_diffop(X, P) - lie_tensor(X, P, mu - lambda).
/// Vanishes identically for affine X (degree <= 1 coefficients).
Poly gamma_op(const PolyVectorField& X, const Poly& P, const Rat& lambda, const Rat& mu);

}  // namespace lieq
