#include <lieq/errors.hpp>
#include <lieq/symbols.hpp>

namespace lieq {

Poly lie_tensor(const PolyVectorField& X, const Poly& P, const Rat& delta) {
  const int d = X.d;
  if (P.dim() != d) throw std::logic_error("lie_tensor dimension mismatch");
  Poly r(d);
  for (int i = 0; i < d; ++i) {
    Poly dP = P.dx(i);
    if (!dP.is_zero()) r += X.comp[i] * dP;
  }
  for (int j = 0; j < d; ++j) {
    Poly dPxi = P.dxi(j);
    if (dPxi.is_zero()) continue;
    for (int i = 0; i < d; ++i) {
      Poly dX = X.comp[i].dx(j);
      if (dX.is_zero()) continue;
      r -= dX * (Poly::xi(d, i) * dPxi);
    }
  }
  if (delta != 0) r += delta * (X.divergence() * P);
  return r;
}

Poly lie_density(const PolyVectorField& X, const Poly& f, const Rat& lambda) {
  const int d = X.d;
  if (f.dim() != d) throw std::logic_error("lie_density dimension mismatch");
  if (f.xideg() > 0) throw std::logic_error("densities carry no xi part");
  Poly r(d);
  for (int i = 0; i < d; ++i) {
    Poly df = f.dx(i);
    if (!df.is_zero()) r += X.comp[i] * df;
  }
  if (lambda != 0) r += lambda * (X.divergence() * f);
  return r;
}

DiffOp symbol_to_operator(const Poly& P, const Rat& lambda, const Rat& mu) {
  return {P, lambda, mu};
}

Poly normal_order(const DiffOp& D) { return D.p; }

Poly principal_symbol(const DiffOp& D) { return D.p.xi_component(D.p.xideg()); }

namespace {

/// Normal-orders (x^a d^b)(x^c d^e): adds coeff * w_t * x^(a+c-t) d^(b-t+e)
/// over all multi-indices t <= min(b, c), with the Leibniz weight
/// w_t = prod_i C(b_i, t_i) * c_i! / (c_i - t_i)!.
void leibniz_accumulate(Poly& out, const Poly::Key& k1, const Poly::Key& k2, const Rat& coeff,
                        int d) {
  std::vector<int> tmax(d);
  for (int i = 0; i < d; ++i)
    tmax[i] =
        std::min<int>(static_cast<unsigned char>(k1[d + i]), static_cast<unsigned char>(k2[i]));

  std::vector<int> t(d, 0);
  while (true) {
    Rat w = coeff;
    for (int i = 0; i < d; ++i) {
      if (t[i] == 0) continue;
      const int bi = static_cast<unsigned char>(k1[d + i]);
      const int ci = static_cast<unsigned char>(k2[i]);
      w *= binomial(bi, t[i]);
      for (int f = 0; f < t[i]; ++f) w *= ci - f;
    }
    Poly::Key key = Poly::unit_key(d);
    for (int i = 0; i < d; ++i) {
      const int xe = static_cast<unsigned char>(k1[i]) + static_cast<unsigned char>(k2[i]) - t[i];
      const int de =
          static_cast<unsigned char>(k1[d + i]) - t[i] + static_cast<unsigned char>(k2[d + i]);
      if (xe > 255 || de > 255) throw std::overflow_error("operator exponent overflow");
      key[i] = static_cast<char>(xe);
      key[d + i] = static_cast<char>(de);
    }
    out.add_term(key, w);

    int i = 0;
    while (i < d && t[i] == tmax[i]) t[i++] = 0;
    if (i == d) break;
    ++t[i];
  }
}

}  // namespace

DiffOp compose(const DiffOp& d1, const DiffOp& d2) {
  if (d1.lambda != d2.mu)
    throw std::invalid_argument("compose: weight mismatch between the two operators");
  const int d = d1.p.dim();
  if (d2.p.dim() != d) throw std::logic_error("compose dimension mismatch");
  Poly out(d);
  for (const auto& [k1, c1] : d1.p.terms())
    for (const auto& [k2, c2] : d2.p.terms()) leibniz_accumulate(out, k1, k2, c1 * c2, d);
  return {out, d2.lambda, d1.mu};
}

Poly apply_operator(const DiffOp& D, const Poly& f) {
  const int d = D.p.dim();
  if (f.dim() != d) throw std::logic_error("apply dimension mismatch");
  if (f.xideg() > 0) throw std::logic_error("operators act on polynomials in x only");
  Poly out(d);
  for (const auto& [k, c] : D.p.terms()) {
    Poly g = f;
    for (int i = 0; i < d && !g.is_zero(); ++i)
      for (int e = static_cast<unsigned char>(k[d + i]); e > 0; --e) g = g.dx(i);
    if (g.is_zero()) continue;
    Poly xpart(d);
    Poly::Key xkey = k;
    for (int i = 0; i < d; ++i) xkey[d + i] = 0;
    xpart.add_term(xkey, c);
    out += xpart * g;
  }
  return out;
}

DiffOp density_lie_operator(const PolyVectorField& X, const Rat& weight) {
  const int d = X.d;
  Poly p(d);
  for (int i = 0; i < d; ++i)
    if (!X.comp[i].is_zero()) p += X.comp[i] * Poly::xi(d, i);
  if (weight != 0) p += weight * X.divergence();
  return {p, weight, weight};
}

Poly lie_diffop(const PolyVectorField& X, const Poly& P, const Rat& lambda, const Rat& mu) {
  DiffOp D = symbol_to_operator(P, lambda, mu);
  DiffOp L_lam = density_lie_operator(X, lambda);
  DiffOp L_mu = density_lie_operator(X, mu);
  Poly r = compose(L_mu, D).p;
  r -= compose(D, L_lam).p;
  return r;
}

Poly gamma_op(const PolyVectorField& X, const Poly& P, const Rat& lambda, const Rat& mu) {
  Poly r = lie_diffop(X, P, lambda, mu);
  r -= lie_tensor(X, P, mu - lambda);
  return r;
}

}  // namespace lieq
