#pragma once

#include <lieq/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace lieq {

/// Sparse polynomial in d position variables x_1..x_d and d fiber variables
/// xi_1..xi_d, with exact rational coefficients. A monomial key is a byte
/// string of length 2d: x exponents first, then xi exponents. The same
/// container doubles as the total symbol of a differential operator, with the
/// xi slots read as partial-derivative symbols.
class Poly {
 public:
  using Key = std::string;

  Poly() : d_(0) {}
  explicit Poly(int d) : d_(d) {}

  static Key unit_key(int d) { return Key(static_cast<size_t>(2 * d), '\0'); }

  static Poly constant(int d, const Rat& c) {
    Poly p(d);
    p.add_term(unit_key(d), c);
    return p;
  }
  static Poly x(int d, int i) {
    Poly p(d);
    Key k = unit_key(d);
    k[i] = 1;
    p.add_term(k, 1);
    return p;
  }
  static Poly xi(int d, int i) {
    Poly p(d);
    Key k = unit_key(d);
    k[d + i] = 1;
    p.add_term(k, 1);
    return p;
  }

  int dim() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Key, Rat>& terms() const { return terms_; }

  void add_term(const Key& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Rat& c, const Poly& p) {
    Poly r(p.d_);
    if (c == 0) return r;
    for (const auto& [k, v] : p.terms_) r.terms_.emplace(k, c * v);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_dim(b);
    Poly r(a.d_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(mul_keys(ka, kb), ca * cb);
    return r;
  }

  bool operator==(const Poly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  /// d/dx_i
  Poly dx(int i) const { return derive(i); }
  /// d/dxi_i
  Poly dxi(int i) const { return derive(d_ + i); }

  static int key_xdeg(const Key& k, int d) {
    int s = 0;
    for (int i = 0; i < d; ++i) s += static_cast<unsigned char>(k[i]);
    return s;
  }
  static int key_xideg(const Key& k, int d) {
    int s = 0;
    for (int i = 0; i < d; ++i) s += static_cast<unsigned char>(k[d + i]);
    return s;
  }

  /// Maximum x-degree over terms; -1 for the zero polynomial.
  int xdeg() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, key_xdeg(k, d_));
    return m;
  }
  int xideg() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, key_xideg(k, d_));
    return m;
  }

  /// Terms whose xi-degree is exactly k.
  Poly xi_component(int k) const {
    Poly r(d_);
    for (const auto& [key, c] : terms_)
      if (key_xideg(key, d_) == k) r.terms_.emplace(key, c);
    return r;
  }

  /// True when every term is xi-free and of x-degree <= m.
  bool x_only_max_deg(int m) const {
    for (const auto& [k, c] : terms_)
      if (key_xideg(k, d_) != 0 || key_xdeg(k, d_) > m) return false;
    return true;
  }

  static std::string key_str(const Key& k, int d) {
    std::string s;
    auto emit = [&](const char* name, int idx, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += name + std::to_string(idx + 1);
      if (e > 1) s += "^" + std::to_string(e);
    };
    for (int i = 0; i < d; ++i) emit("x", i, static_cast<unsigned char>(k[i]));
    for (int i = 0; i < d; ++i) emit("xi", i, static_cast<unsigned char>(k[d + i]));
    return s.empty() ? "1" : s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += rat_str(c) + "*" + key_str(k, d_);
    }
    return s;
  }

 private:
  void check_dim(const Poly& o) const {
    if (d_ != o.d_) throw std::logic_error("polynomial dimension mismatch");
  }

  static Key mul_keys(const Key& a, const Key& b) {
    Key r = a;
    for (size_t i = 0; i < r.size(); ++i) {
      int e = static_cast<unsigned char>(a[i]) + static_cast<unsigned char>(b[i]);
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      r[i] = static_cast<char>(e);
    }
    return r;
  }

  Poly derive(int slot) const {
    Poly r(d_);
    for (const auto& [k, c] : terms_) {
      int e = static_cast<unsigned char>(k[slot]);
      if (e == 0) continue;
      Key nk = k;
      nk[slot] = static_cast<char>(e - 1);
      r.add_term(nk, c * e);
    }
    return r;
  }

  int d_;
  std::map<Key, Rat> terms_;
};

}  // namespace lieq
