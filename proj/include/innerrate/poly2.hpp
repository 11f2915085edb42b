#pragma once

#include <map>
#include <string>
#include <utility>

#include "innerrate/errors.hpp"
#include "innerrate/monomial_ideal.hpp"
#include "innerrate/numeric.hpp"

namespace innerrate {

/// Exact-coefficient polynomial in two variables. Zero coefficients are
/// never stored. Only the brute-force oracle and the semivaluation
/// evaluator need this.
class Poly2 {
 public:
  Poly2() = default;

  static Poly2 monomial(Exponent e, Rat c) {
    Poly2 p;
    p.add_term(e, std::move(c));
    return p;
  }

  void add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.add_term({ea.a + eb.a, ea.b + eb.b}, ca * cb);
    return p;
  }

  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
    return p;
  }

  Poly2 d_dx() const {
    Poly2 p;
    for (const auto& [e, c] : terms_)
      if (e.a > 0) p.add_term({e.a - 1, e.b}, c * e.a);
    return p;
  }

  Poly2 d_dy() const {
    Poly2 p;
    for (const auto& [e, c] : terms_)
      if (e.b > 0) p.add_term({e.a, e.b - 1}, c * e.b);
    return p;
  }

  /// min over the support of p*a + q*b; the weighted order of vanishing
  /// under the monomial valuation with weights (p, q).
  Rat min_weighted_order(const Rat& p, const Rat& q) const {
    if (terms_.empty()) throw ZeroPolynomial("weighted order of the zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& [e, c] : terms_) {
      Rat w = p * e.a + q * e.b;
      if (first || w < best) {
        best = w;
        first = false;
      }
    }
    return best;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += rat_str(it->second) + "*" + it->first.str();
    }
    return s;
  }

 private:
  std::map<Exponent, Rat> terms_;
};

/// dg/dx * df/dy - dg/dy * df/dx; the dx^dy coefficient of dg ^ df.
inline Poly2 jacobian(const Poly2& g, const Poly2& f) {
  return g.d_dx() * f.d_dy() - g.d_dy() * f.d_dx();
}

}  // namespace innerrate
