#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "innerrate/errors.hpp"

namespace innerrate {

/// Exponent pair of a monomial x^a y^b.
struct Exponent {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  bool divides(const Exponent& o) const { return a <= o.a && b <= o.b; }

  std::string str() const {
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a > 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) s += b == 1 ? "y" : "y^" + std::to_string(b);
    return s;
  }
};

/// Keeps only the divisibility-minimal exponents, sorted by (a, b).
inline std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens)
      if (h != g && h.divides(g)) { dominated = true; break; }
    if (!dominated) out.push_back(g);
  }
  return out;
}

/// An m-primary monomial ideal in two variables, held by its minimal
/// generators. m-primary means some pure power of x and some pure power
/// of y occur (so the unit ideal is rejected too).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::vector<Exponent> raw) : gens_(minimalize(std::move(raw))) {
    bool px = false, py = false;
    for (const auto& g : gens_) {
      if (g.a == 0 && g.b == 0)
        throw NotPrimary("the unit ideal is not m-primary");
      if (g.b == 0) px = true;
      if (g.a == 0) py = true;
    }
    if (!px || !py)
      throw NotPrimary("an m-primary monomial ideal needs pure powers of both x and y");
  }

  /// Minimal generators, sorted by (a, b); by m-primarity the first is the
  /// pure y power and the last the pure x power.
  const std::vector<Exponent>& generators() const { return gens_; }

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = gens_.size(); i-- > 0;) {
      s += gens_[i].str();
      if (i > 0) s += ", ";
    }
    return s;
  }

 private:
  std::vector<Exponent> gens_;
};

namespace detail {

inline std::int64_t parse_uint(std::string_view s, std::size_t& i) {
  if (i >= s.size() || s[i] < '0' || s[i] > '9')
    throw ParseError("expected a number in monomial");
  std::int64_t n = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    n = n * 10 + (s[i] - '0');
    if (n > 1'000'000) throw ParseError("exponent too large");
    ++i;
  }
  return n;
}

inline Exponent parse_monomial(std::string_view term) {
  Exponent e;
  std::size_t i = 0;
  bool saw_factor = false;
  auto skip_ws = [&] { while (i < term.size() && (term[i] == ' ' || term[i] == '\t')) ++i; };
  skip_ws();
  while (i < term.size()) {
    char c = term[i];
    if (c == 'x' || c == 'y') {
      ++i;
      std::int64_t k = 1;
      if (i < term.size() && term[i] == '^') {
        ++i;
        k = parse_uint(term, i);
      }
      (c == 'x' ? e.a : e.b) += k;
      saw_factor = true;
    } else if (c == '1' && !saw_factor) {
      // constant monomial, only as the whole term
      ++i;
      saw_factor = true;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in monomial");
    }
    skip_ws();
    if (i < term.size() && term[i] == '*') {
      ++i;
      skip_ws();
    }
  }
  if (!saw_factor) throw ParseError("empty monomial");
  return e;
}

}  // namespace detail

/// Raw exponent pairs from a comma-separated monomial list such as
/// "x^2, x*y^3, y^4" ('*' optional, exponent 1 may be omitted).
inline std::vector<Exponent> parse_generators(std::string_view text) {
  std::vector<Exponent> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view term =
        text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                           : comma - start);
    gens.push_back(detail::parse_monomial(term));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return gens;
}

inline MonomialIdeal parse_ideal(std::string_view text) {
  return MonomialIdeal(parse_generators(text));
}

/// Monomial submodule of the 2-forms, generators read as multiples of
/// dx ^ dy; minimal like an ideal.
struct MonomialModule2 {
  std::vector<Exponent> gens;

  explicit MonomialModule2(std::vector<Exponent> raw) : gens(minimalize(std::move(raw))) {}

  bool contains(const Exponent& e) const {
    return std::any_of(gens.begin(), gens.end(),
                       [&](const Exponent& g) { return g.divides(e); });
  }

  bool contains(const MonomialModule2& o) const {
    return std::all_of(o.gens.begin(), o.gens.end(),
                       [&](const Exponent& e) { return contains(e); });
  }

  bool operator==(const MonomialModule2& o) const { return gens == o.gens; }
};

}  // namespace innerrate
