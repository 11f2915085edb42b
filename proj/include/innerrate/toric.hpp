#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "innerrate/dual_graph.hpp"
#include "innerrate/errors.hpp"
#include "innerrate/linalg.hpp"
#include "innerrate/monomial_ideal.hpp"
#include "innerrate/numeric.hpp"
#include "innerrate/rate_calculus.hpp"
#include "innerrate/triple.hpp"

namespace innerrate {

/// Primitive integer weight vector (p, q) naming the divisorial monomial
/// valuation x^i y^j -> p*i + q*j. The boundary rays (1,0) and (0,1) are
/// the coordinate-axis strict transforms and may only appear as chain ends.
struct Ray {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const Ray&, const Ray&) = default;

  bool is_interior() const { return p > 0 && q > 0; }

  std::string str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline std::int64_t det(const Ray& u, const Ray& v) { return u.p * v.q - u.q * v.p; }

/// Slope order along the chain from (1,0) to (0,1).
inline bool slope_less(const Ray& u, const Ray& v) { return det(u, v) > 0; }

inline void check_primitive(const Ray& r) {
  if (std::gcd(r.p, r.q) != 1) throw Error("ray " + r.str() + " is not primitive");
}

/// Ordered sequence of primitive rays from (1,0) to (0,1) with all
/// consecutive determinants equal to 1; the toric shape of a good
/// resolution of the smooth germ.
using FanChain = std::vector<Ray>;

struct NewtonPolygon {
  std::vector<Exponent> vertices;  // decreasing-a order
  std::vector<Ray> normals;        // primitive inner normals of compact faces
};

/// Lower-left hull of exponents, as boundary of conv(pts) + R^2_{>=0}.
inline NewtonPolygon newton_polygon_of(const std::vector<Exponent>& pts) {
  std::vector<Exponent> mins = minimalize(pts);
  // minimalize sorts by a ascending; minimality forces b strictly decreasing.
  std::vector<Exponent> hull;
  for (const auto& p : mins) {
    while (hull.size() >= 2) {
      const Exponent& s = hull[hull.size() - 2];
      const Exponent& t = hull[hull.size() - 1];
      std::int64_t cross = (t.a - s.a) * (p.b - t.b) - (t.b - s.b) * (p.a - t.a);
      if (cross > 0) break;  // t is a genuine vertex
      hull.pop_back();
    }
    hull.push_back(p);
  }
  NewtonPolygon np;
  np.vertices.assign(hull.rbegin(), hull.rend());
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    const Exponent& v0 = np.vertices[i];      // larger a
    const Exponent& v1 = np.vertices[i + 1];  // smaller a
    std::int64_t p = v1.b - v0.b, q = v0.a - v1.a;
    std::int64_t g = std::gcd(p, q);
    np.normals.push_back({p / g, q / g});
  }
  return np;
}

inline NewtonPolygon newton_polygon(const MonomialIdeal& ideal) {
  return newton_polygon_of(ideal.generators());
}

namespace detail {
inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
  return n / d + (n % d > 0 ? 1 : 0);  // d > 0
}
}  // namespace detail

/// Minimal generators of the ideal of all lattice points on or above the
/// Newton polygon.
inline MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  NewtonPolygon np = newton_polygon(ideal);
  const std::int64_t a_max = np.vertices.front().a;
  std::vector<std::int64_t> value;  // support value of each face
  for (std::size_t i = 0; i < np.normals.size(); ++i) {
    const Exponent& v = np.vertices[i];
    value.push_back(np.normals[i].p * v.a + np.normals[i].q * v.b);
  }
  std::vector<Exponent> gens;
  for (std::int64_t a = 0; a <= a_max; ++a) {
    std::int64_t b = 0;
    for (std::size_t i = 0; i < np.normals.size(); ++i)
      b = std::max(b, detail::ceil_div(value[i] - np.normals[i].p * a, np.normals[i].q));
    gens.push_back({a, b});
  }
  return MonomialIdeal(std::move(gens));
}

/// Monomial generators of Omega^2_I, the module of 2-forms dg ^ dh with
/// g, h in I. Over one ordered pair of minimal generators x^a y^b, x^c y^d
/// the expansion of d(g1 x^a y^b) ^ d(h x^c y^d) contributes three monomial
/// families: the pure wedge (a+c-1, b+d-1) when ad - bc != 0, and the
/// coefficient-differential terms (a+c, b+d-1) when b > 0 and
/// (a+c-1, b+d) when a > 0.
inline MonomialModule2 omega2_module(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      if (g.a * h.b - g.b * h.a != 0) out.push_back({g.a + h.a - 1, g.b + h.b - 1});
      if (g.b > 0) out.push_back({g.a + h.a, g.b + h.b - 1});
      if (g.a > 0) out.push_back({g.a + h.a - 1, g.b + h.b});
    }
  }
  return MonomialModule2(std::move(out));
}

/// A generator sequence is precomplete when its pairwise wedges alone
/// already generate Omega^2 of the ideal it spans. The wedge set uses the
/// raw sequence, not the minimalized one.
inline bool is_precomplete(const std::vector<Exponent>& gens) {
  MonomialIdeal ideal(gens);  // throws NotPrimary when it is not
  std::vector<Exponent> wedges;
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (g.a * h.b - g.b * h.a != 0) wedges.push_back({g.a + h.a - 1, g.b + h.b - 1});
  if (wedges.empty()) return false;
  return MonomialModule2(std::move(wedges)).contains(omega2_module(ideal));
}

/// The complete generator system f_i, x f_i, y f_i. Products are kept even
/// when redundant as ideal generators; the enlargement is the point of the
/// construction.
inline std::vector<Exponent> complete_system(const MonomialIdeal& ideal) {
  std::vector<Exponent> out = ideal.generators();
  std::vector<Exponent> products;
  for (const auto& g : ideal.generators()) {
    products.push_back({g.a + 1, g.b});
    products.push_back({g.a, g.b + 1});
  }
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
  for (const auto& p : products)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

struct RayInvariants {
  Int m;   // multiplicity m_v(I)
  Int nu;  // 2-form order nu_v(I)
  Rat q;   // inner rate (nu - m + 1) / m
};

/// m = min weighted order of the generators; nu = min over Omega^2_I
/// generators (e, f) of p(e+1) + q(f+1) - 1, the order of vanishing of
/// x^e y^f dx^dy along the divisor of the ray.
inline RayInvariants invariants_at_ray(const MonomialIdeal& ideal, const Ray& r) {
  if (!r.is_interior())
    throw BoundaryRay("invariants are only defined at interior rays, got " + r.str());
  check_primitive(r);
  Int m = 0;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    Int w = Int(r.p) * g.a + Int(r.q) * g.b;
    if (first || w < m) m = w, first = false;
  }
  Int nu = 0;
  first = true;
  for (const auto& e : omega2_module(ideal).gens) {
    Int w = Int(r.p) * (e.a + 1) + Int(r.q) * (e.b + 1) - 1;
    if (first || w < nu) nu = w, first = false;
  }
  return {m, nu, Rat(nu - m + 1, m)};
}

namespace detail {

// Unique primitive w strictly between u and v with det(u, w) = 1 and
// det(w, v) minimal; repeated insertion is the Hirzebruch-Jung resolution
// of the gap.
inline Ray hj_insert(const Ray& u, const Ray& v) {
  const std::int64_t d = det(u, v);
  // extended gcd: s*p + t*q = 1 for primitive u = (p, q)
  std::int64_t old_r = u.p, r = u.q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t qt = old_r / r;
    std::int64_t tmp = old_r - qt * r; old_r = r; r = tmp;
    tmp = old_s - qt * s; old_s = s; s = tmp;
    tmp = old_t - qt * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_s = -old_s; old_t = -old_t; }
  Ray w0{-old_t, old_s};  // det(u, w0) = 1
  std::int64_t k = ceil_div(1 - det(w0, v), d);
  Ray w{w0.p + k * u.p, w0.q + k * u.q};
  if (det(u, w) != 1 || det(w, v) < 1 || det(w, v) >= d || !w.is_interior())
    throw InconsistentInvariants("Hirzebruch-Jung insertion failed between " +
                                 u.str() + " and " + v.str());
  return w;
}

}  // namespace detail

/// Smallest unimodular chain from (1,0) to (0,1) through the given rays.
inline FanChain complete_chain(std::vector<Ray> required) {
  for (const auto& r : required) {
    check_primitive(r);
    if (!r.is_interior()) throw BoundaryRay("required ray " + r.str() + " is not interior");
  }
  required.push_back({1, 0});
  required.push_back({0, 1});
  std::sort(required.begin(), required.end(), slope_less);
  required.erase(std::unique(required.begin(), required.end()), required.end());
  FanChain chain{required.front()};
  for (std::size_t i = 1; i < required.size(); ++i) {
    Ray target = required[i];
    while (det(chain.back(), target) > 1)
      chain.push_back(detail::hj_insert(chain.back(), target));
    chain.push_back(target);
  }
  return chain;
}

/// The rays any resolution of the ideal must contain: compact-face normals
/// of the Newton polygons of I (blow-up of the ideal) and of Omega^2_I
/// (principalization of the polar family).
inline std::vector<Ray> required_rays(const MonomialIdeal& ideal) {
  std::vector<Ray> required = newton_polygon(ideal).normals;
  NewtonPolygon omega_np = newton_polygon_of(omega2_module(ideal).gens);
  required.insert(required.end(), omega_np.normals.begin(), omega_np.normals.end());
  std::sort(required.begin(), required.end(), slope_less);
  required.erase(std::unique(required.begin(), required.end()), required.end());
  return required;
}

/// The fan of the minimal good resolution factoring through the blow-up of
/// the ideal and the principalization of Omega^2_I: the unimodular
/// completion of the required rays.
inline FanChain minimal_resolution_chain(const MonomialIdeal& ideal) {
  return complete_chain(required_rays(ideal));
}

/// Dual graph of a unimodular chain: one genus-0 vertex per interior ray,
/// in chain order with ids 0..k-1; self-intersection -c_i where
/// u_{i-1} + u_{i+1} = c_i u_i.
inline DualGraph chain_graph(const FanChain& chain) {
  if (chain.size() < 3)
    throw InconsistentInvariants("chain has no interior rays");
  DualGraph g;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    std::int64_t c = det(chain[i - 1], chain[i + 1]);
    if (chain[i - 1].p + chain[i + 1].p != c * chain[i].p ||
        chain[i - 1].q + chain[i + 1].q != c * chain[i].q)
      throw InconsistentInvariants("chain is not unimodular at " + chain[i].str());
    int v = g.add_vertex(0, -c);
    if (i > 1) g.add_edge(v - 1, v);
  }
  return g;
}

struct IdealTriple {
  DecoratedTriple triple;
  RateProfile profile;
  FanChain chain;
};

/// The decorated triple (Gamma, L, P) and rate profile of the germ
/// associated with the ideal: graph from the minimal chain, multiplicities
/// and rates per interior ray, L = -M m and P = K + L - M a.
inline IdealTriple triple_of_ideal(const MonomialIdeal& ideal) {
  FanChain chain = minimal_resolution_chain(ideal);
  DualGraph graph = chain_graph(chain);
  const std::size_t n = graph.vertex_count();

  std::vector<Int> m(n);
  RatVec q(n);
  for (std::size_t i = 0; i < n; ++i) {
    RayInvariants inv = invariants_at_ray(ideal, chain[i + 1]);
    m[i] = inv.m;
    q[i] = inv.q;
  }

  IntMat mat = graph.intersection_matrix();
  RatVec m_rat(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    m_rat[i] = Rat(m[i]);
    a[i] = Rat(m[i]) * q[i];
  }
  RatVec mm = mat * m_rat;
  RatVec k = graph.k_vector();
  RatVec ma = mat * a;

  std::vector<Int> big_l(n), big_p(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat l = -mm[i];
    Rat p = k[i] + l - ma[i];
    if (!is_integer(l) || l < 0 || !is_integer(p) || p < 0)
      throw InconsistentInvariants("non-integral or negative L/P entry for ideal " +
                                   ideal.str());
    big_l[i] = to_int(l);
    big_p[i] = to_int(p);
  }

  return {DecoratedTriple(graph, big_l, big_p), make_rate_profile(graph, m, q),
          std::move(chain)};
}

}  // namespace innerrate
