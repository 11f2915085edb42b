#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "innerrate/dual_graph.hpp"
#include "innerrate/errors.hpp"
#include "innerrate/linalg.hpp"
#include "innerrate/poly2.hpp"
#include "innerrate/triple.hpp"

namespace innerrate {

/// A dual graph together with its multiplicity vector m_v(I) and inner
/// rate vector q_v^I, indexed in graph vertex storage order.
struct RateProfile {
  DualGraph graph;
  std::vector<Int> m;
  RatVec q;

  const Int& m_of(int id) const { return m[graph.index_of(id)]; }
  const Rat& q_of(int id) const { return q[graph.index_of(id)]; }
};

/// Enforces the profile invariants: every m_v positive, every
/// a_v = m_v q_v with m_v(q_v + 1) - 1 a non-negative integer (the nu
/// vector), and every edge slope m_v m_v' (q_v' - q_v) an integer.
inline RateProfile make_rate_profile(DualGraph graph, std::vector<Int> m, RatVec q) {
  const std::size_t n = graph.vertex_count();
  if (m.size() != n || q.size() != n)
    throw DimensionMismatch("m and q must be indexed by the vertex set");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] <= 0) throw InconsistentInvariants("multiplicities must be positive");
    Rat nu = Rat(m[i]) * (q[i] + 1) - 1;
    if (!is_integer(nu) || nu < 0)
      throw InconsistentInvariants("m_v(q_v + 1) - 1 must be a non-negative integer");
  }
  for (const auto& [u, v] : graph.edges()) {
    std::size_t i = graph.index_of(u), j = graph.index_of(v);
    Rat slope = Rat(m[i]) * Rat(m[j]) * (q[j] - q[i]);
    if (!is_integer(slope))
      throw InconsistentInvariants("edge slope m_v m_v' (q_v' - q_v) must be an integer");
  }
  return {std::move(graph), std::move(m), std::move(q)};
}

/// Solves M m = -L from the total-transform relation (f pi) . E_v = 0.
/// Any non-integral or non-positive entry means L is not the hyperplane
/// vector of a valid triple.
inline std::vector<Int> multiplicities_from_L(const DualGraph& graph, const RatVec& big_l) {
  IntMat mat = graph.intersection_matrix();
  RatVec rhs(big_l.size());
  for (std::size_t i = 0; i < big_l.size(); ++i) rhs[i] = -big_l[i];
  RatVec x = solve_exact(mat, rhs);
  std::vector<Int> m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i]) || x[i] <= 0)
      throw NonIntegralMultiplicity("L does not determine positive integral multiplicities");
    m[i] = to_int(x[i]);
  }
  return m;
}

/// The inner rates formula M a = K + F - P read forwards: recover (m, q)
/// from a triple, with F identified with L (the generic hyperplane
/// section is the generic function).
inline RateProfile rates_from_triple(const DecoratedTriple& t) {
  const std::size_t n = t.graph.vertex_count();
  RatVec big_l(n);
  for (std::size_t i = 0; i < n; ++i) big_l[i] = Rat(t.L[i]);
  std::vector<Int> m = multiplicities_from_L(t.graph, big_l);

  RatVec k = t.graph.k_vector();
  RatVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = k[i] + Rat(t.L[i]) - Rat(t.P[i]);
  RatVec a = solve_exact(t.graph.intersection_matrix(), rhs);
  RatVec q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = a[i] / Rat(m[i]);
  return make_rate_profile(t.graph, std::move(m), std::move(q));
}

/// The formula read backwards: P = K + F - M a with F = -M m and
/// a_v = m_v q_v. Exact inverse of rates_from_triple.
inline RatVec polar_from_rates(const DualGraph& graph, const std::vector<Int>& m,
                               const RatVec& q) {
  const std::size_t n = graph.vertex_count();
  if (m.size() != n || q.size() != n)
    throw DimensionMismatch("m and q must be indexed by the vertex set");
  IntMat mat = graph.intersection_matrix();
  RatVec m_rat(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    m_rat[i] = Rat(m[i]);
    a[i] = Rat(m[i]) * q[i];
  }
  RatVec mm = mat * m_rat;
  RatVec ma = mat * a;
  RatVec k = graph.k_vector();
  RatVec p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = k[i] - mm[i] - ma[i];
  return p;
}

/// Blow up a smooth point of E_v: m_w = m_v and q_w = q_v + 1/m_v.
inline RateProfile recurrence_extend_smooth(const RateProfile& p, int v) {
  std::size_t vi = p.graph.index_of(v);
  DualGraph g = p.graph.blowup_smooth(v);
  std::vector<Int> m = p.m;
  RatVec q = p.q;
  m.push_back(p.m[vi]);
  q.push_back(p.q[vi] + Rat(1, p.m[vi]));
  return make_rate_profile(std::move(g), std::move(m), std::move(q));
}

/// Blow up the double point of E_v and E_v': m_w = m_v + m_v' and q_w is
/// the m-weighted average of the two rates.
inline RateProfile recurrence_extend_double(const RateProfile& p, int u, int v) {
  std::size_t ui = p.graph.index_of(u), vi = p.graph.index_of(v);
  DualGraph g = p.graph.blowup_double(u, v);
  std::vector<Int> m = p.m;
  RatVec q = p.q;
  Int mw = p.m[ui] + p.m[vi];
  m.push_back(mw);
  q.push_back((p.q[ui] * Rat(p.m[ui]) + p.q[vi] * Rat(p.m[vi])) / Rat(mw));
  return make_rate_profile(std::move(g), std::move(m), std::move(q));
}

/// A point on the geometric realization of the graph: t in [0,1] along
/// edge (u, v), with t = 0 at u and t = 1 at v. Parallel edges are
/// interchangeable for every metric purpose.
struct GraphPoint {
  int u = 0;
  int v = 0;
  Rat t;
};

namespace detail {

inline void check_point(const RateProfile& p, const GraphPoint& x) {
  if (p.graph.edges_between(x.u, x.v) == 0)
    throw UnknownEdge("graph point does not lie on an edge");
  if (x.t < 0 || x.t > 1) throw Error("graph point parameter must be in [0,1]");
}

// All-pairs shortest path under edge length 1/(m_u m_v); graphs are tiny.
inline std::vector<std::vector<std::optional<Rat>>> skeletal_apsp(const RateProfile& p) {
  const std::size_t n = p.graph.vertex_count();
  std::vector<std::vector<std::optional<Rat>>> d(n, std::vector<std::optional<Rat>>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Rat(0);
  for (const auto& [u, v] : p.graph.edges()) {
    std::size_t i = p.graph.index_of(u), j = p.graph.index_of(v);
    Rat len = Rat(1) / (Rat(p.m[i]) * Rat(p.m[j]));
    if (!d[i][j] || len < *d[i][j]) d[i][j] = d[j][i] = len;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[i][k] || !d[k][j]) continue;
        Rat via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
  return d;
}

}  // namespace detail

/// Shortest-path distance in the skeletal metric, where edge (v, v') has
/// length 1/(m_v m_v') and partial edges scale linearly in t.
inline Rat skeletal_distance(const RateProfile& p, const GraphPoint& a, const GraphPoint& b) {
  detail::check_point(p, a);
  detail::check_point(p, b);
  auto d = detail::skeletal_apsp(p);
  std::size_t au = p.graph.index_of(a.u), av = p.graph.index_of(a.v);
  std::size_t bu = p.graph.index_of(b.u), bv = p.graph.index_of(b.v);
  Rat la = Rat(1) / (Rat(p.m[au]) * Rat(p.m[av]));
  Rat lb = Rat(1) / (Rat(p.m[bu]) * Rat(p.m[bv]));

  std::optional<Rat> best;
  auto consider = [&](const Rat& cand) {
    if (!best || cand < *best) best = cand;
  };
  // Direct travel along a shared edge.
  if ((au == bu && av == bv) || (au == bv && av == bu)) {
    Rat tb = (au == bu) ? b.t : Rat(1) - b.t;
    consider(rat_abs(a.t - tb) * la);
  }
  // Through endpoint pairs.
  const std::pair<std::size_t, Rat> ends_a[2] = {{au, a.t * la}, {av, (Rat(1) - a.t) * la}};
  const std::pair<std::size_t, Rat> ends_b[2] = {{bu, b.t * lb}, {bv, (Rat(1) - b.t) * lb}};
  for (const auto& [x, off_a] : ends_a)
    for (const auto& [y, off_b] : ends_b)
      if (d[x][y]) consider(off_a + *d[x][y] + off_b);
  if (!best) throw DisconnectedPoint("no path between the two graph points");
  return *best;
}

/// The inner rate function, linear on each edge in the normalized edge
/// parameter: (1-t) q_u + t q_v.
inline Rat rate_at(const RateProfile& p, const GraphPoint& x) {
  detail::check_point(p, x);
  return (Rat(1) - x.t) * p.q_of(x.u) + x.t * p.q_of(x.v);
}

/// Normalized monomial semivaluation: min over the support of f of
/// (wx i + wy j) / normalizer. With normalizer = m_v(maximal ideal) =
/// min(p, q) this is the divisorial valuation of the ray (p, q).
inline Rat eval_monomial_semivaluation(const Rat& wx, const Rat& wy, const Poly2& f,
                                       const Rat& normalizer) {
  if (normalizer <= 0) throw Error("normalizer must be positive");
  if (f.is_zero()) throw ZeroPolynomial("cannot evaluate on the zero polynomial");
  return f.min_weighted_order(wx, wy) / normalizer;
}

}  // namespace innerrate
