#pragma once

#include <optional>
#include <string>
#include <vector>

#include "innerrate/dual_graph.hpp"
#include "innerrate/errors.hpp"
#include "innerrate/numeric.hpp"

namespace innerrate {

/// A (Gamma, L, P) triple: the dual graph plus the hyperplane-section and
/// polar intersection vectors, indexed in graph vertex storage order.
struct DecoratedTriple {
  DualGraph graph;
  std::vector<Int> L;
  std::vector<Int> P;

  DecoratedTriple() = default;
  DecoratedTriple(DualGraph g, std::vector<Int> l, std::vector<Int> p)
      : graph(std::move(g)), L(std::move(l)), P(std::move(p)) {
    if (L.size() != graph.vertex_count() || P.size() != graph.vertex_count())
      throw DimensionMismatch("L and P must be indexed by the vertex set");
    if (!graph.is_connected()) throw Error("dual graph must be connected");
  }

  const Int& l_of(int id) const { return L[graph.index_of(id)]; }
  const Int& p_of(int id) const { return P[graph.index_of(id)]; }
};

namespace detail {

// Per-vertex decoration tuple followed by edge multiplicities to the
// already-placed vertices; fixed length per depth, so lexicographic
// minimality of the whole stream is achieved greedily depth by depth.
struct KeySegment {
  std::vector<Int> data;
  bool operator<(const KeySegment& o) const { return data < o.data; }
  bool operator==(const KeySegment& o) const { return data == o.data; }
};

inline KeySegment key_segment(const DecoratedTriple& t, std::size_t cand,
                              const std::vector<std::size_t>& placed) {
  const auto& v = t.graph.vertices()[cand];
  KeySegment s;
  s.data.reserve(4 + placed.size());
  s.data.push_back(v.genus);
  s.data.push_back(v.self_int);
  s.data.push_back(t.L[cand]);
  s.data.push_back(t.P[cand]);
  for (std::size_t p : placed)
    s.data.push_back(Int(t.graph.edges_between(v.id, t.graph.vertices()[p].id)));
  return s;
}

// True when swapping a and b extends to a graph automorphism outright:
// same decorations and identical neighborhoods away from each other.
inline bool key_twins(const DecoratedTriple& t, std::size_t a, std::size_t b) {
  const auto& va = t.graph.vertices()[a];
  const auto& vb = t.graph.vertices()[b];
  if (va.genus != vb.genus || va.self_int != vb.self_int) return false;
  if (t.L[a] != t.L[b] || t.P[a] != t.P[b]) return false;
  for (const auto& w : t.graph.vertices()) {
    if (w.id == va.id || w.id == vb.id) continue;
    if (t.graph.edges_between(va.id, w.id) != t.graph.edges_between(vb.id, w.id))
      return false;
  }
  return true;
}

inline void key_search(const DecoratedTriple& t, std::vector<std::size_t>& placed,
                       std::vector<bool>& used, std::vector<Int>& stream,
                       std::optional<std::vector<Int>>& best) {
  const std::size_t n = t.graph.vertex_count();
  if (placed.size() == n) {
    if (!best || stream < *best) best = stream;
    return;
  }
  // Minimal candidate segment at this depth, then branch only on ties,
  // collapsing interchangeable twins.
  std::optional<KeySegment> min_seg;
  std::vector<std::size_t> ties;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    KeySegment s = key_segment(t, c, placed);
    if (!min_seg || s < *min_seg) {
      min_seg = std::move(s);
      ties.assign(1, c);
    } else if (s == *min_seg) {
      ties.push_back(c);
    }
  }
  std::vector<std::size_t> branch;
  for (std::size_t c : ties) {
    bool dup = false;
    for (std::size_t d : branch)
      if (key_twins(t, d, c)) { dup = true; break; }
    if (!dup) branch.push_back(c);
  }
  const std::size_t mark = stream.size();
  for (std::size_t c : branch) {
    stream.insert(stream.end(), min_seg->data.begin(), min_seg->data.end());
    used[c] = true;
    placed.push_back(c);
    key_search(t, placed, used, stream, best);
    placed.pop_back();
    used[c] = false;
    stream.resize(mark);
  }
}

}  // namespace detail

/// Canonical invariant of a decorated triple: equal byte strings exactly
/// when there is a decoration-preserving graph isomorphism (genus,
/// self-intersection, L and P all preserved). Exhaustive backtracking over
/// decoration-compatible orderings; capped at 64 vertices.
inline std::string canonical_key(const DecoratedTriple& t) {
  if (t.graph.vertex_count() > 64)
    throw TooLarge("canonical_key supports at most 64 vertices");
  std::vector<std::size_t> placed;
  std::vector<bool> used(t.graph.vertex_count(), false);
  std::vector<Int> stream;
  stream.push_back(Int(t.graph.vertex_count()));
  std::optional<std::vector<Int>> best;
  detail::key_search(t, placed, used, stream, best);
  std::string out;
  for (const Int& x : *best) {
    out += x.str();
    out += ';';
  }
  return out;
}

}  // namespace innerrate
