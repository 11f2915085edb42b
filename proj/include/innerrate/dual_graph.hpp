#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "innerrate/errors.hpp"
#include "innerrate/linalg.hpp"

namespace innerrate {

/// Decorated resolution dual graph: one vertex per exceptional curve,
/// weighted with genus and self-intersection; edges are a multiset of
/// unordered id pairs (one per intersection point, loops forbidden).
/// Strict transforms are never vertices; they live in the L/P vectors
/// of DecoratedTriple instead.
class DualGraph {
 public:
  struct Vertex {
    int id = 0;
    int genus = 0;
    std::int64_t self_int = 0;
  };

  DualGraph() = default;

  int add_vertex(int genus, std::int64_t self_int) {
    int id = next_id_++;
    vertices_.push_back({id, genus, self_int});
    return id;
  }

  void add_vertex_with_id(int id, int genus, std::int64_t self_int) {
    if (has_vertex(id)) throw Error("duplicate vertex id");
    vertices_.push_back({id, genus, self_int});
    next_id_ = std::max(next_id_, id + 1);
  }

  void add_edge(int u, int v) {
    index_of(u);
    index_of(v);
    if (u == v) throw Error("loops are not allowed in a dual graph");
    edges_.push_back(u < v ? std::pair{u, v} : std::pair{v, u});
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_vertex(int id) const {
    for (const auto& v : vertices_)
      if (v.id == id) return true;
    return false;
  }

  std::size_t index_of(int id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].id == id) return i;
    throw UnknownVertex("unknown vertex id " + std::to_string(id));
  }

  const Vertex& vertex(int id) const { return vertices_[index_of(id)]; }

  std::size_t edges_between(int u, int v) const {
    auto key = u < v ? std::pair{u, v} : std::pair{v, u};
    std::size_t n = 0;
    for (const auto& e : edges_)
      if (e == key) ++n;
    return n;
  }

  /// Number of edge endpoints at v (parallel edges all count).
  std::size_t valency(int id) const {
    index_of(id);
    std::size_t n = 0;
    for (const auto& e : edges_)
      if (e.first == id || e.second == id) ++n;
    return n;
  }

  bool is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<int> stack{vertices_[0].id};
    std::vector<bool> seen(vertices_.size(), false);
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : edges_) {
        int w = -1;
        if (e.first == u) w = e.second;
        else if (e.second == u) w = e.first;
        else continue;
        std::size_t wi = index_of(w);
        if (!seen[wi]) {
          seen[wi] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == vertices_.size();
  }

  /// Diagonal = self-intersections, off-diagonal (i,j) = number of edges
  /// between vertex i and vertex j.
  IntMat intersection_matrix() const {
    const std::size_t n = vertices_.size();
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = vertices_[i].self_int;
    for (const auto& e : edges_) {
      std::size_t i = index_of(e.first), j = index_of(e.second);
      m.at(i, j) += 1;
      m.at(j, i) += 1;
    }
    return m;
  }

  /// Entry v: val(v) + 2 g_v - 2.
  RatVec k_vector() const {
    RatVec k(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      k[i] = Rat(Int(valency(vertices_[i].id)) + 2 * vertices_[i].genus - 2);
    return k;
  }

  /// Blow up a smooth point of E_v: fresh (-1)-vertex w of genus 0 with one
  /// edge w-v, and E_v^2 drops by one. The new vertex id is max_id()+1.
  DualGraph blowup_smooth(int v) const {
    std::size_t vi = index_of(v);
    DualGraph g = *this;
    g.vertices_[vi].self_int -= 1;
    int w = g.add_vertex(0, -1);
    g.add_edge(w, v);
    return g;
  }

  /// Blow up the double point on an edge u-v: the edge is replaced by a
  /// fresh (-1)-vertex w joined to both ends, whose self-intersections
  /// drop by one. One copy is removed if the edge is multiple.
  DualGraph blowup_double(int u, int v) const {
    std::size_t ui = index_of(u), vi = index_of(v);
    auto key = u < v ? std::pair{u, v} : std::pair{v, u};
    DualGraph g = *this;
    auto it = std::find(g.edges_.begin(), g.edges_.end(), key);
    if (it == g.edges_.end())
      throw UnknownEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
    g.edges_.erase(it);
    g.vertices_[ui].self_int -= 1;
    g.vertices_[vi].self_int -= 1;
    int w = g.add_vertex(0, -1);
    g.add_edge(w, u);
    g.add_edge(w, v);
    return g;
  }

  int max_id() const { return next_id_ - 1; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  int next_id_ = 0;
};

}  // namespace innerrate
