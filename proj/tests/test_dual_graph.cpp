#include <doctest.h>

#include <algorithm>
#include <vector>

#include "innerrate/dual_graph.hpp"
#include "innerrate/oracle.hpp"
#include "innerrate/toric.hpp"
#include "innerrate/triple.hpp"

using namespace innerrate;

namespace {

DualGraph chain3(long long s0, long long s1, long long s2) {
  DualGraph g;
  g.add_vertex(0, s0);
  g.add_vertex(0, s1);
  g.add_vertex(0, s2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

std::vector<Int> zeros(std::size_t n) { return std::vector<Int>(n, Int(0)); }

// Decoration-free isomorphism check via canonical keys of zero-decorated triples.
bool same_graph_shape(const DualGraph& a, const DualGraph& b) {
  return canonical_key(DecoratedTriple(a, zeros(a.vertex_count()), zeros(a.vertex_count()))) ==
         canonical_key(DecoratedTriple(b, zeros(b.vertex_count()), zeros(b.vertex_count())));
}

// Random connected decorated graph grown by blow-ups from a seed vertex.
DualGraph random_blowup_graph(std::uint64_t seed, int steps) {
  SplitMix64 rng(seed);
  DualGraph g;
  g.add_vertex(static_cast<int>(rng.next() % 2), -1);
  for (int i = 0; i < steps; ++i) {
    if (g.edge_count() == 0 || rng.next() % 2 == 0) {
      int v = g.vertices()[rng.next() % g.vertex_count()].id;
      g = g.blowup_smooth(v);
    } else {
      auto e = g.edges()[rng.next() % g.edge_count()];
      g = g.blowup_double(e.first, e.second);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("intersection matrix of the basic graphs") {
  DualGraph one;
  one.add_vertex(0, -1);
  IntMat m1 = one.intersection_matrix();
  CHECK(m1.rows() == 1);
  CHECK(m1.at(0, 0) == -1);

  IntMat m3 = chain3(-1, -3, -1).intersection_matrix();
  long long expect[3][3] = {{-1, 1, 0}, {1, -3, 1}, {0, 1, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m3.at(i, j) == expect[i][j]);

  DualGraph dbl;
  dbl.add_vertex(0, -2);
  dbl.add_vertex(0, -2);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  IntMat m2 = dbl.intersection_matrix();
  CHECK(m2.at(0, 0) == -2);
  CHECK(m2.at(0, 1) == 2);
  CHECK(m2.at(1, 0) == 2);
  CHECK(m2.at(1, 1) == -2);
}

TEST_CASE("k-vector counts valency and genus") {
  DualGraph one;
  one.add_vertex(0, -1);
  CHECK(one.k_vector() == RatVec{Rat(-2)});

  CHECK(chain3(-1, -3, -1).k_vector() == RatVec{Rat(-1), Rat(0), Rat(-1)});

  DualGraph torus;
  torus.add_vertex(1, -1);
  CHECK(torus.k_vector() == RatVec{Rat(0)});
}

TEST_CASE("smooth blow-up bookkeeping") {
  DualGraph g;
  int v = g.add_vertex(0, -1);
  DualGraph g1 = g.blowup_smooth(v);
  CHECK(g1.vertex_count() == 2);
  CHECK(g1.vertex(v).self_int == -2);
  CHECK(g1.vertex(1).self_int == -1);
  CHECK(g1.edges_between(0, 1) == 1);

  // blowing up the fresh leaf again
  DualGraph g2 = g1.blowup_smooth(1);
  CHECK(g2.vertex(1).self_int == -2);
  CHECK(g2.vertex(2).self_int == -1);
  CHECK(g2.edges_between(1, 2) == 1);

  DualGraph mid = chain3(-1, -3, -1).blowup_smooth(1);
  CHECK(mid.vertex(1).self_int == -4);
  CHECK(mid.vertex(3).self_int == -1);
  CHECK(mid.valency(1) == 3);

  CHECK_THROWS_AS(g.blowup_smooth(99), UnknownVertex);
}

TEST_CASE("double-point blow-up bookkeeping") {
  DualGraph two;
  two.add_vertex(0, -2);
  two.add_vertex(0, -2);
  two.add_edge(0, 1);
  DualGraph g = two.blowup_double(0, 1);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex(0).self_int == -3);
  CHECK(g.vertex(1).self_int == -3);
  CHECK(g.vertex(2).self_int == -1);
  CHECK(g.edges_between(0, 1) == 0);
  CHECK(g.edges_between(2, 0) == 1);
  CHECK(g.edges_between(2, 1) == 1);

  CHECK_THROWS_AS(two.blowup_double(0, 5), UnknownVertex);
  DualGraph far;
  far.add_vertex(0, -1);
  far.add_vertex(0, -1);
  CHECK_THROWS_AS(far.blowup_double(0, 1), UnknownEdge);
}

TEST_CASE("subdividing the (x^2,y^2) chain matches the toric chain with ray (3,2)") {
  // abstract route: blow up the double point on the (2,1)-(1,1) edge
  DualGraph abstract = chain3(-1, -3, -1).blowup_double(0, 1);
  // toric route: the chain with the mediant ray inserted
  DualGraph toric = chain_graph({{1, 0}, {2, 1}, {3, 2}, {1, 1}, {1, 2}, {0, 1}});
  std::vector<long long> selfs;
  for (const auto& v : toric.vertices()) selfs.push_back(v.self_int);
  CHECK(selfs == std::vector<long long>{-2, -1, -4, -1});
  CHECK(same_graph_shape(abstract, toric));

  // re-subdividing the mirror edge restores the decoration symmetry,
  // matching the toric chain (2,1),(3,2),(1,1),(2,3),(1,2)
  DualGraph both = abstract.blowup_double(1, 2);
  DualGraph toric_both =
      chain_graph({{1, 0}, {2, 1}, {3, 2}, {1, 1}, {2, 3}, {1, 2}, {0, 1}});
  CHECK(same_graph_shape(both, toric_both));
  std::vector<long long> sorted_selfs;
  for (const auto& v : both.vertices()) sorted_selfs.push_back(v.self_int);
  std::sort(sorted_selfs.begin(), sorted_selfs.end());
  CHECK(sorted_selfs == std::vector<long long>{-5, -2, -2, -1, -1});
}

TEST_CASE("blow-ups preserve |det|, negative definiteness, and grow counts by one") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    DualGraph g = random_blowup_graph(seed, 6);
    Int d = determinant(g.intersection_matrix());
    CHECK(is_negative_definite(g.intersection_matrix()));

    DualGraph s = g.blowup_smooth(g.vertices()[seed % g.vertex_count()].id);
    CHECK(s.vertex_count() == g.vertex_count() + 1);
    CHECK(s.edge_count() == g.edge_count() + 1);
    Int ds = determinant(s.intersection_matrix());
    CHECK((ds == d || ds == -d));
    CHECK(is_negative_definite(s.intersection_matrix()));

    if (g.edge_count() > 0) {
      auto e = g.edges()[seed % g.edge_count()];
      DualGraph t = g.blowup_double(e.first, e.second);
      CHECK(t.vertex_count() == g.vertex_count() + 1);
      CHECK(t.edge_count() == g.edge_count() + 1);
      Int dt = determinant(t.intersection_matrix());
      CHECK((dt == d || dt == -d));
      CHECK(is_negative_definite(t.intersection_matrix()));
    }
  }
}

TEST_CASE("canonical key is invariant under vertex relisting") {
  SplitMix64 rng(42);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    DualGraph g = random_blowup_graph(seed, 5);
    std::vector<Int> l, p;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      l.push_back(Int(rng.next() % 4));
      p.push_back(Int(rng.next() % 4));
    }
    DecoratedTriple t(g, l, p);
    std::string key = canonical_key(t);

    // rebuild with a shuffled vertex listing
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next() % i]);
    DualGraph h;
    std::vector<Int> l2, p2;
    for (std::size_t i : order) {
      const auto& v = g.vertices()[i];
      h.add_vertex_with_id(v.id, v.genus, v.self_int);
      l2.push_back(l[i]);
      p2.push_back(p[i]);
    }
    for (const auto& e : g.edges()) h.add_edge(e.first, e.second);
    CHECK(canonical_key(DecoratedTriple(h, l2, p2)) == key);
  }
}

TEST_CASE("canonical key separates the I_1 and I_2 triples") {
  DualGraph g;
  g.add_vertex(0, -1);
  DecoratedTriple i1(g, {Int(1)}, {Int(0)});
  DecoratedTriple i2(g, {Int(2)}, {Int(2)});
  CHECK(canonical_key(i1) != canonical_key(i2));
}

TEST_CASE("canonical key identifies a chain with its mirror") {
  DualGraph g = chain3(-1, -3, -1);
  DecoratedTriple t(g, {Int(0), Int(2), Int(0)}, {Int(1), Int(0), Int(1)});
  DualGraph r;
  r.add_vertex_with_id(2, 0, -1);
  r.add_vertex_with_id(1, 0, -3);
  r.add_vertex_with_id(0, 0, -1);
  r.add_edge(2, 1);
  r.add_edge(1, 0);
  DecoratedTriple mirrored(r, {Int(0), Int(2), Int(0)}, {Int(1), Int(0), Int(1)});
  CHECK(canonical_key(t) == canonical_key(mirrored));
}

TEST_CASE("canonical key distinguishes decorations and multiplicity of edges") {
  DualGraph a;
  a.add_vertex(0, -2);
  a.add_vertex(0, -2);
  a.add_edge(0, 1);
  DualGraph b = a;
  b.add_edge(0, 1);
  auto z = zeros(2);
  CHECK(canonical_key(DecoratedTriple(a, z, z)) != canonical_key(DecoratedTriple(b, z, z)));

  DualGraph genus;
  genus.add_vertex(1, -2);
  genus.add_vertex(0, -2);
  genus.add_edge(0, 1);
  CHECK(canonical_key(DecoratedTriple(a, z, z)) != canonical_key(DecoratedTriple(genus, z, z)));
}

TEST_CASE("canonical key rejects graphs past the 64-vertex cap") {
  DualGraph g;
  g.add_vertex(0, -2);
  for (int i = 1; i <= 64; ++i) {
    g.add_vertex(0, -2);
    g.add_edge(i - 1, i);
  }
  CHECK(g.vertex_count() == 65);
  DecoratedTriple t(g, zeros(65), zeros(65));
  CHECK_THROWS_AS(canonical_key(t), TooLarge);
}

TEST_CASE("loops and duplicate ids are rejected") {
  DualGraph g;
  g.add_vertex(0, -1);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_vertex_with_id(0, 0, -1), Error);
}
