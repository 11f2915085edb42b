#pragma once

#include <cstdint>
#include <vector>

#include "innerrate/errors.hpp"
#include "innerrate/monomial_ideal.hpp"
#include "innerrate/poly2.hpp"
#include "innerrate/toric.hpp"

namespace innerrate {

/// splitmix64; fixed seeds make every oracle run reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// nonzero integer in [1, 10^6], the stand-in for a generic coefficient
  std::int64_t coefficient() { return static_cast<std::int64_t>(next() % 1'000'000) + 1; }
};

/// Generic member of the ideal: sum of the complete generator system
/// (f_i, x f_i, y f_i) with pseudo-random nonzero integer coefficients.
/// The enlarged system is precomplete, which pairs of minimal generators
/// are not in general ((x^4, y^2) misses y^3 = d(y^2)^d(xy^2)); the
/// wedges of a precomplete system are what attain nu_v(I). Distinct
/// monomials cannot cancel, so the weighted order at any ray is m_v(I).
inline Poly2 generic_member(const MonomialIdeal& ideal, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Poly2 f;
  for (const auto& g : complete_system(ideal)) f.add_term(g, Rat(rng.coefficient()));
  return f;
}

/// nu_v(I) by brute force: minimum over generic pairs of the order of
/// vanishing of jacobian(F_a, F_b) dx^dy at the ray, which adds p + q - 1
/// to the weighted order of the jacobian polynomial.
inline Int nu_oracle(const MonomialIdeal& ideal, const Ray& r, int trials,
                     std::uint64_t seed = 0x5EED) {
  if (!r.is_interior()) throw BoundaryRay("nu_oracle needs an interior ray");
  if (trials < 1) throw Error("nu_oracle needs at least one trial");
  SplitMix64 master(seed);
  bool found = false;
  Int best = 0;
  for (int t = 0; t < trials; ++t) {
    Poly2 fa = generic_member(ideal, master.next());
    Poly2 fb = generic_member(ideal, master.next());
    Poly2 h = jacobian(fa, fb);
    if (h.is_zero()) continue;
    Rat w = h.min_weighted_order(Rat(r.p), Rat(r.q));
    Int ord = to_int(w) + r.p + r.q - 1;
    if (!found || ord < best) best = ord, found = true;
  }
  if (!found) throw AllJacobiansZero("all sampled jacobians vanished");
  return best;
}

/// P-vector by brute force: h = jacobian of one generic pair cuts out the
/// polar curve, and the total-transform relation gives
/// strict . E_v = -(M m(h))_v at each interior ray of the chain.
inline RatVec polar_vector_oracle(const MonomialIdeal& ideal, const FanChain& chain,
                                  std::uint64_t seed = 0x5EED) {
  SplitMix64 master(seed);
  Poly2 h = jacobian(generic_member(ideal, master.next()),
                     generic_member(ideal, master.next()));
  if (h.is_zero()) throw AllJacobiansZero("generic pair has vanishing jacobian");
  DualGraph graph = chain_graph(chain);
  const std::size_t n = graph.vertex_count();
  RatVec mh(n);
  for (std::size_t i = 0; i < n; ++i)
    mh[i] = h.min_weighted_order(Rat(chain[i + 1].p), Rat(chain[i + 1].q));
  RatVec mm = graph.intersection_matrix() * mh;
  for (auto& x : mm) x = -x;
  return mm;
}

/// Omega^2_I by brute force: wedge differentials of random O-combinations
/// g = sum g_i f_i with random polynomial coefficients of degree <= 3,
/// and span the observed monomial supports.
inline MonomialModule2 omega2_oracle(const MonomialIdeal& ideal, int samples,
                                     std::uint64_t seed = 0x5EED) {
  if (samples < 1) throw Error("omega2_oracle needs at least one sample");
  SplitMix64 rng(seed);
  auto random_coefficient_poly = [&rng] {
    Poly2 p;
    for (std::int64_t s = 0; s <= 3; ++s)
      for (std::int64_t t = 0; t + s <= 3; ++t)
        if (rng.next() % 2 == 0) p.add_term({s, t}, Rat(rng.coefficient()));
    return p;
  };
  auto random_combination = [&] {
    Poly2 g;
    for (const auto& f : ideal.generators())
      g += random_coefficient_poly() * Poly2::monomial(f, Rat(1));
    return g;
  };
  std::vector<Exponent> support;
  for (int s = 0; s < samples; ++s) {
    Poly2 w = jacobian(random_combination(), random_combination());
    for (const auto& [e, c] : w.terms()) support.push_back(e);
  }
  return MonomialModule2(std::move(support));
}

}  // namespace innerrate
