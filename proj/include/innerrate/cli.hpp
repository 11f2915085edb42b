#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "innerrate/io.hpp"
#include "innerrate/oracle.hpp"
#include "innerrate/rate_calculus.hpp"
#include "innerrate/toric.hpp"

namespace innerrate {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Everything a command run produces; both renderings are exactly
/// reproducible from the inputs and the seed.
struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json json;
  std::string text;
  int exit_code = 0;  // 0 ok, 1 input error, 2 verification mismatch
};

struct Verdict {
  std::string check;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline nlohmann::json ray_rows_json(const MonomialIdeal& ideal, const FanChain& chain) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    RayInvariants inv = invariants_at_ray(ideal, chain[i]);
    rows.push_back({{"ray", {chain[i].p, chain[i].q}},
                    {"m", small(inv.m)},
                    {"nu", small(inv.nu)},
                    {"q", rat_str(inv.q)}});
  }
  return rows;
}

inline std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string chain_str(const FanChain& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " ";
    s += chain[i].str();
  }
  return s;
}

// Retries once with seed+1; a double failure is a genuine discrepancy.
template <typename Check>
Verdict with_retry(const std::string& name, std::uint64_t seed, Check check) {
  auto [ok, detail] = check(seed);
  if (ok) return {name, true, detail};
  auto [ok2, detail2] = check(seed + 1);
  if (ok2) return {name, true, detail2 + " (after one seed retry)"};
  return {name, false, detail2 + " (double failure)"};
}

}  // namespace detail

/// All oracle cross-checks for one ideal: generic-member multiplicities,
/// nu at every interior ray, the polar vector and the Omega^2 module.
inline std::vector<Verdict> run_verification(const MonomialIdeal& ideal,
                                             const IdealTriple& it, std::uint64_t seed) {
  std::vector<Verdict> out;
  const FanChain& chain = it.chain;

  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const Ray r = chain[i];
    RayInvariants inv = invariants_at_ray(ideal, r);
    out.push_back(detail::with_retry(
        "m(generic member) at " + r.str(), seed, [&](std::uint64_t s) {
          Rat got = generic_member(ideal, s).min_weighted_order(Rat(r.p), Rat(r.q));
          return std::pair{got == Rat(inv.m), "expected " + inv.m.str() + ", got " + rat_str(got)};
        }));
    out.push_back(detail::with_retry(
        "nu oracle at " + r.str(), seed, [&](std::uint64_t s) {
          Int got = nu_oracle(ideal, r, 5, s);
          return std::pair{got == inv.nu, "expected " + inv.nu.str() + ", got " + got.str()};
        }));
  }

  out.push_back(detail::with_retry("polar vector oracle", seed, [&](std::uint64_t s) {
    RatVec got = polar_vector_oracle(ideal, chain, s);
    bool ok = got.size() == it.triple.P.size();
    std::string g = "(";
    for (std::size_t i = 0; i < got.size(); ++i) {
      ok = ok && got[i] == Rat(it.triple.P[i]);
      if (i) g += ",";
      g += rat_str(got[i]);
    }
    return std::pair{ok, "expected " + detail::vec_str(it.triple.P) + ", got " + g + ")"};
  }));

  out.push_back(detail::with_retry("omega2 oracle", seed, [&](std::uint64_t s) {
    MonomialModule2 got = omega2_oracle(ideal, 50, s);
    MonomialModule2 want = omega2_module(ideal);
    std::string g;
    for (const auto& e : got.gens) g += e.str() + " ";
    return std::pair{got == want, "observed module {" + g + "}"};
  }));

  return out;
}

inline nlohmann::json verdicts_json(const std::vector<Verdict>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : vs) j.push_back({{"check", v.check}, {"ok", v.ok}, {"detail", v.detail}});
  return j;
}

/// triple <ideal>: chain, per-ray invariants, (Gamma, L, P) and its
/// canonical key; optional oracle verification.
inline RunReport cmd_triple(const std::string& spec, bool verify = false,
                            std::uint64_t seed = kDefaultSeed) {
  MonomialIdeal ideal = ideal_from_spec(spec);
  IdealTriple it = triple_of_ideal(ideal);

  RunReport rep;
  rep.command = "triple";
  rep.inputs = {ideal.str()};

  std::string key = canonical_key(it.triple);
  rep.json = {{"command", "triple"},
              {"ideal", ideal_to_json(ideal)},
              {"ideal_text", ideal.str()},
              {"chain", chain_to_json(it.chain)},
              {"rays", detail::ray_rows_json(ideal, it.chain)},
              {"complete_system_size", complete_system(ideal).size()},
              {"triple", triple_to_json(it.triple)},
              {"canonical_key", key},
              {"seed", seed}};

  rep.text += "ideal: " + ideal.str() + "\n";
  rep.text += "chain: " + detail::chain_str(it.chain) + "\n";
  rep.text += "ray        m     nu    q\n";
  for (const auto& row : rep.json["rays"]) {
    std::string ray = "(" + std::to_string(row["ray"][0].get<long long>()) + "," +
                      std::to_string(row["ray"][1].get<long long>()) + ")";
    ray.resize(10, ' ');
    std::string m = std::to_string(row["m"].get<long long>());
    m.resize(5, ' ');
    std::string nu = std::to_string(row["nu"].get<long long>());
    nu.resize(5, ' ');
    rep.text += ray + " " + m + " " + nu + " " + row["q"].get<std::string>() + "\n";
  }
  rep.text += "L = " + detail::vec_str(it.triple.L) + "\n";
  rep.text += "P = " + detail::vec_str(it.triple.P) + "\n";
  rep.text += "complete system size: " +
              std::to_string(complete_system(ideal).size()) +
              " (embedding dimension of the associated germ)\n";
  rep.text += "canonical key: " + key + "\n";

  if (verify) {
    std::vector<Verdict> vs = run_verification(ideal, it, seed);
    bool all_ok = true;
    for (const auto& v : vs) {
      all_ok = all_ok && v.ok;
      rep.text += std::string(v.ok ? "[OK]   " : "[FAIL] ") + v.check + ": " + v.detail + "\n";
    }
    rep.json["verifications"] = verdicts_json(vs);
    rep.json["verified"] = all_ok;
    rep.text += all_ok ? "verification verdict: OK\n" : "verification verdict: MISMATCH\n";
    if (!all_ok) rep.exit_code = 2;
  }
  return rep;
}

/// compare <A> <B>: triple isomorphism, rate-profile equality on the joint
/// refined chain, and integral-closure equality; "profiles equal ==>
/// closures equal" must hold, anything else is an engine bug.
inline RunReport cmd_compare(const std::string& spec_a, const std::string& spec_b,
                             std::uint64_t seed = kDefaultSeed) {
  MonomialIdeal a = ideal_from_spec(spec_a);
  MonomialIdeal b = ideal_from_spec(spec_b);
  IdealTriple ta = triple_of_ideal(a);
  IdealTriple tb = triple_of_ideal(b);

  bool triples_equal = canonical_key(ta.triple) == canonical_key(tb.triple);
  bool closures_equal = integral_closure(a) == integral_closure(b);

  std::vector<Ray> required;
  for (std::size_t i = 1; i + 1 < ta.chain.size(); ++i) required.push_back(ta.chain[i]);
  for (std::size_t i = 1; i + 1 < tb.chain.size(); ++i) required.push_back(tb.chain[i]);
  FanChain joint = complete_chain(std::move(required));

  bool profiles_equal = true;
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t i = 1; i + 1 < joint.size(); ++i) {
    RayInvariants ia = invariants_at_ray(a, joint[i]);
    RayInvariants ib = invariants_at_ray(b, joint[i]);
    if (ia.m != ib.m || ia.q != ib.q) {
      profiles_equal = false;
      diffs.push_back({{"ray", {joint[i].p, joint[i].q}},
                       {"m", {small(ia.m), small(ib.m)}},
                       {"q", {rat_str(ia.q), rat_str(ib.q)}}});
    }
  }
  bool implication_ok = !profiles_equal || closures_equal;

  RunReport rep;
  rep.command = "compare";
  rep.inputs = {a.str(), b.str()};
  rep.json = {{"command", "compare"},
              {"ideals", {ideal_to_json(a), ideal_to_json(b)}},
              {"joint_chain", chain_to_json(joint)},
              {"triples_isomorphic", triples_equal},
              {"rate_profiles_equal", profiles_equal},
              {"closures_equal", closures_equal},
              {"profile_differences", diffs},
              {"implication_ok", implication_ok},
              {"seed", seed}};
  rep.text += "A: " + a.str() + "\nB: " + b.str() + "\n";
  rep.text += std::string("triples: ") + (triples_equal ? "isomorphic" : "distinct") + "\n";
  rep.text += std::string("rate profiles: ") + (profiles_equal ? "equal" : "distinct") + "\n";
  for (const auto& d : diffs)
    rep.text += "  at ray (" + std::to_string(d["ray"][0].get<long long>()) + "," +
                std::to_string(d["ray"][1].get<long long>()) + "): q " +
                d["q"][0].get<std::string>() + " vs " + d["q"][1].get<std::string>() + "\n";
  rep.text += std::string("integral closures: ") + (closures_equal ? "equal" : "distinct") + "\n";
  if (!implication_ok) {
    rep.text += "ENGINE BUG: rate profiles equal but integral closures differ\n";
    rep.exit_code = 2;
  }
  return rep;
}

/// family <n-max>: the I_n = (x^k y^{n-k}) family; all triples live on the
/// same single-vertex graph and must be pairwise non-isomorphic.
inline RunReport cmd_family(int n_max, std::uint64_t seed = kDefaultSeed) {
  if (n_max < 1 || n_max > 64) throw ParseError("family size must be between 1 and 64");

  RunReport rep;
  rep.command = "family";
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> keys;
  bool fixed_graph = true;
  rep.text += "n   L    P    q(1,1)  q(2,1)\n";
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Exponent> gens;
    for (int k = 0; k <= n; ++k) gens.push_back({k, n - k});
    MonomialIdeal ideal(std::move(gens));
    IdealTriple it = triple_of_ideal(ideal);
    keys.push_back(canonical_key(it.triple));
    fixed_graph = fixed_graph && it.triple.graph.vertex_count() == 1 &&
                  it.triple.graph.vertices()[0].self_int == -1;
    RayInvariants q11 = invariants_at_ray(ideal, {1, 1});
    RayInvariants q21 = invariants_at_ray(ideal, {2, 1});
    rows.push_back({{"n", n},
                    {"L", small(it.triple.L[0])},
                    {"P", small(it.triple.P[0])},
                    {"q_11", rat_str(q11.q)},
                    {"q_21", rat_str(q21.q)},
                    {"canonical_key", keys.back()}});
    std::string line = std::to_string(n);
    line.resize(4, ' ');
    std::string l = it.triple.L[0].str();
    l.resize(5, ' ');
    std::string p = it.triple.P[0].str();
    p.resize(5, ' ');
    std::string q1 = rat_str(q11.q);
    q1.resize(8, ' ');
    rep.text += line + l + p + q1 + rat_str(q21.q) + "\n";
  }
  bool all_distinct = true;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[i] == keys[j]) all_distinct = false;
  rep.json = {{"command", "family"},
              {"n_max", n_max},
              {"rows", rows},
              {"fixed_single_vertex_graph", fixed_graph},
              {"all_distinct", all_distinct},
              {"seed", seed}};
  rep.text += all_distinct ? "all triples pairwise distinct\n"
                           : "ENGINE BUG: repeated canonical keys\n";
  if (!all_distinct || !fixed_graph) rep.exit_code = 2;
  return rep;
}

/// verify <ideal>: oracle cross-checks only.
inline RunReport cmd_verify(const std::string& spec, std::uint64_t seed = kDefaultSeed) {
  RunReport rep = cmd_triple(spec, true, seed);
  rep.command = "verify";
  rep.json["command"] = "verify";
  return rep;
}

/// dot <ideal>: DOT rendering of the triple.
inline RunReport cmd_dot(const std::string& spec) {
  MonomialIdeal ideal = ideal_from_spec(spec);
  IdealTriple it = triple_of_ideal(ideal);
  RunReport rep;
  rep.command = "dot";
  rep.inputs = {ideal.str()};
  rep.text = triple_to_dot(it.triple);
  rep.json = {{"command", "dot"}, {"dot", rep.text}};
  return rep;
}

}  // namespace innerrate
