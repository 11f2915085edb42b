#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "innerrate/errors.hpp"
#include "innerrate/monomial_ideal.hpp"
#include "innerrate/toric.hpp"
#include "innerrate/triple.hpp"

namespace innerrate {

inline long long small(const Int& x) { return x.convert_to<long long>(); }

/// Schema: {vertices:[{id,genus,self_int}], edges:[[id,id]], L:{id:int}, P:{id:int}}
inline nlohmann::json triple_to_json(const DecoratedTriple& t) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : t.graph.vertices())
    j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}, {"self_int", v.self_int}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : t.graph.edges()) j["edges"].push_back({u, v});
  j["L"] = nlohmann::json::object();
  j["P"] = nlohmann::json::object();
  for (std::size_t i = 0; i < t.graph.vertex_count(); ++i) {
    std::string key = std::to_string(t.graph.vertices()[i].id);
    j["L"][key] = small(t.L[i]);
    j["P"][key] = small(t.P[i]);
  }
  return j;
}

inline DecoratedTriple triple_from_json(const nlohmann::json& j) {
  try {
    DualGraph g;
    for (const auto& v : j.at("vertices"))
      g.add_vertex_with_id(v.at("id").get<int>(), v.at("genus").get<int>(),
                           v.at("self_int").get<long long>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<Int> l(g.vertex_count()), p(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      std::string key = std::to_string(g.vertices()[i].id);
      l[i] = Int(j.at("L").at(key).get<long long>());
      p[i] = Int(j.at("P").at(key).get<long long>());
    }
    return DecoratedTriple(std::move(g), std::move(l), std::move(p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad triple JSON: ") + e.what());
  }
}

/// One node per vertex labeled "id [E²=s, g=g, L=l, P=p]".
inline std::string triple_to_dot(const DecoratedTriple& t) {
  std::string out = "graph triple {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.graph.vertex_count(); ++i) {
    const auto& v = t.graph.vertices()[i];
    out += "  v" + std::to_string(v.id) + " [label=\"" + std::to_string(v.id) +
           " [E²=" + std::to_string(v.self_int) + ", g=" + std::to_string(v.genus) +
           ", L=" + t.L[i].str() + ", P=" + t.P[i].str() + "]\"];\n";
  }
  for (const auto& [u, v] : t.graph.edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back({g.a, g.b});
  return {{"gens", gens}};
}

/// Accepts the text format "x^2, x*y^3, y^4" or the JSON alternative
/// {"gens": [[2,0],[1,3],[0,4]]}.
inline MonomialIdeal ideal_from_spec(const std::string& spec) {
  std::size_t i = spec.find_first_not_of(" \t\n");
  if (i != std::string::npos && spec[i] == '{') {
    nlohmann::json j = nlohmann::json::parse(spec, nullptr, false);
    if (j.is_discarded() || !j.contains("gens") || !j["gens"].is_array())
      throw ParseError("bad ideal JSON, expected {\"gens\": [[a,b],...]}");
    std::vector<Exponent> gens;
    for (const auto& g : j["gens"]) {
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
          !g[1].is_number_integer() || g[0].get<long long>() < 0 || g[1].get<long long>() < 0)
        throw ParseError("bad ideal JSON generator, expected [a,b] with a,b >= 0");
      gens.push_back({g[0].get<long long>(), g[1].get<long long>()});
    }
    return MonomialIdeal(std::move(gens));
  }
  return parse_ideal(spec);
}

inline nlohmann::json chain_to_json(const FanChain& chain) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : chain) j.push_back({r.p, r.q});
  return j;
}

}  // namespace innerrate
