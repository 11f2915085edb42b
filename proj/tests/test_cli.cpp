#include <doctest.h>

#include <string>

#include "innerrate/cli.hpp"

using namespace innerrate;

TEST_CASE("triple command reproduces the (x^2,y^2) report") {
  RunReport rep = cmd_triple("x^2,y^2", /*verify=*/true);
  CHECK(rep.exit_code == 0);
  CHECK(rep.json["verified"] == true);

  const auto& rays = rep.json["rays"];
  REQUIRE(rays.size() == 3);
  CHECK(rays[0]["ray"] == nlohmann::json({2, 1}));
  CHECK(rays[0]["m"] == 2);
  CHECK(rays[0]["nu"] == 5);
  CHECK(rays[0]["q"] == "2");
  CHECK(rays[1]["q"] == "1");

  CHECK(rep.json["triple"]["L"] == nlohmann::json({{"0", 0}, {"1", 2}, {"2", 0}}));
  CHECK(rep.json["triple"]["P"] == nlohmann::json({{"0", 1}, {"1", 0}, {"2", 1}}));
  CHECK(rep.text.find("verification verdict: OK") != std::string::npos);
}

TEST_CASE("triple command on the smooth germ and on JSON input") {
  RunReport rep = cmd_triple("x,y");
  CHECK(rep.json["triple"]["vertices"].size() == 1);
  CHECK(rep.json["triple"]["L"]["0"] == 1);
  CHECK(rep.json["triple"]["P"]["0"] == 0);

  RunReport rep_json = cmd_triple(R"({"gens": [[1,0],[0,1]]})");
  CHECK(rep_json.json["canonical_key"] == rep.json["canonical_key"]);
}

TEST_CASE("input errors surface as the documented exceptions") {
  CHECK_THROWS_AS(cmd_triple("x^2"), NotPrimary);
  CHECK_THROWS_AS(cmd_triple("x^2, zebra"), ParseError);
  CHECK_THROWS_AS(cmd_triple(R"({"gens": [[2,0]]})"), NotPrimary);
  CHECK_THROWS_AS(cmd_triple(R"({"gens": "nope"})"), ParseError);
  CHECK_THROWS_AS(cmd_family(0), ParseError);
  CHECK_THROWS_AS(cmd_family(65), ParseError);
}

TEST_CASE("compare: the paper's counterexample pair") {
  RunReport rep = cmd_compare("x^2,y^2", "x^2,xy,y^2");
  CHECK(rep.exit_code == 0);
  CHECK(rep.json["closures_equal"] == true);
  CHECK(rep.json["rate_profiles_equal"] == false);
  CHECK(rep.json["triples_isomorphic"] == false);
  CHECK(rep.json["implication_ok"] == true);
  bool found = false;
  for (const auto& d : rep.json["profile_differences"])
    if (d["ray"] == nlohmann::json({2, 1})) {
      CHECK(d["q"][0] == "2");
      CHECK(d["q"][1] == "3/2");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("compare: identical ideals and the I_2 vs I_3 pair") {
  RunReport same = cmd_compare("x,y", "x,y");
  CHECK(same.json["triples_isomorphic"] == true);
  CHECK(same.json["rate_profiles_equal"] == true);
  CHECK(same.json["closures_equal"] == true);

  RunReport fam = cmd_compare("y^2,xy,x^2", "y^3,xy^2,x^2y,x^3");
  CHECK(fam.json["triples_isomorphic"] == false);
  CHECK(fam.json["closures_equal"] == false);
}

TEST_CASE("family command") {
  RunReport one = cmd_family(1);
  CHECK(one.json["rows"].size() == 1);
  CHECK(one.json["rows"][0]["P"] == 0);

  RunReport three = cmd_family(3);
  CHECK(three.json["all_distinct"] == true);
  CHECK(three.exit_code == 0);

  RunReport six = cmd_family(6);
  CHECK(six.json["fixed_single_vertex_graph"] == true);
  std::vector<std::string> want_q = {"2", "3/2", "4/3", "5/4", "6/5", "7/6"};
  for (int n = 1; n <= 6; ++n) {
    CHECK(six.json["rows"][n - 1]["L"] == n);
    CHECK(six.json["rows"][n - 1]["P"] == 2 * n - 2);
    CHECK(six.json["rows"][n - 1]["q_11"] == "1");
    CHECK(six.json["rows"][n - 1]["q_21"] == want_q[n - 1]);
  }
}

TEST_CASE("emitted triple JSON round-trips through the canonical key") {
  for (const std::string spec : {"x^2,y^2", "x,y", "x^3,xy,y^2", "x^2,y^3"}) {
    RunReport rep = cmd_triple(spec);
    DecoratedTriple parsed = triple_from_json(rep.json["triple"]);
    CHECK(canonical_key(parsed) == rep.json["canonical_key"].get<std::string>());
  }
}

TEST_CASE("verify command passes on paper examples") {
  CHECK(cmd_verify("x^2,y^2").exit_code == 0);
  CHECK(cmd_verify("x^2,xy,y^2").exit_code == 0);
  CHECK(cmd_verify("x,y").exit_code == 0);
}

TEST_CASE("dot rendering carries the decorated labels") {
  RunReport rep = cmd_dot("x,y");
  CHECK(rep.text.find("graph triple {") != std::string::npos);
  CHECK(rep.text.find("[E²=-1, g=0, L=1, P=0]") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RunReport a = cmd_triple("x^2,y^2", true, 12345);
  RunReport b = cmd_triple("x^2,y^2", true, 12345);
  CHECK(a.json == b.json);
  CHECK(a.text == b.text);
}
