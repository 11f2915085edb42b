#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "innerrate/cli.hpp"

namespace {

int emit(const innerrate::RunReport& rep, bool as_json, bool as_dot) {
  if (as_json)
    std::cout << rep.json.dump(2) << "\n";
  else if (as_dot && rep.json.contains("dot"))
    std::cout << rep.json["dot"].get<std::string>();
  else
    std::cout << rep.text;
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inner rates of m-primary monomial ideals on resolution dual graphs"};
  app.require_subcommand(1);

  std::string spec_a, spec_b;
  int n_max = 6;
  std::uint64_t seed = innerrate::kDefaultSeed;
  bool json = false, dot = false, verify = false;

  CLI::App* triple = app.add_subcommand("triple", "chain, invariants and (Gamma,L,P) of an ideal");
  triple->add_option("ideal", spec_a, "ideal, e.g. \"x^2,y^2\" or {\"gens\":[[2,0],[0,2]]}")->required();
  triple->add_flag("--json", json, "emit the JSON report");
  triple->add_flag("--dot", dot, "emit the DOT graph");
  triple->add_flag("--verify", verify, "run all oracle cross-checks");
  triple->add_option("--seed", seed, "oracle seed");

  CLI::App* compare = app.add_subcommand("compare", "compare two ideals");
  compare->add_option("ideal-a", spec_a, "first ideal")->required();
  compare->add_option("ideal-b", spec_b, "second ideal")->required();
  compare->add_flag("--json", json, "emit the JSON report");
  compare->add_option("--seed", seed, "oracle seed");

  CLI::App* family = app.add_subcommand("family", "the I_n = (x^k y^{n-k}) family");
  family->add_option("n-max", n_max, "largest n")->required();
  family->add_flag("--json", json, "emit the JSON report");

  CLI::App* verify_cmd = app.add_subcommand("verify", "oracle cross-checks for an ideal");
  verify_cmd->add_option("ideal", spec_a, "ideal")->required();
  verify_cmd->add_flag("--json", json, "emit the JSON report");
  verify_cmd->add_option("--seed", seed, "oracle seed");

  CLI::App* dot_cmd = app.add_subcommand("dot", "DOT rendering of the triple");
  dot_cmd->add_option("ideal", spec_a, "ideal")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (triple->parsed()) {
      innerrate::RunReport rep = innerrate::cmd_triple(spec_a, verify, seed);
      if (dot && !json) {
        innerrate::RunReport d = innerrate::cmd_dot(spec_a);
        std::cout << d.text;
        return rep.exit_code;
      }
      return emit(rep, json, false);
    }
    if (compare->parsed()) return emit(innerrate::cmd_compare(spec_a, spec_b, seed), json, false);
    if (family->parsed()) return emit(innerrate::cmd_family(n_max, seed), json, false);
    if (verify_cmd->parsed()) return emit(innerrate::cmd_verify(spec_a, seed), json, false);
    if (dot_cmd->parsed()) return emit(innerrate::cmd_dot(spec_a), false, true);
  } catch (const innerrate::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 1;
  } catch (const innerrate::NotPrimary& e) {
    std::cerr << "NotPrimary: " << e.what() << "\n";
    return 1;
  } catch (const innerrate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
