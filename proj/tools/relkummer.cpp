#include <iostream>

#include <CLI11.hpp>

#include "relkummer/cli.hpp"

int main(int argc, char** argv) {
  using namespace relkummer;
  CLI::App app{"Relative Kummer theory over k(t)/k(t^q): module structures and verification"};
  app.require_subcommand(1);

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Basis, annihilator exponents, Jordan type and x-action");
  analyze->add_option("file", analyze_path, "instance file")->required();

  std::string verify_path;
  std::optional<std::string> verify_out;
  auto* verify = app.add_subcommand("verify", "Run the full verification chain on an instance");
  verify->add_option("file", verify_path, "instance file")->required();
  verify->add_option("--out", verify_out, "write the JSON report here");

  CampaignConfig config;
  std::optional<std::string> random_out;
  auto* random = app.add_subcommand("random", "Seeded random campaign");
  random->add_option("--count", config.count)->required();
  random->add_option("--p", config.p)->required();
  random->add_option("--l", config.l)->required();
  random->add_option("--field", config.field, "e.g. GF(5) or GF(3^2)")->required();
  random->add_option("--max-gens", config.max_gens)->capture_default_str();
  random->add_option("--max-deg", config.max_deg)->capture_default_str();
  random->add_option("--seed", config.seed)->capture_default_str();
  random->add_option("--out", random_out, "write the JSON campaign report here");

  std::optional<std::string> fault;
  auto* selftest = app.add_subcommand("selftest", "Brute-force oracle suites");
  selftest->add_option("--inject-fault", fault, "corrupt the named suite (harness check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInstance;
  }

  if (*analyze) return cmd_analyze(analyze_path, std::cout, std::cerr);
  if (*verify) return cmd_verify(verify_path, verify_out, std::cout, std::cerr);
  if (*random) return cmd_random(config, random_out, std::cout, std::cerr);
  if (*selftest) {
    if (fault) {
      const auto names = selftest_suites();
      if (std::find(names.begin(), names.end(), *fault) == names.end()) {
        std::cerr << "error: unknown suite '" << *fault << "'\n";
        return kExitInvalidInstance;
      }
    }
    return cmd_selftest(fault, std::cout, std::cerr);
  }
  return kExitInternalError;
}
