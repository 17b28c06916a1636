#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynr/scenario.hpp"

namespace {

int run_verify(const dynr::RunOptions& options, const std::string& output_path) {
  dynr::RunResult result = dynr::run_scenario(options);
  std::string text = result.report.dump(2);
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "cannot write report to " << output_path << "\n";
      return 2;
    }
    out << text << "\n";
  }
  std::cout << text << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs dynamical r-matrices over abelian and Poisson-Lie "
               "bases and certifies their defining identities numerically."};
  app.require_subcommand(1);

  dynr::RunOptions options;
  std::vector<std::string> epsilon_args;
  std::string output_path;

  CLI::App* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify->add_option("--scenario", options.scenario, "Scenario name")->required();
  verify->add_option("--epsilon", epsilon_args,
                     "Epsilon values, e.g. 0.5,2,1+0.3i (default: per scenario)")
      ->delimiter(',');
  verify->add_option("--samples", options.samples, "Base points per epsilon")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", options.seed, "Sampler seed");
  verify->add_option("--radius", options.radius, "Sampling radius")
      ->check(CLI::PositiveNumber);
  verify->add_option("--output", output_path, "Write the JSON report here too");
  verify->add_option("--tolerance-tier", options.tolerance_tier,
                     "Override residual tolerances")
      ->check(CLI::IsMember({"analytic", "fd"}));
  verify->add_option("--config", options.config_path,
                     "Algebra definition file for the custom-* scenarios");

  CLI::App* list = app.add_subcommand("list-scenarios", "List scenario names");

  CLI::App* describe =
      app.add_subcommand("describe", "Explain what a scenario checks");
  std::string describe_name;
  describe->add_option("--scenario", describe_name, "Scenario name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const dynr::ScenarioInfo& info : dynr::list_scenarios())
        std::cout << info.name << "  -  " << info.description << "\n";
      return 0;
    }
    if (describe->parsed()) {
      std::cout << dynr::describe_scenario(describe_name);
      return 0;
    }
    for (const std::string& e : epsilon_args)
      options.epsilons.push_back(dynr::parse_complex(e));
    return run_verify(options, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
