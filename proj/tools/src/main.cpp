#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "plinth/error.hpp"
#include "plinth/tools/cases.hpp"

namespace {

std::string default_data_dir() {
  if (const char* env = std::getenv("PLINTH_DATA_DIR")) return env;
  return PLINTH_DEFAULT_DATA_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace plinth::tools;
  CLI::App app{"Verification suite for 2-arc-transitive graphs with product-action automorphism groups"};
  app.require_subcommand(1);

  std::string target;
  CaseOptions options;
  std::string json_path;
  std::string data_path;
  auto* verify = app.add_subcommand("verify", "Run one case, or every case with 'all'");
  std::vector<std::string> choices = case_names();
  choices.push_back("all");
  verify->add_option("case", target, "Case name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--seed", options.seed, "Random seed")->default_val(1);
  verify->add_option("--json", json_path, "Write the JSON certificate here");
  verify->add_option("--data", data_path, "Directory with optional generator data")->check(CLI::ExistingDirectory);
  verify->add_option("--threads", options.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  verify->add_option("--max-iter", options.max_iterations, "Random search budget")->default_val(20'000);
  verify->add_flag("--deep", options.deep, "Run brute-force oracles on large cases");
  CLI11_PARSE(app, argc, argv);

  options.data_dir = default_data_dir();
  if (!data_path.empty()) options.data_path = data_path;
  Anchors anchors;
  try {
    anchors = Anchors::load(options.data_dir + "/anchors.tbl");
  } catch (const plinth::Error& e) {
    std::cerr << "warning: " << e.what() << "; anchors are reported as keys\n";
  }
  options.anchors = &anchors;

  std::vector<std::string> names = target == "all" ? case_names() : std::vector<std::string>{target};
  std::vector<Report> reports;
  for (const auto& name : names) {
    reports.push_back(run_case(name, options));
    std::cout << to_text(reports.back()) << std::flush;
  }
  if (!json_path.empty()) {
    try {
      write_json(reports, json_path);
    } catch (const plinth::Error& e) {
      std::cerr << e.what() << '\n';
      return 1;
    }
  }
  return exit_code(reports);
}
