#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plinth/tools/report.hpp"

namespace plinth::tools {

struct CaseOptions {
  std::uint64_t seed = 1;
  std::string data_dir;                  // shipped tables and generators
  std::optional<std::string> data_path;  // user-supplied generator data
  std::size_t threads = 1;
  std::size_t max_iterations = 20'000;
  bool deep = false;                     // brute-force oracles on large cases
  const Anchors* anchors = nullptr;
};

const std::vector<std::string>& case_names();

// Unknown names throw InvalidArgument; every other failure is recorded in the
// report.
Report run_case(const std::string& name, const CaseOptions& options);

}  // namespace plinth::tools
