#include "plinth/tools/cases.hpp"


#include "case_support.hpp"
#include "plinth/error.hpp"

namespace plinth::tools {

namespace {

using Runner = Report (*)(const CaseOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> cases{
      {"sylvester", detail::case_sylvester},
      {"sp44", detail::case_sp44},
      {"m12", detail::case_m12},
      {"o8plus2", detail::case_o8plus2},
      {"factorizations", detail::case_factorizations},
      {"products", detail::case_products},
      {"classify-a6", detail::case_classify_a6},
      {"classify-sp44", detail::case_classify_sp44},
  };
  return cases;
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_case(const std::string& name, const CaseOptions& options) {
  for (const auto& [candidate, run] : registry()) {
    if (candidate == name) return run(options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown case '" + name + "'");
}

}  // namespace plinth::tools
