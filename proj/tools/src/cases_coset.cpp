#include <algorithm>
#include <filesystem>

#include "case_support.hpp"
#include "plinth/error.hpp"
#include "plinth/generator_file.hpp"

namespace plinth::tools::detail {

namespace {

// Validates a generator file against its own declared order.
PermGroup validated_group(Report& report, const std::string& label, const GeneratorFile& file, Order expected,
                          const std::string& anchor) {
  std::optional<OrderHint> hint;
  if (file.expected_order) hint = OrderHint{*file.expected_order, HintKind::kClaimed};
  PermGroup g(file.degree, file.generators, hint);
  report.check(label + " order", expected, g.order(), anchor);
  return g;
}

void scan_report(Report& report, const PermGroup& g, const CaseOptions& options, const std::string& anchor) {
  OrbitalData data = suborbits(g, 0);
  auto verdicts = scan_suborbits(data);
  std::size_t hits = 0;
  std::size_t self_paired = 0;
  for (const auto& v : verdicts) {
    self_paired += v.self_paired;
    hits += v.self_paired && v.connected && v.two_transitive;
    if (options.deep && v.self_paired && v.length >= 2) {
      Graph gamma = orbital_graph(g, 0, v.representative);
      report.check("suborbit " + std::to_string(v.index) + " 2-transitive (graph route)", v.two_transitive,
                   two_arc_transitive(g, gamma), "two-arc");
      report.check("suborbit " + std::to_string(v.index) + " connected (graph route)", v.connected,
                   is_connected(gamma).connected, "connected");
    }
  }
  report.notes.push_back("suborbit lengths " + braced(sorted_lengths(data)));
  report.notes.push_back(std::to_string(self_paired) + " self-paired nontrivial suborbits scanned");
  report.check("connected 2-transitive suborbits", std::uint64_t{0}, hits, anchor);
}

}  // namespace

Report case_m12(const CaseOptions& options) {
  Report report{"m12", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    std::optional<PermGroup> coset;
    {
      PhaseTimer timer(report, "construct");
      GeneratorFile file = load_generators(options.data_dir + "/m12.gens");
      PermGroup m12 = validated_group(report, "M12", file, 95'040, "m12.data");
      std::vector<Point> all(m12.degree());
      for (Point p = 0; p < all.size(); ++p) all[p] = p;
      report.check("M12 5-transitive", true, is_k_transitive(m12, all, 5), "m12.data");

      // L2(11) transitive on the 12 points.
      OrderSpectrum profile{{1, 1}, {2, 55}, {3, 110}, {5, 264}, {6, 110}, {11, 120}};
      auto h = random_subgroup_of_order(m12, 660, &profile, search_options(options),
                                        [](const PermGroup& k) { return is_transitive(k); });
      report.check("transitive L2(11) found", true, h.has_value(), "m12.data");
      if (!h) return report;
      coset = coset_action(m12, *h).group;
    }
    report.check("coset action degree", std::uint64_t{144}, coset->degree(), "m12.data");
    PhaseTimer timer(report, "suborbits");
    scan_report(report, *coset, options, "m12.scan");
    report.notes.push_back("M12.2 on the same 144 points is not evaluated");
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "m12.scan");
  }
  return report;
}

Report case_o8plus2(const CaseOptions& options) {
  Report report{"o8plus2", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  if (!options.data_path) {
    report.skip("no --data directory with o8plus2.gens and g2.gens");
    return report;
  }
  namespace fs = std::filesystem;
  const fs::path dir(*options.data_path);
  if (!fs::exists(dir / "o8plus2.gens") || !fs::exists(dir / "g2.gens")) {
    report.skip("--data directory lacks o8plus2.gens or g2.gens");
    return report;
  }
  try {
    std::optional<PermGroup> coset;
    {
      PhaseTimer timer(report, "construct");
      PermGroup omega = validated_group(report, "O8+(2) simple group", load_generators((dir / "o8plus2.gens").string()),
                                        174'182'400, "o8plus2.scan");
      GeneratorFile sub = load_generators((dir / "g2.gens").string());
      PermGroup g2 = validated_group(report, "G2(2)", sub, 12'096, "o8plus2.scan");
      if (report.status == Status::kFail) return report;
      SubgroupRef h(omega, sub.generators, OrderHint{g2.order(), HintKind::kUpperBound});
      coset = coset_action(omega, h).group;
    }
    report.check("coset action degree", std::uint64_t{14'400}, coset->degree(), "o8plus2.scan");
    PhaseTimer timer(report, "suborbits");
    OrbitalData data = suborbits(*coset, 0);
    auto lengths = sorted_lengths(data);
    report.notes.push_back("suborbit lengths " + braced(lengths));
    report.check("suborbit of length 28 present", false, std::count(lengths.begin(), lengths.end(), 28) > 0,
                 "o8plus2.scan");
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "o8plus2.scan");
  }
  return report;
}

}  // namespace plinth::tools::detail
