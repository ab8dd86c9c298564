#include <array>

#include "case_support.hpp"
#include "plinth/classical.hpp"
#include "plinth/error.hpp"

namespace plinth::tools::detail {

namespace {

struct FlavorExpectation {
  Psl2Flavor flavor;
  bool two_arc_transitive;
};

// S6 ≤ G decides 2-arc-transitivity on the double-six graph.
constexpr std::array<FlavorExpectation, 5> kFlavors{{{Psl2Flavor::kPSL, false},
                                                     {Psl2Flavor::kPGL, false},
                                                     {Psl2Flavor::kPSigmaL, true},
                                                     {Psl2Flavor::kM10, false},
                                                     {Psl2Flavor::kPGammaL, true}}};

// Brute-force orbit count on 2-arcs.
std::size_t two_arc_orbits(const PermGroup& g, const Graph& gamma) {
  std::vector<std::array<Point, 3>> arcs;
  for (Point u = 0; u < gamma.vertex_count(); ++u) {
    for (Point v : gamma.neighbors(u)) {
      for (Point w : gamma.neighbors(v)) {
        if (w != u) arcs.push_back({u, v, w});
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<bool> seen(arcs.size(), false);
  auto index = [&](const std::array<Point, 3>& a) {
    return static_cast<std::size_t>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
  };
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& x : g.generators()) {
        const auto& a = arcs[queue[head]];
        std::size_t j = index({x[a[0]], x[a[1]], x[a[2]]});
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

Report case_sylvester(const CaseOptions& options) {
  Report report{"sylvester", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    std::optional<A6Setup> a6;
    std::vector<PermGroup> flavors;
    {
      PhaseTimer timer(report, "construct");
      a6 = build_a6(options);
      for (const auto& f : kFlavors) {
        PermGroup on_line = psl2_action(9, f.flavor);
        report.check(std::string("flavor identified: ") + std::string(to_string(f.flavor)),
                     std::string(to_string(f.flavor)), std::string(to_string(identify_extension_flavor(on_line))),
                     "sylvester.extension");
        std::vector<Permutation> gens;
        for (const auto& x : on_line.generators()) gens.push_back(a6->full.lift()->map(x));
        flavors.emplace_back(a6->full.degree(), gens, OrderHint{on_line.order(), HintKind::kUpperBound});
        report.check(std::string("order on 36 points: ") + std::string(to_string(f.flavor)), on_line.order(),
                     flavors.back().order(), "sylvester.flavor");
      }
    }
    report.check("class action degree", std::uint64_t{36}, a6->full.degree(), "sylvester.graph");

    std::optional<Graph> gamma;
    {
      PhaseTimer timer(report, "suborbits");
      for (std::size_t i = 0; i < kFlavors.size(); ++i) {
        const std::string name(to_string(kFlavors[i].flavor));
        OrbitalData data = suborbits(flavors[i], 0);
        auto verdicts = scan_suborbits(data);
        std::vector<std::size_t> hits;
        for (const auto& v : verdicts) {
          if (v.self_paired && v.connected && v.two_transitive) hits.push_back(v.index);
        }
        report.notes.push_back(name + " suborbit lengths " + braced(sorted_lengths(data)));
        report.check("connected 2-transitive suborbits: " + name, std::uint64_t{kFlavors[i].two_arc_transitive ? 1U : 0U},
                     hits.size(), "suborbit.scan");
        if (kFlavors[i].flavor == Psl2Flavor::kPSigmaL) {
          report.check("suborbit lengths: PSigmaL", "{1,5,5,5,20}", braced(sorted_lengths(data)), "suborbit.scan");
          if (hits.size() == 1) {
            gamma = orbital_graph(flavors[i], 0, data.suborbits[hits[0]].representative);
          }
        }
      }
    }
    if (!gamma) {
      report.fail("graph constructed", "true", "no candidate suborbit", "sylvester.graph");
      return report;
    }
    report.check("vertices", std::uint64_t{36}, gamma->vertex_count(), "sylvester.graph");
    report.check("valency", std::string("5"), std::to_string(gamma->valency()), "sylvester.graph");
    report.check("connected", true, is_connected(*gamma).connected, "connected");

    {
      PhaseTimer timer(report, "two-arc");
      std::vector<std::string> arc_flavors;
      for (std::size_t i = 0; i < kFlavors.size(); ++i) {
        const std::string name(to_string(kFlavors[i].flavor));
        bool tat = two_arc_transitive(flavors[i], *gamma);
        report.check("2-arc-transitive: " + name, kFlavors[i].two_arc_transitive, tat, "sylvester.flavor");
        if (tat) arc_flavors.push_back(name);
        if (options.deep) {
          report.check("2-arc orbit count (brute force): " + name,
                       std::uint64_t{kFlavors[i].two_arc_transitive ? 1U : 0U},
                       two_arc_orbits(flavors[i], *gamma) == 1 ? 1U : 0U, "two-arc");
        }
      }
      report.check("2-arc-transitive flavors", std::string("{PSigmaL,M10,PGammaL}"), braced(arc_flavors),
                   "sylvester.extension");
    }
    grid_and_classify(report, a6->full, a6->socle, InclusionTag::kCD2Sim, {60, 60}, 6);
    report.notes.push_back(
        "M10 is 2-arc-transitive on this graph: its stabilizer 5:4 is sharply 2-transitive on the 5 neighbours, "
        "so every G with |Aut(A6):G| <= 2 other than PGL(2,9) works, not only those containing S6");
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "sylvester.graph");
  }
  return report;
}

Report case_classify_a6(const CaseOptions& options) {
  Report report{"classify-a6", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    std::optional<A6Setup> a6;
    {
      PhaseTimer timer(report, "construct");
      a6 = build_a6(options);
    }
    report.check("socle order", std::uint64_t{360}, a6->socle.order(), "classify.type");
    grid_and_classify(report, a6->full, a6->socle, InclusionTag::kCD2Sim, {60, 60}, 6);
    PhaseTimer timer(report, "envelope");
    envelope_checks(report, a6->socle, 10, 10, options);
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "classify.type");
  }
  return report;
}

}  // namespace plinth::tools::detail
