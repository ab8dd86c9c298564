#include "case_support.hpp"

#include <algorithm>

#include "plinth/classical.hpp"
#include "plinth/error.hpp"
#include "plinth/factorization.hpp"

namespace plinth::tools::detail {

std::string spectrum_string(const OrderSpectrum& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [order, count] : s) {
    if (!first) out << ',';
    out << order << ':' << count;
    first = false;
  }
  out << '}';
  return out.str();
}

SearchOptions search_options(const CaseOptions& options, std::uint64_t salt) {
  SearchOptions out;
  out.seed = options.seed + salt;
  out.max_iterations = options.max_iterations;
  return out;
}

std::vector<SuborbitVerdict> scan_suborbits(const OrbitalData& data) {
  const PermGroup& g = data.group;
  const std::size_t n = g.degree();
  const Order stab_order = data.stabilizer.order();
  Orbit full(g, data.base);
  std::vector<SuborbitVerdict> out;
  for (std::size_t i = 1; i < data.suborbits.size(); ++i) {
    const Suborbit& s = data.suborbits[i];
    SuborbitVerdict v{i, s.representative, s.length, s.self_paired, false, false};
    if (s.self_paired) {
      std::vector<Permutation> gens = data.stabilizer.generators();
      gens.push_back(full.transporter(s.representative));
      std::vector<bool> seen(n, false);
      std::vector<Point> queue{data.base};
      seen[data.base] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& x : gens) {
          Point w = x[queue[head]];
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
      v.connected = queue.size() == n;
      const Order k = s.length;
      v.two_transitive = k >= 2 && stab_order % (k * (k - 1)) == 0 &&
                         is_k_transitive(data.stabilizer.group(), s.points, 2);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> sorted_lengths(const OrbitalData& data) {
  std::vector<std::size_t> out;
  for (const auto& s : data.suborbits) out.push_back(s.length);
  std::sort(out.begin(), out.end());
  return out;
}

void grid_and_classify(Report& report, const PermGroup& g, const SubgroupRef& socle, InclusionTag expected,
                       const std::vector<Order>& expected_projections, std::size_t expected_blocks) {
  std::vector<CartesianDecomposition> grids;
  {
    PhaseTimer timer(report, "grid search");
    grids = find_grid_decompositions(g, 2);
  }
  report.check("grid decompositions found", std::uint64_t{1}, grids.size(), "grid");
  if (grids.empty()) return;
  std::vector<std::size_t> sizes;
  for (const auto& p : grids[0].partitions()) sizes.push_back(p.size());
  report.check("blocks per partition", braced(std::vector<std::size_t>(2, expected_blocks)), braced(sizes), "grid");

  PhaseTimer timer(report, "classify");
  try {
    InclusionType type = classify_inclusion(g, socle, {socle.generators()}, grids[0], 0);
    report.check("inclusion type", std::string(to_string(expected)), std::string(to_string(type.tag)),
                 "classify.type");
    report.check("s <= 3", true, type.s <= 3, "classify.s");
    report.check("projection orders", braced(expected_projections), braced(type.projection_orders),
                 "classify.type");
    if (!type.isomorphism_test.empty()) report.notes.push_back("A ≅ B decided by " + type.isomorphism_test);
  } catch (const Error& e) {
    report.fail("inclusion type", std::string(to_string(expected)), e.what(), "classify.type");
  }
}

A6Setup build_a6(const CaseOptions& options) {
  PermGroup full10 = psl2_action(9, Psl2Flavor::kPGammaL);
  SubgroupRef socle10 = derived_subgroup(full10);
  SubgroupClassAction action = cyclic_class_action(full10, socle10, 5, search_options(options));
  SubgroupRef socle = derived_subgroup(action.group);
  return {action.group, socle, std::move(action)};
}

Sp44Setup build_sp44(const CaseOptions& options) {
  GQGeometry gq = symplectic_gq(4);
  AutomorphismSearch aut = automorphism_search(incidence_graph(gq));
  SubgroupRef socle170 = derived_subgroup(aut.group);
  SubgroupClassAction action = cyclic_class_action(aut.group, socle170, 17, search_options(options));
  SubgroupRef socle = derived_subgroup(action.group);
  return {std::move(aut), std::move(action), std::move(socle)};
}

void envelope_checks(Report& report, const SubgroupRef& socle, Order stabilizer, Order dihedral,
                     const CaseOptions& options) {
  SubgroupRef stab = point_stabilizer(socle.group(), 0);
  report.check("socle point stabilizer order", stabilizer, stab.order(), "envelope");
  std::string label = "D" + std::to_string(dihedral);
  OrderSpectrum profile = label_spectrum(label);
  if (dihedral == stabilizer) {
    report.check("socle point stabilizer spectrum", spectrum_string(profile),
                 spectrum_string(order_spectrum(stab.group())), "envelope");
  } else {
    auto sub = random_subgroup_of_order(stab.group(), dihedral, &profile, search_options(options, 17));
    report.check("dihedral subgroup of order " + std::to_string(dihedral), true, sub.has_value(), "envelope");
    report.check("index of dihedral subgroup", std::uint64_t{2}, stab.order() / dihedral, "envelope");
  }
  report.notes.push_back("dihedral of order " + std::to_string(dihedral) + " is D" + std::to_string(dihedral / 2) +
                         " when Dn has order 2n and D" + std::to_string(dihedral) + " when Dn has order n");
}

}  // namespace plinth::tools::detail
