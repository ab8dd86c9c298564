#include <set>
#include <unordered_set>

#include "case_support.hpp"
#include "plinth/error.hpp"

namespace plinth::tools::detail {

namespace {

// Every 2-arc lies in the orbit of one fixed 2-arc.
bool two_arcs_in_one_orbit(const PermGroup& g, const Graph& gamma) {
  const std::uint64_t n = gamma.vertex_count();
  const std::uint64_t k = static_cast<std::uint64_t>(gamma.valency());
  Point v = gamma.neighbors(0)[0];
  Point w = gamma.neighbors(v)[0] == 0 ? gamma.neighbors(v)[1] : gamma.neighbors(v)[0];
  auto key = [n](Point a, Point b, Point c) { return (std::uint64_t{a} * n + b) * n + c; };
  std::unordered_set<std::uint64_t> seen{key(0, v, w)};
  std::vector<std::array<Point, 3>> queue{{0, v, w}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& x : g.generators()) {
      const auto& a = queue[head];
      std::array<Point, 3> b{x[a[0]], x[a[1]], x[a[2]]};
      if (seen.insert(key(b[0], b[1], b[2])).second) queue.push_back(b);
    }
  }
  return seen.size() == n * k * (k - 1);
}

}  // namespace

Report case_sp44(const CaseOptions& options) {
  Report report{"sp44", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    std::optional<Sp44Setup> sp;
    {
      PhaseTimer timer(report, "construct");
      sp = build_sp44(options);
    }
    const PermGroup& x = sp->action.group;
    report.check("incidence graph automorphism group order", std::uint64_t{3'916'800}, sp->aut.group.order(),
                 "sp44.aut");
    report.check("socle order", std::uint64_t{979'200}, sp->socle.order(), "sp44.aut");
    report.check("class action degree", std::uint64_t{14'400}, x.degree(), "sp44.degree");

    std::optional<OrbitalData> data;
    std::vector<SuborbitVerdict> verdicts;
    {
      PhaseTimer timer(report, "suborbits");
      data = suborbits(x, 0);
      verdicts = scan_suborbits(*data);
    }
    report.check("point stabilizer order", std::uint64_t{272}, data->stabilizer.order(), "sp44.graph");
    std::vector<std::size_t> hits;
    std::size_t self_paired = 0;
    for (const auto& v : verdicts) {
      self_paired += v.self_paired;
      if (v.self_paired && v.connected && v.two_transitive) hits.push_back(v.index);
    }
    report.notes.push_back("suborbit lengths " + braced(sorted_lengths(*data)));
    report.notes.push_back(std::to_string(self_paired) + " self-paired nontrivial suborbits scanned");
    report.check("connected 2-transitive suborbits", std::uint64_t{1}, hits.size(), "suborbit.scan");
    if (hits.size() != 1) return report;
    const Suborbit& hit = data->suborbits[hits[0]];
    report.check("hit suborbit length", std::uint64_t{17}, hit.length, "sp44.graph");

    Graph gamma;
    {
      PhaseTimer timer(report, "graph");
      gamma = orbital_graph(x, 0, hit.representative);
    }
    report.check("valency", std::string("17"), std::to_string(gamma.valency()), "sp44.graph");
    report.check("connected", true, is_connected(gamma).connected, "connected");
    {
      PhaseTimer timer(report, "two-arc");
      report.check("2-arc-transitive", true, two_arc_transitive(x, gamma), "two-arc");
      if (options.deep) report.check("2-arcs form one orbit (brute force)", true, two_arcs_in_one_orbit(x, gamma), "two-arc");
    }

    {
      PhaseTimer timer(report, "z");
      // Point 0 is <y> for the class representative y; its image z fixes 0.
      Permutation z = x.lift()->map(sp->action.members[0]);
      report.check("order of z", std::uint64_t{17}, z.order(), "sp44.z");
      auto nbrs = gamma.neighbors(0);
      std::set<Point> orbit;
      Permutation power(x.degree());
      for (int i = 0; i < 17; ++i) {
        orbit.insert(power[nbrs[0]]);
        power = power * z;
      }
      bool regular = orbit.size() == 17 && std::equal(orbit.begin(), orbit.end(), nbrs.begin(), nbrs.end());
      report.check("Z regular on the neighbourhood", true, regular, "sp44.z");

      Permutation t = Orbit(x, 0).transporter(nbrs[0]);
      Permutation zt = z.conjugate(t);
      std::set<Permutation> members;
      Permutation p(x.degree());
      for (int i = 0; i < 17; ++i) {
        members.insert(p);
        p = p * z;
      }
      std::size_t meet = 0;
      Permutation q(x.degree());
      for (int i = 0; i < 17; ++i) {
        meet += members.count(q);
        q = q * zt;
      }
      report.check("|Z ∩ Z^x| for a neighbour transporter x", std::uint64_t{1}, meet, "sp44.z-meet");
    }

    {
      PhaseTimer timer(report, "stabilizers");
      auto index_two = index_two_subgroups(x);
      std::vector<Order> orders;
      for (const auto& h : index_two) {
        if (is_transitive(h.group())) orders.push_back(point_stabilizer(h.group(), 0).order());
      }
      std::sort(orders.begin(), orders.end());
      report.check("transitive index-2 subgroup stabilizer orders", "{136}", braced(orders), "sp44.graph");
      report.check("socle point stabilizer order", std::uint64_t{68},
                   point_stabilizer(sp->socle.group(), 0).order(), "sp44.graph");
    }
    grid_and_classify(report, x, sp->socle, InclusionTag::kCD2Sim, {8160, 8160}, 120);
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "sp44.graph");
  }
  return report;
}

Report case_classify_sp44(const CaseOptions& options) {
  Report report{"classify-sp44", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    std::optional<Sp44Setup> sp;
    {
      PhaseTimer timer(report, "construct");
      sp = build_sp44(options);
    }
    grid_and_classify(report, sp->action.group, sp->socle, InclusionTag::kCD2Sim, {8160, 8160}, 120);
    PhaseTimer timer(report, "envelope");
    envelope_checks(report, sp->socle, 68, 34, options);
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "classify.type");
  }
  return report;
}

}  // namespace plinth::tools::detail
