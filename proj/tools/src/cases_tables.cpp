#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "case_support.hpp"
#include "plinth/error.hpp"
#include "plinth/factorization.hpp"
#include "plinth/graph.hpp"

namespace plinth::tools::detail {

namespace {

struct RowOutcome {
  std::optional<FactorizationRecord> record;
  std::string error;
};

// Rows are claimed from a shared counter; outcomes land in row order, so the
// report does not depend on the thread count.
std::vector<RowOutcome> verify_rows(const std::vector<FactorizationRow>& rows, const CaseOptions& options) {
  std::vector<RowOutcome> out(rows.size());
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard guard(lock);
        if (next == rows.size()) return;
        i = next++;
      }
      try {
        out[i].record = verify_psl2_factorization_row(rows[i], search_options(options, rows[i].line));
      } catch (const Error& e) {
        out[i].error = e.what();
      }
    }
  };
  const std::size_t count = std::clamp<std::size_t>(options.threads, 1, rows.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

// (u, w1) and (u, w2) lie in distinct stabilizer orbits on ordered pairs.
bool pairs_separated(const PermGroup& stab, std::pair<Point, Point> from, std::pair<Point, Point> to) {
  std::set<std::pair<Point, Point>> seen{from};
  std::vector<std::pair<Point, Point>> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& x : stab.generators()) {
      std::pair<Point, Point> img{x[queue[head].first], x[queue[head].second]};
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen.count(to) == 0;
}

void square_checks(Report& report, const std::string& label, const Graph& base, Order aut_order) {
  PermGroup aut = graph_automorphism_group(ColoredGraph{base, std::vector<std::uint32_t>(base.vertex_count(), 0)});
  report.check(label + " automorphism group order", aut_order, aut.order(), "products.power");
  auto wreath = product_action_wreath(aut, 2, symmetric_group(2));
  Graph square = direct_power(base, 2);
  const std::string name = label + "^2";
  bool preserves = std::all_of(wreath.group.generators().begin(), wreath.group.generators().end(),
                               [&](const Permutation& x) { return is_automorphism(square, x); });
  report.check(name + " preserved by Aut wr S2", true, preserves, "products.power");
  report.check(name + " vertex-transitive", true, is_transitive(wreath.group), "products.power");
  report.check(name + " arc-transitivity level", std::uint64_t{1},
               static_cast<std::uint64_t>(s_arc_transitivity_max(wreath.group, square, 3)), "products.power");
  report.check(name + " 2-arc-transitive", false, two_arc_transitive(wreath.group, square), "products.power");

  // Γ²((α,α)) = Γ(α) × Γ(α).
  const Point alpha = 0;
  std::vector<Point> expected;
  for (Point a : base.neighbors(alpha)) {
    for (Point b : base.neighbors(alpha)) expected.push_back(wreath.codec.encode(std::vector<Point>{a, b}));
  }
  std::sort(expected.begin(), expected.end());
  const Point diag = wreath.codec.encode(std::vector<Point>{alpha, alpha});
  auto nbrs = square.neighbors(diag);
  report.check(name + " neighbourhood law at a diagonal vertex", true,
               std::equal(expected.begin(), expected.end(), nbrs.begin(), nbrs.end()), "products.neighborhood");

  Point b1 = base.neighbors(alpha)[0];
  Point b2 = base.neighbors(alpha)[1];
  Point u = wreath.codec.encode(std::vector<Point>{b1, b1});
  Point w1 = wreath.codec.encode(std::vector<Point>{b1, b2});
  Point w2 = wreath.codec.encode(std::vector<Point>{b2, b2});
  report.check(name + " 2-arcs via (b1,b1) split by Hamming distance", true,
               pairs_separated(point_stabilizer(wreath.group, diag).group(), {u, w1}, {u, w2}), "products.power");
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Point, Point>> edges;
  for (Point u = 0; u < n; ++u) {
    for (Point v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Graph petersen_graph() {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < 5; ++a) {
    for (Point b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::pair<Point, Point>> edges;
  for (Point i = 0; i < pairs.size(); ++i) {
    for (Point j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return Graph(pairs.size(), edges);
}

}  // namespace

Report case_factorizations(const CaseOptions& options) {
  Report report{"factorizations", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    auto rows = load_factorization_table(options.data_dir + "/psl2_factorizations.tbl");
    std::vector<RowOutcome> outcomes;
    {
      PhaseTimer timer(report, "rows");
      outcomes = verify_rows(rows, options);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const std::string name =
          "q=" + std::to_string(row.q) + " " + row.a_label + "·" + row.b_label + " |A∩B|";
      const std::string anchor = "factor." + row.anchor;
      if (!outcomes[i].record) {
        report.fail(name, std::to_string(row.meet_order), outcomes[i].error, anchor);
        continue;
      }
      const auto& rec = *outcomes[i].record;
      report.check(name, row.meet_order, rec.meet_order, anchor);
      report.check("q=" + std::to_string(row.q) + " " + row.a_label + "·" + row.b_label + " = T", true,
                   rec.verified, anchor);
    }

    PhaseTimer timer(report, "cross-check");
    auto projections = load_projection_table(options.data_dir + "/psl2_projections.tbl");
    auto conflicts = cross_check_tables(projections, rows);
    std::vector<std::string> described;
    for (const auto& c : conflicts) {
      described.push_back(c.family + "@q=" + std::to_string(c.q) + ":" + c.a_label + "·" + c.b_label + "(meet " +
                          std::to_string(c.meet_order) + ")");
    }
    report.check("projection/factorization conflicts", std::string("{}"), braced(described), "factor.cross-check");
    if (!conflicts.empty()) {
      report.notes.push_back(
          "conflicts are decided by order divisibility; a meet of order 6 inside A5 is S3 since A5 has no "
          "element of order 6, so order comparison does not exclude the S3 projection");
    }
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "factor.exceptional");
  }
  return report;
}

Report case_products(const CaseOptions& options) {
  Report report{"products", Status::kPass, options.seed, {}, {}, {}, options.anchors};
  try {
    {
      PhaseTimer timer(report, "K4");
      square_checks(report, "K4", complete_graph(4), 24);
    }
    {
      PhaseTimer timer(report, "Petersen");
      square_checks(report, "Petersen", petersen_graph(), 120);
    }

    PhaseTimer timer(report, "normal inclusion");
    PermGroup k = alternating_group(5);
    auto w = product_action_wreath(k, 2, symmetric_group(2));
    std::vector<std::vector<Permutation>> factors(2);
    std::vector<Permutation> all;
    for (std::size_t coord = 0; coord < 2; ++coord) {
      for (const auto& x : k.generators()) {
        std::vector<Permutation> base(2, Permutation(k.degree()));
        base[coord] = x;
        factors[coord].push_back(product_action_element(w.codec, base, Permutation(2)));
        all.push_back(factors[coord].back());
      }
    }
    SubgroupRef m(w.group, all);
    InclusionType type = classify_inclusion(w.group, m, factors, w.decomposition, 0);
    report.check("A5 wr S2 on 25 points inclusion type", std::string(to_string(InclusionTag::kNormal)),
                 std::string(to_string(type.tag)), "classify.normal");
    report.check("s <= 3", true, type.s <= 3, "classify.s");
    report.check("|M_ω| = product of component stabilizers", type.stabilizer_order,
                 type.component_stabilizer_product, "classify.normal");
  } catch (const Error& e) {
    report.fail("pipeline", "completes", e.what(), "products.power");
  }
  return report;
}

}  // namespace plinth::tools::detail
