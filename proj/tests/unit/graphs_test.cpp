#include <gtest/gtest.h>

#include <set>

#include "plinth/actions.hpp"
#include "plinth/error.hpp"
#include "plinth/orbital.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace plinth {
namespace {

std::vector<std::set<Point>> adjacency_sets(const Graph& g) {
  std::vector<std::set<Point>> adj(g.vertex_count());
  for (Point v = 0; v < g.vertex_count(); ++v) {
    for (Point w : g.neighbors(v)) adj[v].insert(w);
  }
  return adj;
}

// {0,1} and {2,3} are points 0 and 7 in lexicographic order.
Graph petersen() { return edge_orbit_graph(corpus::petersen_automorphisms(), 0, 7); }

TEST(Graph, ConstructionInvariants) {
  Graph g(4, {{1, 0}, {0, 1}, {2, 3}, {0, 2}});
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.valency(), -1);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Point, Point>>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(Graph, Connectivity) {
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto c = is_connected(two_triangles);
  EXPECT_FALSE(c.connected);
  EXPECT_EQ(c.components, 2U);
  EXPECT_TRUE(is_connected(petersen()).connected);
}

TEST(Graph, EdgeOrbitExamples) {
  Graph pentagon = edge_orbit_graph(cyclic_group(5), 0, 1);
  EXPECT_EQ(pentagon.edge_count(), 5U);
  EXPECT_EQ(pentagon.valency(), 2);
  Graph k6 = edge_orbit_graph(symmetric_group(6), 0, 1);
  EXPECT_EQ(k6.edge_count(), 15U);
  Graph p = petersen();
  EXPECT_EQ(p.vertex_count(), 10U);
  EXPECT_EQ(p.edge_count(), 15U);
  EXPECT_EQ(p.valency(), 3);
  // A5 already yields the same graph.
  Graph p5 = edge_orbit_graph(corpus::symmetric_on_subsets(5, 2, alternating_group(5)), 0, 7);
  EXPECT_EQ(p5.edges(), p.edges());
}

TEST(Graph, DirectPower) {
  Graph k3 = edge_orbit_graph(symmetric_group(3), 0, 1);
  Graph k3sq = direct_power(k3, 2);
  EXPECT_EQ(k3sq.vertex_count(), 9U);
  EXPECT_EQ(k3sq.valency(), 4);

  Graph p = petersen();
  Graph psq = direct_power(p, 2);
  EXPECT_EQ(psq.vertex_count(), 100U);
  EXPECT_EQ(psq.valency(), 9);
  EXPECT_TRUE(is_connected(psq).connected);

  // Γ^ℓ(diagonal α) = Γ(α)^ℓ.
  TupleCodec codec(10, 3);
  Graph pcube = direct_power(p, 3);
  for (Point a = 0; a < 10; ++a) {
    std::set<Point> expected;
    for (Point x : p.neighbors(a)) {
      for (Point y : p.neighbors(a)) {
        for (Point z : p.neighbors(a)) expected.insert(codec.encode(std::vector<Point>{x, y, z}));
      }
    }
    auto nbrs = pcube.neighbors(codec.encode(std::vector<Point>{a, a, a}));
    EXPECT_EQ(std::set<Point>(nbrs.begin(), nbrs.end()), expected);
  }
  EXPECT_THROW(direct_power(p, 7), Error);
}

TEST(Graph, EdgeListExport) {
  Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(to_edge_list(g), "graph 3 2\n1 2\n2 3\n");
  EXPECT_THROW(write_edge_list(g, "/nonexistent-dir/x.txt"), Error);
}

TEST(Suborbits, Examples) {
  auto s7 = suborbits(symmetric_group(7), 0);
  ASSERT_EQ(s7.suborbits.size(), 2U);
  EXPECT_EQ(s7.suborbits[0].length, 1U);
  EXPECT_EQ(s7.suborbits[1].length, 6U);
  auto pet = suborbits(corpus::petersen_automorphisms(), 0);
  std::multiset<std::size_t> lengths;
  for (const auto& s : pet.suborbits) lengths.insert(s.length);
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{1, 3, 6}));
  EXPECT_THROW(suborbits(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}})}), 0), Error);
}

TEST(Suborbits, MatchesBruteForceAndRelabelling) {
  Rng rng(11);
  for (const auto& s : corpus::small_groups(17)) {
    PermGroup g(s.degree, s.generators);
    if (!is_transitive(g)) continue;
    auto elements = oracle::closure(s.degree, s.generators);
    auto data = suborbits(g, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < data.suborbits.size(); ++i) {
      const auto& so = data.suborbits[i];
      total += so.length;
      EXPECT_EQ(data.suborbits[so.paired].paired, i) << s.name;
      EXPECT_EQ(so.self_paired, so.paired == i) << s.name;
      std::set<Point> expected;
      for (const auto& x : elements) {
        if (x[0] == 0) expected.insert(x[so.representative]);
      }
      EXPECT_EQ(std::set<Point>(so.points.begin(), so.points.end()), expected) << s.name;
      // Brute-force pairing: some element swaps 0 and a point of the paired suborbit.
      bool reversed = false;
      for (const auto& x : elements) {
        if (x[so.representative] == 0 && std::count(so.points.begin(), so.points.end(), x[0]) == 0 &&
            i != 0) {
          Point back = x[0];
          const auto& partner = data.suborbits[so.paired].points;
          EXPECT_TRUE(std::count(partner.begin(), partner.end(), back) == 1) << s.name;
          reversed = true;
        }
      }
      if (i != 0 && !so.self_paired) EXPECT_TRUE(reversed) << s.name;
      if (i != 0) EXPECT_EQ(is_self_paired(g, 0, so.representative), so.self_paired) << s.name;
    }
    EXPECT_EQ(data.suborbits[0].points, std::vector<Point>{0});
    EXPECT_EQ(total, s.degree);

    // Relabelling fixing 0 preserves the length multiset and pairing pattern.
    Permutation r = oracle::random_permutation(rng, s.degree);
    std::vector<Point> fix0(r.images().begin(), r.images().end());
    std::swap(fix0[std::find(fix0.begin(), fix0.end(), 0) - fix0.begin()], fix0[0]);
    Permutation relabel(std::move(fix0));
    std::vector<Permutation> conj;
    for (const auto& x : s.generators) conj.push_back(x.conjugate(relabel));
    auto other = suborbits(PermGroup(s.degree, conj), 0);
    std::multiset<std::pair<std::size_t, bool>> a, b;
    for (const auto& so : data.suborbits) a.insert({so.length, so.self_paired});
    for (const auto& so : other.suborbits) b.insert({so.length, so.self_paired});
    EXPECT_EQ(a, b) << s.name;
  }
}

TEST(Orbital, SelfPairing) {
  PermGroup c3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  EXPECT_FALSE(is_self_paired(c3, 0, 1));
  EXPECT_THROW(orbital_graph(c3, 0, 1), Error);
  EXPECT_TRUE(is_self_paired(symmetric_group(5), 0, 3));
  Graph k5 = orbital_graph(symmetric_group(5), 0, 3);
  EXPECT_EQ(k5.edge_count(), 10U);
}

TEST(ArcTransitivity, Examples) {
  auto aut = corpus::petersen_automorphisms();
  Graph p = petersen();
  EXPECT_TRUE(two_arc_transitive(aut, p));
  EXPECT_EQ(s_arc_transitivity_max(aut, p, 3), 3);
  // Forcing the stabilizer route gives the same answer.
  EXPECT_EQ(s_arc_transitivity_max(aut, p, 3, 0), 3);

  Graph k4 = edge_orbit_graph(symmetric_group(4), 0, 1);
  EXPECT_EQ(s_arc_transitivity_max(symmetric_group(4), k4, 2), 2);
  EXPECT_EQ(s_arc_transitivity_max(symmetric_group(4), k4, 2, 0), 2);

  Graph hexagon = edge_orbit_graph(cyclic_group(6), 0, 1);
  EXPECT_FALSE(two_arc_transitive(cyclic_group(6), hexagon));
  EXPECT_EQ(s_arc_transitivity_max(cyclic_group(6), hexagon, 3), 0);
  EXPECT_EQ(s_arc_transitivity_max(dihedral_group(6), hexagon, 3), 3);

  EXPECT_THROW(two_arc_transitive(symmetric_group(6), hexagon), Error);
  PermGroup not_transitive(6, {Permutation::from_cycles(6, {{1, 5}, {2, 4}})});
  EXPECT_THROW(two_arc_transitive(not_transitive, hexagon), Error);
  Graph matching(2, {{0, 1}});
  EXPECT_THROW(two_arc_transitive(symmetric_group(2), matching), Error);
}

TEST(ArcTransitivity, AgreesWithArcOrbitCounting) {
  std::size_t compared = 0;
  for (const auto& s : corpus::small_groups(29)) {
    PermGroup g(s.degree, s.generators);
    if (!is_transitive(g)) continue;
    auto elements = oracle::closure(s.degree, s.generators);
    auto data = suborbits(g, 0);
    for (std::size_t i = 1; i < data.suborbits.size(); ++i) {
      if (!data.suborbits[i].self_paired) continue;
      Graph gamma = orbital_graph(g, 0, data.suborbits[i].representative);
      auto adj = adjacency_sets(gamma);
      std::size_t degree_sum = 0;
      for (const auto& a : adj) degree_sum += a.size();
      EXPECT_EQ(degree_sum, 2 * gamma.edge_count());
      auto arcs = oracle::s_arc_orbits(elements, adj, 1);
      EXPECT_EQ(arcs.first, 1U) << s.name;
      if (gamma.valency() < 2) continue;
      auto two = oracle::s_arc_orbits(elements, adj, 2);
      if (two.second > 2000) continue;
      EXPECT_EQ(two_arc_transitive(g, gamma), two.first == 1) << s.name << " suborbit " << i;
      int expected = 1;
      for (int k = 2; k <= 3 && oracle::s_arc_orbits(elements, adj, k).first == 1; ++k) expected = k;
      EXPECT_EQ(s_arc_transitivity_max(g, gamma, 3), expected) << s.name;
      EXPECT_EQ(s_arc_transitivity_max(g, gamma, 3, 0), expected) << s.name;
      ++compared;
    }
  }
  EXPECT_GT(compared, 10U);
}

// Aut(Γ1) wr S2 on Γ1² is never 2-arc-transitive once Γ1 has valency >= 2.
TEST(ArcTransitivity, ProductOfPowerIsNotTwoArcTransitive) {
  struct Base {
    PermGroup aut;
    Graph gamma;
  };
  std::vector<Base> bases{{corpus::petersen_automorphisms(), petersen()},
                          {dihedral_group(5), edge_orbit_graph(dihedral_group(5), 0, 1)},
                          {symmetric_group(4), edge_orbit_graph(symmetric_group(4), 0, 1)}};
  for (const auto& b : bases) {
    auto wreath = product_action_wreath(b.aut, 2, symmetric_group(2));
    Graph square = direct_power(b.gamma, 2);
    EXPECT_FALSE(two_arc_transitive(wreath.group, square));

    // (β1,β1) against (β1,β2) and (β2,β2): the two pairs differ in Hamming
    // distance, so they lie in distinct stabilizer orbits.
    Point b1 = b.gamma.neighbors(0)[0];
    Point b2 = b.gamma.neighbors(0)[1];
    Point u = wreath.codec.encode(std::vector<Point>{b1, b1});
    Point w1 = wreath.codec.encode(std::vector<Point>{b1, b2});
    Point w2 = wreath.codec.encode(std::vector<Point>{b2, b2});
    SubgroupRef stab = point_stabilizer(wreath.group, 0);
    std::set<std::pair<Point, Point>> seen{{u, w1}};
    std::vector<std::pair<Point, Point>> queue{{u, w1}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& x : stab.group().generators()) {
        std::pair<Point, Point> img{x[queue[head].first], x[queue[head].second]};
        if (seen.insert(img).second) queue.push_back(img);
      }
    }
    EXPECT_EQ(seen.count({u, w2}), 0U);
  }
}

}  // namespace
}  // namespace plinth
