#pragma once

#include <vector>

#include "plinth/graph.hpp"
#include "plinth/group_algorithms.hpp"

namespace plinth {

struct Suborbit {
  Point representative;  // least point
  std::size_t length;
  bool self_paired;
  std::size_t paired;  // index of the paired suborbit
  std::vector<Point> points;
};

// Orbits of G_α; index 0 is {α}, the rest ordered by least point.
struct OrbitalData {
  PermGroup group;
  Point base;
  SubgroupRef stabilizer;
  std::vector<Suborbit> suborbits;
};

// Throws NotTransitive.
OrbitalData suborbits(const PermGroup& g, Point alpha);

// (β, α) lies in the G-orbit of (α, β); decided by expanding that orbit.
bool is_self_paired(const PermGroup& g, Point alpha, Point beta);

// Edges are the G-orbit of {α, β}. Throws NonSelfPaired.
Graph orbital_graph(const PermGroup& g, Point alpha, Point beta);

// G_0 is 2-transitive on Γ(0). Throws GeneratorNotAutomorphism,
// NotVertexTransitive, or InvalidArgument for valency below 2.
bool two_arc_transitive(const PermGroup& g, const Graph& gamma);

// Largest s <= s_cap with G transitive on s-arcs (0 = vertex-transitive
// only). Counts one s-arc orbit directly when there are at most `arc_limit`
// s-arcs, otherwise uses iterated pointwise stabilizers.
int s_arc_transitivity_max(const PermGroup& g, const Graph& gamma, int s_cap,
                           std::size_t arc_limit = 1'000'000);

}  // namespace plinth
