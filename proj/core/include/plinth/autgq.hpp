#pragma once

#include <cstdint>
#include <vector>

#include "plinth/classical.hpp"
#include "plinth/graph.hpp"

namespace plinth {

struct ColoredGraph {
  Graph graph;
  std::vector<std::uint32_t> colors;  // one entry per vertex
};

// Points 0..P-1 then lines P..P+L-1; a single colour so that dualities count.
ColoredGraph incidence_graph(const GQGeometry& geom);

struct AutomorphismOptions {
  std::uint64_t node_budget = 10'000'000;
};

// Search record. The first path individualizes `base`; level i found the
// orbit of base[i] under the pointwise stabilizer of base[0..i-1], so the
// product of `orbit_sizes` is |Aut|.
struct AutomorphismSearch {
  PermGroup group;
  std::vector<Point> base;
  std::vector<std::size_t> orbit_sizes;
  std::uint64_t nodes = 0;
};

// Individualization and equitable refinement with a fixed tie-break: target
// cell is the first smallest non-singleton cell, vertices tried in ascending
// order. Every generator is checked against all edges and colours. Throws
// Timeout when the node budget runs out and Mismatch if the orbit-size
// product disagrees with the stabilizer-chain order.
AutomorphismSearch automorphism_search(const ColoredGraph& g, const AutomorphismOptions& options = {});

PermGroup graph_automorphism_group(const ColoredGraph& g, const AutomorphismOptions& options = {});

// Extends a collineation on points to lines and returns the incidence-graph
// permutation; throws NotInvariant if some line is not mapped to a line.
Permutation incidence_action(const GQGeometry& geom, const Permutation& on_points);

}  // namespace plinth
