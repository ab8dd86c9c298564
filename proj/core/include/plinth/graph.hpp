#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plinth/perm_group.hpp"

namespace plinth {

// Simple undirected graph in compressed sorted-adjacency form.
class Graph {
 public:
  Graph() = default;
  // Duplicate edges are merged; throws InvalidArgument on loops or
  // out-of-range endpoints.
  Graph(std::size_t vertices, const std::vector<std::pair<Point, Point>>& edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::span<const Point> neighbors(Point v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Point v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Point u, Point v) const;
  // Common degree, or -1 if the graph is not regular.
  long valency() const;
  // Edges with u < v in lexicographic order.
  std::vector<std::pair<Point, Point>> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Point> adjacency_;
};

struct Connectivity {
  bool connected = false;
  std::size_t components = 0;
};

Connectivity is_connected(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& x);

// Tuples under the row-major codec; adjacent iff adjacent in every coordinate.
// Throws DegreeOverflow above `cap` vertices.
Graph direct_power(const Graph& g, std::size_t arity, std::size_t cap = 1'000'000);

// Edges are the K-orbit of the unordered pair {a, b}.
Graph edge_orbit_graph(const PermGroup& k, Point a, Point b);

// "graph <n> <m>" then one "u v" line per edge, 1-based, u < v.
std::string to_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);  // throws IoError

}  // namespace plinth
