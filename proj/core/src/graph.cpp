#include "plinth/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "plinth/actions.hpp"
#include "plinth/error.hpp"

namespace plinth {

Graph::Graph(std::size_t vertices, const std::vector<std::pair<Point, Point>>& edges) {
  std::vector<std::vector<Point>> lists(vertices);
  for (auto [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "loops are not allowed");
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  offsets_.push_back(0);
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    adjacency_.insert(adjacency_.end(), l.begin(), l.end());
    offsets_.push_back(adjacency_.size());
  }
}

bool Graph::adjacent(Point u, Point v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

long Graph::valency() const {
  if (vertex_count() == 0) return 0;
  const std::size_t d = degree(0);
  for (Point v = 1; v < vertex_count(); ++v) {
    if (degree(v) != d) return -1;
  }
  return static_cast<long>(d);
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point u = 0; u < vertex_count(); ++u) {
    for (Point v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Connectivity is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  std::vector<Point> stack;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      Point v = stack.back();
      stack.pop_back();
      for (Point w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return {components == 1, components};
}

bool is_automorphism(const Graph& g, const Permutation& x) {
  if (x.degree() != g.vertex_count()) return false;
  for (Point u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(x[u]) != g.degree(u)) return false;
    for (Point v : g.neighbors(u)) {
      if (!g.adjacent(x[u], x[v])) return false;
    }
  }
  return true;
}

Graph direct_power(const Graph& g, std::size_t arity, std::size_t cap) {
  TupleCodec codec(g.vertex_count(), arity, cap);
  std::vector<std::pair<Point, Point>> edges;
  std::vector<Point> target(arity);
  for (Point p = 0; p < codec.size(); ++p) {
    auto tuple = codec.decode(p);
    // Odometer over neighbor choices in every coordinate.
    std::vector<std::size_t> pick(arity, 0);
    bool any = std::all_of(tuple.begin(), tuple.end(), [&](Point t) { return g.degree(t) > 0; });
    while (any) {
      for (std::size_t i = 0; i < arity; ++i) target[i] = g.neighbors(tuple[i])[pick[i]];
      Point q = codec.encode(target);
      if (p < q) edges.emplace_back(p, q);
      std::size_t i = arity;
      while (i-- > 0) {
        if (++pick[i] < g.degree(tuple[i])) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return Graph(codec.size(), edges);
}

Graph edge_orbit_graph(const PermGroup& k, Point a, Point b) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "an edge needs two distinct points");
  std::set<std::pair<Point, Point>> seen{{std::min(a, b), std::max(a, b)}};
  std::vector<std::pair<Point, Point>> queue(seen.begin(), seen.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& x : k.generators()) {
      Point u = x[queue[head].first];
      Point v = x[queue[head].second];
      std::pair<Point, Point> e{std::min(u, v), std::max(u, v)};
      if (seen.insert(e).second) queue.push_back(e);
    }
  }
  return Graph(k.degree(), queue);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  file << to_edge_list(g);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

}  // namespace plinth
