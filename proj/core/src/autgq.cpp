#include "plinth/autgq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "plinth/error.hpp"

namespace plinth {

ColoredGraph incidence_graph(const GQGeometry& geom) {
  const std::size_t points = geom.points.size();
  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t l = 0; l < geom.lines.size(); ++l) {
    for (Point p : geom.lines[l]) edges.emplace_back(p, static_cast<Point>(points + l));
  }
  std::size_t n = points + geom.lines.size();
  return {Graph(n, edges), std::vector<std::uint32_t>(n, 0)};
}

Permutation incidence_action(const GQGeometry& geom, const Permutation& on_points) {
  const std::size_t points = geom.points.size();
  std::map<std::vector<Point>, Point> line_index;
  for (std::size_t l = 0; l < geom.lines.size(); ++l) {
    auto key = geom.lines[l];
    std::sort(key.begin(), key.end());
    line_index.emplace(std::move(key), static_cast<Point>(l));
  }
  std::vector<Point> images(points + geom.lines.size());
  for (Point p = 0; p < points; ++p) images[p] = on_points[p];
  for (std::size_t l = 0; l < geom.lines.size(); ++l) {
    std::vector<Point> img;
    for (Point p : geom.lines[l]) img.push_back(on_points[p]);
    std::sort(img.begin(), img.end());
    auto it = line_index.find(img);
    if (it == line_index.end()) throw Error(ErrorCode::kNotInvariant, "point map does not preserve lines");
    images[points + l] = static_cast<Point>(points + it->second);
  }
  return Permutation(std::move(images));
}

namespace {

// Ordered partition stored as an arrangement of the vertices; a cell is
// identified by its first position, which is label-invariant.
struct OrderedPartition {
  std::vector<Point> order;
  std::vector<std::uint32_t> position;
  std::vector<std::uint32_t> cell_of;    // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;   // start -> one past the end
  std::size_t cells = 0;

  bool discrete() const { return cells == order.size(); }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), count_(g.vertex_count(), 0) {}

  // Splits cells by neighbour counts into each splitter until equitable.
  // Returns a hash of the split events, which is label-invariant.
  std::uint64_t refine(OrderedPartition& p, std::vector<std::uint32_t> splitters) {
    const std::size_t n = p.order.size();
    std::vector<char> queued(n, 0);
    for (auto s : splitters) queued[s] = 1;
    std::uint64_t trace = 0;
    std::size_t head = 0;
    while (head < splitters.size() && !p.discrete()) {
      std::uint32_t s = splitters[head++];
      queued[s] = 0;
      std::vector<std::uint32_t> touched;
      for (std::uint32_t i = s; i < p.cell_end[s]; ++i) {
        for (Point w : g_.neighbors(p.order[i])) {
          if (count_[w]++ == 0) touched.push_back(w);
        }
      }
      std::vector<std::uint32_t> cells;
      for (Point w : touched) cells.push_back(p.cell_of[w]);
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      trace = mix(trace, s);
      for (std::uint32_t c : cells) {
        std::uint32_t end = p.cell_end[c];
        if (end - c == 1) {
          trace = mix(trace, mix(c, count_[p.order[c]]));
          continue;
        }
        std::stable_sort(p.order.begin() + c, p.order.begin() + end,
                         [this](Point a, Point b) { return count_[a] < count_[b]; });
        std::uint32_t start = c;
        for (std::uint32_t i = c; i < end; ++i) {
          p.position[p.order[i]] = i;
          if (i + 1 == end || count_[p.order[i + 1]] != count_[p.order[i]]) {
            trace = mix(trace, mix(mix(start, i + 1 - start), count_[p.order[i]]));
            p.cell_end[start] = i + 1;
            for (std::uint32_t j = start; j <= i; ++j) p.cell_of[p.order[j]] = start;
            if (start != c) ++p.cells;
            if (start != c || end != i + 1) {
              if (!queued[start]) {
                queued[start] = 1;
                splitters.push_back(start);
              }
            }
            start = i + 1;
          }
        }
      }
      for (Point w : touched) count_[w] = 0;
    }
    return mix(trace, p.cells);
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> count_;
};

OrderedPartition colour_partition(const ColoredGraph& cg) {
  const std::size_t n = cg.graph.vertex_count();
  OrderedPartition p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](Point a, Point b) { return cg.colors[a] < cg.colors[b]; });
  p.position.resize(n);
  p.cell_of.resize(n);
  p.cell_end.assign(n, 0);
  std::uint32_t start = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    p.position[p.order[i]] = i;
    if (i + 1 == n || cg.colors[p.order[i + 1]] != cg.colors[p.order[i]]) {
      p.cell_end[start] = i + 1;
      for (std::uint32_t j = start; j <= i; ++j) p.cell_of[p.order[j]] = start;
      ++p.cells;
      start = i + 1;
    }
  }
  return p;
}

// First smallest non-singleton cell, or n if discrete.
std::uint32_t target_cell(const OrderedPartition& p) {
  const std::uint32_t n = static_cast<std::uint32_t>(p.order.size());
  std::uint32_t best = n;
  std::uint32_t best_size = n + 1;
  for (std::uint32_t c = 0; c < n; c = p.cell_end[c]) {
    std::uint32_t size = p.cell_end[c] - c;
    if (size > 1 && size < best_size) {
      best = c;
      best_size = size;
    }
  }
  return best;
}

std::vector<Point> sorted_cell(const OrderedPartition& p, std::uint32_t c) {
  std::vector<Point> cell(p.order.begin() + c, p.order.begin() + p.cell_end[c]);
  std::sort(cell.begin(), cell.end());
  return cell;
}

void individualize(OrderedPartition& p, std::uint32_t c, Point v) {
  std::uint32_t pos = p.position[v];
  std::swap(p.order[c], p.order[pos]);
  p.position[p.order[c]] = c;
  p.position[p.order[pos]] = pos;
  p.cell_end[c + 1] = p.cell_end[c];
  p.cell_end[c] = c + 1;
  for (std::uint32_t j = c + 1; j < p.cell_end[c + 1]; ++j) p.cell_of[p.order[j]] = c + 1;
  ++p.cells;
}

bool preserves(const ColoredGraph& cg, const Permutation& x) {
  for (Point v = 0; v < cg.colors.size(); ++v) {
    if (cg.colors[x[v]] != cg.colors[v]) return false;
  }
  return is_automorphism(cg.graph, x);
}

class Search {
 public:
  Search(const ColoredGraph& cg, const AutomorphismOptions& options)
      : cg_(cg), options_(options), refiner_(cg.graph) {}

  AutomorphismSearch run() {
    const std::size_t n = cg_.graph.vertex_count();
    OrderedPartition p = colour_partition(cg_);
    std::vector<std::uint32_t> all;
    for (std::uint32_t c = 0; c < n; c = p.cell_end[c]) all.push_back(c);
    std::uint64_t trace = n == 0 ? 0 : refiner_.refine(p, all);
    // First path.
    while (true) {
      path_.push_back(p);
      traces_.push_back(trace);
      std::uint32_t c = target_cell(p);
      if (c == n) break;
      Point b = sorted_cell(p, c).front();
      base_.push_back(b);
      cells_.push_back(c);
      individualize(p, c, b);
      trace = refiner_.refine(p, {c, c + 1});
      count_node();
    }
    leaf_ = p.order;

    std::vector<std::size_t> orbit_sizes(base_.size(), 1);
    for (std::size_t level = base_.size(); level-- > 0;) {
      auto orbit = orbit_of(base_[level]);
      for (Point w : sorted_cell(path_[level], cells_[level])) {
        if (orbit[w]) continue;
        OrderedPartition child = path_[level];
        individualize(child, cells_[level], w);
        std::uint64_t t = refiner_.refine(child, {cells_[level], cells_[level] + 1});
        count_node();
        if (auto g = explore(child, t, level + 1)) {
          generators_.push_back(std::move(*g));
          orbit = orbit_of(base_[level]);
        }
      }
      orbit_sizes[level] = static_cast<std::size_t>(std::count(orbit.begin(), orbit.end(), true));
    }

    PermGroup group(n, generators_);
    std::uint64_t product = 1;
    for (auto s : orbit_sizes) product *= s;
    if (group.order() != product) {
      throw Error(ErrorCode::kMismatch, "orbit-size product " + std::to_string(product) +
                                            " differs from chain order " + std::to_string(group.order()));
    }
    return {std::move(group), base_, std::move(orbit_sizes), nodes_};
  }

 private:
  void count_node() {
    if (++nodes_ > options_.node_budget) throw Error(ErrorCode::kTimeout, "automorphism search exceeded node budget");
  }

  // Orbit of v under all generators found so far. Generators found at deeper
  // levels fix more of the base, so at each level these generate the
  // relevant pointwise stabilizer.
  std::vector<bool> orbit_of(Point v) const {
    std::vector<bool> seen(cg_.graph.vertex_count(), false);
    std::vector<Point> queue{v};
    seen[v] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& x : generators_) {
        Point w = x[queue[head]];
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

  std::optional<Permutation> explore(OrderedPartition& p, std::uint64_t trace, std::size_t depth) {
    if (depth >= traces_.size() || trace != traces_[depth] || p.cells != path_[depth].cells) return std::nullopt;
    const std::size_t n = p.order.size();
    if (p.discrete()) {
      std::vector<Point> images(n);
      for (std::size_t i = 0; i < n; ++i) images[leaf_[i]] = p.order[i];
      Permutation x(std::move(images));
      if (preserves(cg_, x)) return x;
      return std::nullopt;
    }
    std::uint32_t c = target_cell(p);
    if (c != cells_[depth]) return std::nullopt;
    for (Point w : sorted_cell(p, c)) {
      OrderedPartition child = p;
      individualize(child, c, w);
      std::uint64_t t = refiner_.refine(child, {c, c + 1});
      count_node();
      if (auto g = explore(child, t, depth + 1)) return g;
    }
    return std::nullopt;
  }

  const ColoredGraph& cg_;
  AutomorphismOptions options_;
  Refiner refiner_;
  std::vector<OrderedPartition> path_;
  std::vector<std::uint64_t> traces_;
  std::vector<Point> base_;
  std::vector<std::uint32_t> cells_;
  std::vector<Point> leaf_;
  std::vector<Permutation> generators_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AutomorphismSearch automorphism_search(const ColoredGraph& g, const AutomorphismOptions& options) {
  if (g.colors.size() != g.graph.vertex_count()) throw Error(ErrorCode::kInvalidArgument, "one colour per vertex");
  return Search(g, options).run();
}

PermGroup graph_automorphism_group(const ColoredGraph& g, const AutomorphismOptions& options) {
  return automorphism_search(g, options).group;
}

}  // namespace plinth
