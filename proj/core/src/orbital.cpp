#include "plinth/orbital.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "plinth/error.hpp"

namespace plinth {

OrbitalData suborbits(const PermGroup& g, Point alpha) {
  Orbit full(g, alpha);
  if (full.size() != g.degree()) throw Error(ErrorCode::kNotTransitive, "suborbits need a transitive group");
  SubgroupRef stab = point_stabilizer(g, alpha);
  Partition parts = orbits(stab.group());
  std::stable_partition(parts.begin(), parts.end(),
                        [alpha](const std::vector<Point>& b) { return b.front() == alpha; });
  std::vector<std::size_t> suborbit_of(g.degree());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Point p : parts[i]) suborbit_of[p] = i;
  }
  std::vector<Permutation> inverses;
  for (const auto& x : g.generators()) inverses.push_back(x.inverse());

  OrbitalData data{g, alpha, stab, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // With α^t = β, the paired suborbit contains α^(t^-1).
    Point beta = parts[i].front();
    Point back = alpha;
    auto word = full.word(beta);
    for (auto it = word.rbegin(); it != word.rend(); ++it) back = inverses[*it][back];
    std::size_t paired = suborbit_of[back];
    data.suborbits.push_back(Suborbit{beta, parts[i].size(), paired == i, paired, std::move(parts[i])});
  }
  return data;
}

bool is_self_paired(const PermGroup& g, Point alpha, Point beta) {
  if (alpha == beta) return true;
  const std::uint64_t n = g.degree();
  auto key = [n](Point a, Point b) { return std::uint64_t{a} * n + b; };
  const std::uint64_t reverse = key(beta, alpha);
  std::unordered_set<std::uint64_t> seen{key(alpha, beta)};
  std::vector<std::pair<Point, Point>> queue{{alpha, beta}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& x : g.generators()) {
      Point a = x[queue[head].first];
      Point b = x[queue[head].second];
      std::uint64_t k = key(a, b);
      if (k == reverse) return true;
      if (seen.insert(k).second) queue.emplace_back(a, b);
    }
  }
  return false;
}

Graph orbital_graph(const PermGroup& g, Point alpha, Point beta) {
  if (!is_self_paired(g, alpha, beta)) throw Error(ErrorCode::kNonSelfPaired, "orbital is not self-paired");
  return edge_orbit_graph(g, alpha, beta);
}

namespace {

void check_graph_action(const PermGroup& g, const Graph& gamma) {
  if (g.degree() != gamma.vertex_count()) throw Error(ErrorCode::kDegreeMismatch, "group and graph sizes differ");
  for (const auto& x : g.generators()) {
    if (!is_automorphism(gamma, x)) {
      throw Error(ErrorCode::kGeneratorNotAutomorphism, "generator " + std::to_string(&x - g.generators().data()) +
                                                            " is not a graph automorphism");
    }
  }
  if (!is_transitive(g)) throw Error(ErrorCode::kNotVertexTransitive, "group is not vertex-transitive");
}

}  // namespace

bool two_arc_transitive(const PermGroup& g, const Graph& gamma) {
  check_graph_action(g, gamma);
  auto nbrs = gamma.neighbors(0);
  if (nbrs.size() < 2) throw Error(ErrorCode::kInvalidArgument, "valency must be at least 2");
  SubgroupRef stab = point_stabilizer(g, 0);
  return is_k_transitive(stab.group(), nbrs, 2);
}

int s_arc_transitivity_max(const PermGroup& g, const Graph& gamma, int s_cap, std::size_t arc_limit) {
  check_graph_action(g, gamma);
  const std::size_t k = gamma.degree(0);
  if (k == 0) return 0;
  // A fixed s-arc starting at 0: always the least admissible neighbor.
  std::vector<Point> arc{0};
  for (int s = 1; s <= s_cap; ++s) {
    Point prev = arc.size() >= 2 ? arc[arc.size() - 2] : static_cast<Point>(gamma.vertex_count());
    auto nbrs = gamma.neighbors(arc.back());
    auto next = std::find_if(nbrs.begin(), nbrs.end(), [prev](Point w) { return w != prev; });
    if (next == nbrs.end()) return s - 1;
    arc.push_back(*next);

    std::size_t total = gamma.vertex_count() * k;
    for (int i = 1; i < s; ++i) total *= k - 1;
    bool transitive = false;
    if (total <= arc_limit) {
      std::set<std::vector<Point>> seen{arc};
      std::vector<std::vector<Point>> queue{arc};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& x : g.generators()) {
          std::vector<Point> img;
          for (Point p : queue[head]) img.push_back(x[p]);
          if (seen.insert(img).second) queue.push_back(std::move(img));
        }
      }
      transitive = seen.size() == total;
    } else {
      std::vector<Point> prefix(arc.begin(), arc.end() - 1);
      auto chain = g.chain_with_prefix(prefix);
      PermGroup fixer(g.degree(), chain->level_generators(prefix.size()));
      std::size_t expected = s == 1 ? k : k - 1;
      transitive = Orbit(fixer, arc.back()).size() == expected;
    }
    if (!transitive) return s - 1;
  }
  return s_cap;
}

}  // namespace plinth
