#include "plinth/group_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plinth/error.hpp"

namespace plinth {

Orbit::Orbit(PermGroup group, Point root) : group_(std::move(group)), root_(root) {
  if (root >= group_.degree()) throw Error(ErrorCode::kInvalidArgument, "orbit root out of range");
  via_.assign(group_.degree(), kUnreached);
  via_[root] = kRoot;
  points_.push_back(root);
  const auto& gens = group_.generators();
  for (const auto& x : gens) inverses_.push_back(x.inverse());
  for (std::size_t head = 0; head < points_.size(); ++head) {
    Point p = points_[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Point q = gens[s][p];
      if (via_[q] == kUnreached) {
        via_[q] = static_cast<std::int32_t>(s);
        points_.push_back(q);
      }
    }
  }
}

std::vector<std::uint32_t> Orbit::word(Point p) const {
  if (!contains(p)) throw Error(ErrorCode::kInvalidArgument, "point outside orbit");
  std::vector<std::uint32_t> out;
  while (via_[p] != kRoot) {
    auto s = static_cast<std::uint32_t>(via_[p]);
    out.push_back(s);
    p = inverses_[s][p];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Permutation Orbit::transporter(Point p) const {
  Permutation t(group_.degree());
  for (auto s : word(p)) t *= group_.generators()[s];
  return t;
}

Orbit orbit(const PermGroup& g, Point alpha) { return Orbit(g, alpha); }

Partition orbits(const PermGroup& g) {
  Partition out;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> block{p};
    seen[p] = true;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (const auto& x : g.generators()) {
        Point q = x[block[head]];
        if (!seen[q]) {
          seen[q] = true;
          block.push_back(q);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return Orbit(g, 0).size() == g.degree(); }

Order group_order(const PermGroup& g) { return g.order(); }

bool contains(const PermGroup& g, const Permutation& x) { return g.contains(x); }

SubgroupRef pointwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  auto chain = g.chain_with_prefix(points);
  const std::size_t k = points.size();
  Order order = chain->order_from(k);
  PermGroup h(g.degree(), chain->level_generators(k), OrderHint{order, HintKind::kUpperBound}, g.seed());
  h.set_sampler([chain, k](Rng& rng) { return chain->random_element(rng, k); });
  return SubgroupRef::trusted(g, std::move(h));
}

SubgroupRef point_stabilizer(const PermGroup& g, Point alpha) {
  const Point prefix[] = {alpha};
  return pointwise_stabilizer(g, prefix);
}

SubgroupRef block_stabilizer(const PermGroup& g, const Partition& blocks, std::size_t block) {
  const std::size_t n = g.degree();
  const std::size_t m = blocks.size();
  auto block_of = block_index(blocks, n);
  // G acting on points followed by blocks; the block becomes a point.
  auto extend = [&](const Permutation& x) {
    std::vector<Point> images(x.images().begin(), x.images().end());
    Permutation on_blocks = induced_on_blocks(x, blocks, block_of);
    for (std::size_t b = 0; b < m; ++b) images.push_back(static_cast<Point>(n + on_blocks[static_cast<Point>(b)]));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(extend(x));
  PermGroup ext(n + m, std::move(gens), OrderHint{g.order(), HintKind::kUpperBound}, g.seed());
  ext.set_sampler([g, extend](Rng& rng) { return extend(g.random_element(rng)); });
  auto stab = point_stabilizer(ext, static_cast<Point>(n + block));
  auto chain = ext.chain_with_prefix(std::vector<Point>{static_cast<Point>(n + block)});
  auto restrict = [n](const Permutation& x) {
    return Permutation(std::vector<Point>(x.images().begin(), x.images().begin() + static_cast<std::ptrdiff_t>(n)));
  };
  std::vector<Permutation> restricted;
  for (const auto& x : stab.generators()) restricted.push_back(restrict(x));
  PermGroup h(n, std::move(restricted), OrderHint{stab.order(), HintKind::kUpperBound}, g.seed());
  h.set_sampler([chain, restrict](Rng& rng) { return restrict(chain->random_element(rng, 1)); });
  return SubgroupRef::trusted(g, std::move(h));
}

bool is_k_transitive(const PermGroup& g, std::span<const Point> subset, int k) {
  std::vector<bool> member(g.degree(), false);
  for (Point p : subset) member[p] = true;
  for (const auto& x : g.generators()) {
    for (Point p : subset) {
      if (!member[x[p]]) throw Error(ErrorCode::kNotInvariant, "subset is not invariant under the group");
    }
  }
  if (k < 1 || static_cast<std::size_t>(k) > subset.size()) {
    throw Error(ErrorCode::kInvalidArgument, "k must lie in 1..|subset|");
  }
  auto chain = g.chain_with_prefix(subset.first(static_cast<std::size_t>(k)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    if (chain->orbit(i).size() != subset.size() - i) return false;
  }
  return true;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Partition minimal_block_system(const PermGroup& g, Point alpha, Point beta) {
  const std::size_t n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::pair<Point, Point>> queue{{alpha, beta}};
  // Every successful union enqueues its generator images, so the final
  // relation is closed under the group.
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    std::size_t ra = find_root(parent, a);
    std::size_t rb = find_root(parent, b);
    if (ra == rb) continue;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    for (const auto& x : g.generators()) queue.emplace_back(x[a], x[b]);
  }
  std::map<std::size_t, std::vector<Point>> classes;
  for (Point p = 0; p < n; ++p) classes[find_root(parent, p)].push_back(p);
  Partition out;
  for (auto& [root, block] : classes) out.push_back(std::move(block));
  return canonical_partition(std::move(out));
}

std::vector<Partition> minimal_block_systems(const PermGroup& g) {
  if (!is_transitive(g)) throw Error(ErrorCode::kNotTransitive, "block systems need a transitive group");
  const std::size_t n = g.degree();
  if (n <= 2) return {};
  auto stab = point_stabilizer(g, 0);
  std::vector<Partition> candidates;
  for (const auto& suborbit : orbits(stab.group())) {
    if (suborbit.front() == 0) continue;
    Partition system = minimal_block_system(g, 0, suborbit.front());
    if (system.size() == 1) continue;
    if (std::find(candidates.begin(), candidates.end(), system) == candidates.end()) {
      candidates.push_back(std::move(system));
    }
  }
  // Blocks through 0 are candidates[i][0]; keep the inclusion-minimal ones.
  std::vector<Partition> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& bi = candidates[i].front();
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
      const auto& bj = candidates[j].front();
      if (i != j && bj.size() < bi.size() && std::includes(bi.begin(), bi.end(), bj.begin(), bj.end())) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(candidates[i]);
  }
  return out;
}

bool SubgroupClosure::add(const Permutation& x, std::optional<Order> abort_above) {
  if (aborted_) return false;
  auto [residue, level] = chain_.sift(x);
  if (residue.is_identity()) return false;
  generators_.push_back(x);
  chain_.add_strong_generator(std::move(residue), level);
  if (abort_above && chain_.order() > *abort_above) {
    aborted_ = true;
    return false;
  }
  if (!chain_.complete(abort_above)) {
    aborted_ = true;
    return false;
  }
  return true;
}

PermGroup SubgroupClosure::to_group(std::uint64_t seed) const {
  if (aborted_) throw Error(ErrorCode::kInvalidArgument, "aborted closure has no group");
  return PermGroup(chain_.degree(), generators_, OrderHint{chain_.order(), HintKind::kUpperBound}, seed);
}

namespace {

// Maps a subgroup computed in a lift source into the lifted group.
SubgroupRef map_from_source(const PermGroup& g, const PermGroup& source_subgroup) {
  const Lift* lift = g.lift();
  std::vector<Permutation> gens;
  for (const auto& x : source_subgroup.generators()) gens.push_back(lift->map(x));
  PermGroup image(g.degree(), std::move(gens),
                  OrderHint{source_subgroup.order(), HintKind::kUpperBound}, g.seed());
  image.set_lift(Lift{std::make_shared<const PermGroup>(source_subgroup), lift->map});
  return SubgroupRef::trusted(g, std::move(image));
}

}  // namespace

SubgroupRef derived_subgroup(const PermGroup& g) {
  if (const Lift* lift = g.lift()) return map_from_source(g, derived_subgroup(*lift->source).group());
  const auto& gens = g.generators();
  SubgroupClosure closure(g.degree());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      closure.add(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  // Normal closure: conjugates of accumulated generators by group generators.
  for (std::size_t i = 0; i < closure.generators().size(); ++i) {
    Permutation y = closure.generators()[i];
    for (const auto& x : gens) closure.add(y.conjugate(x));
  }
  return SubgroupRef::trusted(g, closure.to_group(g.seed()));
}

std::vector<SubgroupRef> index_two_subgroups(const PermGroup& g) {
  if (const Lift* lift = g.lift()) {
    std::vector<SubgroupRef> out;
    for (const auto& k : index_two_subgroups(*lift->source)) out.push_back(map_from_source(g, k.group()));
    return out;
  }
  const auto& gens = g.generators();
  // H = G^2 G'; G/H is elementary abelian and every map onto C2 factors through it.
  SubgroupClosure h(g.degree());
  const SubgroupRef derived = derived_subgroup(g);
  for (const auto& x : derived.generators()) h.add(x);
  for (const auto& x : gens) h.add(x * x);

  std::vector<std::size_t> basis;
  std::vector<std::vector<int>> coords(gens.size());
  SubgroupClosure span = h;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (span.add(gens[i])) {
      basis.push_back(i);
      continue;
    }
    // gens[i] * prod(b^c) in H for exactly one c.
    for (std::uint32_t mask = 0; mask < (1U << basis.size()); ++mask) {
      Permutation y = gens[i];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (mask & (1U << b)) y *= gens[basis[b]];
      }
      if (h.contains(y)) {
        for (std::size_t b = 0; b < basis.size(); ++b) coords[i].push_back((mask >> b) & 1U);
        break;
      }
    }
  }
  for (std::size_t b = 0; b < basis.size(); ++b) {
    coords[basis[b]].assign(basis.size(), 0);
    coords[basis[b]][b] = 1;
  }
  for (auto& c : coords) c.resize(basis.size(), 0);

  std::vector<SubgroupRef> out;
  const Order half = g.order() / 2;
  for (std::uint32_t f = 1; f < (1U << basis.size()); ++f) {
    std::vector<int> bit(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t b = 0; b < basis.size(); ++b) bit[i] ^= coords[i][b] & static_cast<int>((f >> b) & 1U);
    }
    std::size_t t = std::find(bit.begin(), bit.end(), 1) - bit.begin();
    std::vector<Permutation> kernel = h.generators();
    Permutation t_inv = gens[t].inverse();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      kernel.push_back(bit[i] ? gens[i] * t_inv : gens[i]);
    }
    PermGroup k(g.degree(), std::move(kernel), OrderHint{half, HintKind::kUpperBound}, g.seed());
    if (k.order() != half) throw Error(ErrorCode::kConstructionFailed, "index-2 kernel has the wrong order");
    out.push_back(SubgroupRef::trusted(g, std::move(k)));
  }
  return out;
}

std::optional<Permutation> element_of_order(const PermGroup& g, Order m, const SearchOptions& options) {
  if (m == 0 || g.order() % m != 0) return std::nullopt;
  if (m == 1) return Permutation(g.degree());
  Rng rng(options.seed);
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    Permutation x = g.random_element(rng);
    Order o = x.order();
    if (o % m == 0) return x.pow(static_cast<std::int64_t>(o / m));
  }
  return std::nullopt;
}

std::optional<SubgroupRef> random_subgroup_of_order(const PermGroup& g, Order target,
                                                    const OrderSpectrum* profile,
                                                    const SearchOptions& options,
                                                    const std::function<bool(const PermGroup&)>& accept) {
  if (target == 0 || g.order() % target != 0) return std::nullopt;
  if (target == 1) return SubgroupRef::trusted(g, PermGroup::trivial(g.degree()));
  std::vector<Order> orders;
  if (profile) {
    for (const auto& [o, count] : *profile) {
      if (o > 1 && count > 0) orders.push_back(o);
    }
  }
  Rng rng(options.seed);
  // Random element whose order divides target (and lies in the profile).
  auto draw = [&]() -> std::optional<Permutation> {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Permutation x = g.random_element(rng);
      Order o = x.order();
      Order d = std::gcd(o, target);
      if (!orders.empty()) {
        Order want = orders[uniform_below(rng, orders.size())];
        if (o % want != 0) continue;
        d = want;
      }
      if (d > 1) return x.pow(static_cast<std::int64_t>(o / d));
    }
    return std::nullopt;
  };
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    const int arity = it < options.max_iterations / 2 ? 2 : 3;
    SubgroupClosure closure(g.degree());
    bool ok = true;
    for (int i = 0; i < arity && ok; ++i) {
      auto x = draw();
      if (!x) {
        ok = false;
        break;
      }
      closure.add(*x, target);
      ok = !closure.aborted();
    }
    if (!ok || closure.order() != target) continue;
    PermGroup h = closure.to_group(g.seed());
    if (profile && order_spectrum(h) != *profile) continue;
    if (accept && !accept(h)) continue;
    return SubgroupRef::trusted(g, std::move(h));
  }
  return std::nullopt;
}

SubgroupRef intersection_small(const SubgroupRef& a, const SubgroupRef& b, Order bound) {
  if (a.group().degree() != b.group().degree()) throw Error(ErrorCode::kDegreeMismatch, "subgroups of different degree");
  const bool a_small = a.order() <= b.order();
  const PermGroup& small = a_small ? a.group() : b.group();
  const PermGroup& large = a_small ? b.group() : a.group();
  if (small.order() > bound) throw Error(ErrorCode::kTooLarge, "both subgroups exceed the enumeration bound");
  SubgroupClosure closure(small.degree());
  small.chain().for_each_element([&](const Permutation& x) {
    if (large.contains(x)) closure.add(x);
  });
  return SubgroupRef::trusted(a.parent(), closure.to_group(a.parent().seed()));
}

std::vector<Permutation> elements(const PermGroup& g, Order bound) {
  if (g.order() > bound) throw Error(ErrorCode::kTooLarge, "group exceeds the enumeration bound");
  std::vector<Permutation> out;
  out.reserve(g.order());
  g.chain().for_each_element([&](const Permutation& x) { out.push_back(x); });
  return out;
}

OrderSpectrum order_spectrum(const PermGroup& g, Order bound) {
  if (g.order() > bound) throw Error(ErrorCode::kTooLarge, "group exceeds the enumeration bound");
  OrderSpectrum out;
  g.chain().for_each_element([&](const Permutation& x) { ++out[x.order()]; });
  return out;
}

bool subgroup_equal(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  auto inside = [](const PermGroup& x, const PermGroup& y) {
    return std::all_of(x.generators().begin(), x.generators().end(),
                       [&](const Permutation& s) { return y.contains(s); });
  };
  return inside(a, b) && inside(b, a);
}

bool normalizes(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : g.generators()) {
    for (const auto& y : n.generators()) {
      if (!n.contains(y.conjugate(x))) return false;
    }
  }
  return true;
}

PermGroup restrict_to(const PermGroup& g, std::span<const Point> subset) {
  std::vector<std::int64_t> position(g.degree(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) position[subset[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> images(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      std::int64_t pos = position[x[subset[i]]];
      if (pos < 0) throw Error(ErrorCode::kNotInvariant, "subset is not invariant under the group");
      images[i] = static_cast<Point>(pos);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(subset.size(), std::move(gens), std::nullopt, g.seed());
}

std::vector<std::uint32_t> block_index(const Partition& blocks, std::size_t degree) {
  std::vector<std::uint32_t> out(degree, UINT32_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Point p : blocks[b]) {
      if (p >= degree || out[p] != UINT32_MAX) throw Error(ErrorCode::kInvalidArgument, "blocks do not partition the points");
      out[p] = static_cast<std::uint32_t>(b);
    }
  }
  if (std::find(out.begin(), out.end(), UINT32_MAX) != out.end()) {
    throw Error(ErrorCode::kInvalidArgument, "blocks do not cover the points");
  }
  return out;
}

Permutation induced_on_blocks(const Permutation& x, const Partition& blocks,
                              std::span<const std::uint32_t> block_of) {
  std::vector<Point> images(blocks.size());
  std::vector<bool> hit(blocks.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::uint32_t image = block_of[x[blocks[b].front()]];
    for (Point p : blocks[b]) {
      if (block_of[x[p]] != image) throw Error(ErrorCode::kNotInvariant, "element does not map blocks to blocks");
    }
    if (hit[image] || blocks[image].size() != blocks[b].size()) {
      throw Error(ErrorCode::kNotInvariant, "element does not map blocks to blocks");
    }
    hit[image] = true;
    images[b] = image;
  }
  return Permutation(std::move(images));
}

PermGroup block_action(const PermGroup& g, const Partition& blocks) {
  auto block_of = block_index(blocks, g.degree());
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(induced_on_blocks(x, blocks, block_of));
  return PermGroup(blocks.size(), std::move(gens), std::nullopt, g.seed());
}

Partition canonical_partition(Partition p) {
  for (auto& block : p) std::sort(block.begin(), block.end());
  std::sort(p.begin(), p.end());
  return p;
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle;
  for (Point p = n % 2 == 0 ? 1 : 0; p < n; ++p) cycle.push_back(p);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {cycle})});
}

PermGroup dihedral_group(std::size_t n) {
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cyclic_group(n).generators().front(), Permutation(std::move(reflection))});
}

}  // namespace plinth
