#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "plinth/perm_group.hpp"

namespace plinth {

// A partition of the points into blocks. Canonical form: each block sorted,
// blocks ordered by their least point.
using Partition = std::vector<std::vector<Point>>;

// Element order -> number of elements of that order.
using OrderSpectrum = std::map<Order, std::uint64_t>;

inline constexpr Order kDefaultEnumerationBound = 1'000'000;

class Orbit {
 public:
  Orbit(PermGroup group, Point root);

  Point root() const noexcept { return root_; }
  // Points in first-discovery order under the fixed generator order.
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(Point p) const { return p < via_.size() && via_[p] != kUnreached; }
  // Generator indices w with root^(g_w0 * g_w1 * ...) == p.
  std::vector<std::uint32_t> word(Point p) const;
  // t with root^t == p.
  Permutation transporter(Point p) const;

 private:
  static constexpr std::int32_t kRoot = -1;
  static constexpr std::int32_t kUnreached = -2;

  PermGroup group_;
  std::vector<Permutation> inverses_;
  Point root_;
  std::vector<Point> points_;
  std::vector<std::int32_t> via_;
};

Orbit orbit(const PermGroup& g, Point alpha);
// All orbits, each sorted, ordered by least point.
Partition orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

Order group_order(const PermGroup& g);
bool contains(const PermGroup& g, const Permutation& x);

SubgroupRef point_stabilizer(const PermGroup& g, Point alpha);
SubgroupRef pointwise_stabilizer(const PermGroup& g, std::span<const Point> points);
// Setwise stabilizer of a block of a G-invariant partition.
SubgroupRef block_stabilizer(const PermGroup& g, const Partition& blocks, std::size_t block);

// Throws NotInvariant if `subset` is not preserved by every generator.
bool is_k_transitive(const PermGroup& g, std::span<const Point> subset, int k);

// Minimal block containing {alpha, beta} (Atkinson closure).
Partition minimal_block_system(const PermGroup& g, Point alpha, Point beta);
// Throws NotTransitive. Empty iff g is primitive.
std::vector<Partition> minimal_block_systems(const PermGroup& g);

SubgroupRef derived_subgroup(const PermGroup& g);
// Kernels of the homomorphisms of g onto C2.
std::vector<SubgroupRef> index_two_subgroups(const PermGroup& g);

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_iterations = 20'000;
};

std::optional<Permutation> element_of_order(const PermGroup& g, Order m, const SearchOptions& options = {});

// Subgroup of exact order `target`, generated by random pairs (and, after
// half the budget, triples). When `profile` is given the result must also
// have exactly that element-order spectrum, and `accept` must hold if set.
std::optional<SubgroupRef> random_subgroup_of_order(
    const PermGroup& g, Order target, const OrderSpectrum* profile = nullptr,
    const SearchOptions& options = {},
    const std::function<bool(const PermGroup&)>& accept = {});

// Incrementally grown subgroup with an always-complete chain.
class SubgroupClosure {
 public:
  explicit SubgroupClosure(std::size_t degree) : chain_(degree, {}) {}

  // Returns false (and leaves the closure unchanged) if x is already a member.
  // With `abort_above`, also returns false once the order exceeds it; the
  // closure is then unusable.
  bool add(const Permutation& x, std::optional<Order> abort_above = std::nullopt);
  bool contains(const Permutation& x) const { return chain_.contains(x); }
  Order order() const { return chain_.order(); }
  bool aborted() const noexcept { return aborted_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // PermGroup on the accumulated generators, with the proven order attached.
  PermGroup to_group(std::uint64_t seed = kDefaultSeed) const;

 private:
  StabilizerChain chain_;
  std::vector<Permutation> generators_;
  bool aborted_ = false;
};

// Throws TooLarge if both orders exceed `bound`.
SubgroupRef intersection_small(const SubgroupRef& a, const SubgroupRef& b,
                               Order bound = kDefaultEnumerationBound);

// Throws TooLarge above `bound`.
std::vector<Permutation> elements(const PermGroup& g, Order bound = kDefaultEnumerationBound);
OrderSpectrum order_spectrum(const PermGroup& g, Order bound = kDefaultEnumerationBound);

// Equal orders and mutual generator membership.
bool subgroup_equal(const PermGroup& a, const PermGroup& b);
bool normalizes(const PermGroup& g, const PermGroup& n);

// Action on a G-invariant subset, relabelled by position in `subset`.
PermGroup restrict_to(const PermGroup& g, std::span<const Point> subset);
// Action on the blocks of a G-invariant partition, blocks numbered by position.
PermGroup block_action(const PermGroup& g, const Partition& blocks);
// Image of one element on the blocks; throws NotInvariant if blocks are not mapped to blocks.
Permutation induced_on_blocks(const Permutation& x, const Partition& blocks,
                              std::span<const std::uint32_t> block_of);
std::vector<std::uint32_t> block_index(const Partition& blocks, std::size_t degree);

Partition canonical_partition(Partition p);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
// Dihedral group of order 2n on n points.
PermGroup dihedral_group(std::size_t n);

}  // namespace plinth
