#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plinth/permutation.hpp"
#include "plinth/random.hpp"

namespace plinth {

enum class HintKind {
  // A proven upper bound on the order (for instance the order of a group that
  // surjects onto this one). Reaching it certifies the chain.
  kUpperBound,
  // An unproven claim. It only steers the randomized phase; the chain is then
  // completed deterministically, which re-verifies it.
  kClaimed,
};

struct OrderHint {
  Order value = 0;
  HintKind kind = HintKind::kUpperBound;
};

struct ChainOptions {
  std::uint64_t seed = kDefaultSeed;
  std::vector<Point> base_prefix;
  // Consecutive sifts to identity tolerated by the randomized phase before it
  // hands over to the deterministic completion.
  std::size_t random_stall_limit = 96;
};

// Base and strong generating set with Schreier-vector transversals.
//
// Level i holds the base point b_i, the strong generators fixing
// b_0..b_{i-1}, and the orbit of b_i under them. `via[p]` is the index of the
// strong generator s with p = q^s for the tree parent q (-1 at the root,
// -2 when p is outside the orbit).
class StabilizerChain {
 public:
  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped (length() if it ran through)
  };

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::vector<Point> base_prefix);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::vector<Point> base() const;
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point p) const { return levels_[level].via[p] != kUnreached; }
  std::vector<Permutation> level_generators(std::size_t level) const;
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }

  // Product of the basic orbit lengths. This is a lower bound on the order of
  // the generated group, and equals it once the chain is complete.
  Order order() const;

  SiftResult sift(Permutation g) const;
  bool contains(const Permutation& g) const;
  // u with base_point(level)^u == p; p must lie in the basic orbit.
  Permutation transversal(std::size_t level, Point p) const;
  // Strong generator indices along the tree path from the base point to p.
  std::vector<std::uint32_t> path(std::size_t level, Point p) const;

  // Uniform random element of the stabilizer of the first `from_level` base points.
  Permutation random_element(Rng& rng, std::size_t from_level = 0) const;
  // Order of the stabilizer of the first `from_level` base points.
  Order order_from(std::size_t from_level) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

  // Adds a nonidentity element that sifted to `level`, extending the base if
  // needed, and rebuilds the affected basic orbits.
  void add_strong_generator(Permutation h, std::size_t level);
  // Deterministic Schreier-Sims completion from the current state.
  // Returns false if `abort_above` is set and the order bound exceeded it.
  bool complete(std::optional<Order> abort_above = std::nullopt);
  // Randomized phase driven by `next_random`. Stops when the order reaches
  // `target`, or after `stall_limit` consecutive identity sifts.
  void randomize(const std::function<Permutation()>& next_random, Order target,
                 std::size_t stall_limit);

 private:
  static constexpr std::int32_t kRoot = -1;
  static constexpr std::int32_t kUnreached = -2;

  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> via;
  };

  void rebuild_orbit(std::size_t level);
  void append_level(Point base);

  std::size_t degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

// Product-replacement random element generator over a fixed generating list.
class ProductReplacement {
 public:
  ProductReplacement(std::size_t degree, const std::vector<Permutation>& gens,
                     std::uint64_t seed);
  Permutation next();

 private:
  Rng rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

}  // namespace plinth
