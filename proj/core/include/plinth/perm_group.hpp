#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "plinth/chain.hpp"
#include "plinth/permutation.hpp"

namespace plinth {

class PermGroup;

// A homomorphism from a smaller-degree source group onto a group. Large
// derived actions (coset and conjugacy-class actions) carry one, so that
// structural computations can run in the source and be mapped across.
struct Lift {
  std::shared_ptr<const PermGroup> source;
  std::function<Permutation(const Permutation&)> map;
};

// Finitely generated permutation group. The stabilizer chain is built lazily
// on first use (thread-safe) and never changes afterwards, so copies share it.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::optional<OrderHint> hint = std::nullopt,
            std::uint64_t seed = kDefaultSeed);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t seed() const noexcept;
  const std::optional<OrderHint>& hint() const noexcept;

  const StabilizerChain& chain() const;
  // A complete chain whose base starts with `prefix`; reuses chain() when
  // its base already does.
  std::shared_ptr<const StabilizerChain> chain_with_prefix(std::span<const Point> prefix) const;

  Order order() const;
  bool contains(const Permutation& g) const;  // throws DegreeMismatch
  bool is_trivial() const;

  // Both setters must be called before the chain is first used. A lift also
  // supplies an order bound (the source order) and a random-element source.
  void set_lift(Lift lift);
  const Lift* lift() const noexcept;
  // Source of (near-)uniform random elements for the randomized chain phase.
  // Only speed depends on its quality.
  void set_sampler(std::function<Permutation(Rng&)> sampler);

  Permutation random_element(Rng& rng) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// A subgroup of `parent` given by generators that are verified members.
class SubgroupRef {
 public:
  // Throws NotMember if a generator is not in the parent.
  SubgroupRef(PermGroup parent, std::vector<Permutation> generators,
              std::optional<OrderHint> hint = std::nullopt);

  // For generators that are members by construction (e.g. strong generators
  // of the parent's own chain).
  static SubgroupRef trusted(PermGroup parent, PermGroup group);

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  Order order() const { return group_.order(); }

 private:
  SubgroupRef(PermGroup parent, PermGroup group)
      : parent_(std::move(parent)), group_(std::move(group)) {}

  PermGroup parent_;
  PermGroup group_;
};

}  // namespace plinth
