#include "plinth/perm_group.hpp"

#include <algorithm>
#include <mutex>

#include "plinth/error.hpp"

namespace plinth {

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<OrderHint> hint;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Lift> lift;
  std::function<Permutation(Rng&)> sampler;

  std::once_flag built;
  std::unique_ptr<StabilizerChain> chain;

  std::mutex prefix_mutex;
  std::vector<std::pair<std::vector<Point>, std::shared_ptr<const StabilizerChain>>> prefix_chains;

  void build();
};

namespace {

constexpr std::size_t kPrefixStallLimit = 4096;

bool starts_with(const std::vector<Point>& base, std::span<const Point> prefix) {
  return base.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), base.begin());
}

}  // namespace

void PermGroup::Impl::build() {
  chain = std::make_unique<StabilizerChain>(degree, std::vector<Point>{});
  for (const auto& g : generators) {
    auto [residue, level] = chain->sift(g);
    if (!residue.is_identity()) chain->add_strong_generator(std::move(residue), level);
  }
  if (chain->length() == 0) return;

  std::optional<OrderHint> bound = hint;
  if (lift && (!bound || bound->kind == HintKind::kClaimed)) {
    bound = OrderHint{lift->source->order(), HintKind::kUpperBound};
  }
  if (!bound) {
    chain->complete();
    return;
  }

  Rng rng(seed);
  std::function<Permutation()> next;
  std::unique_ptr<ProductReplacement> replacement;
  if (sampler) {
    next = [&] { return sampler(rng); };
  } else if (lift) {
    next = [&] { return lift->map(lift->source->random_element(rng)); };
  } else {
    replacement = std::make_unique<ProductReplacement>(degree, generators, seed);
    next = [&] { return replacement->next(); };
  }
  ChainOptions defaults;
  chain->randomize(next, bound->value, defaults.random_stall_limit);
  // Reaching a proven upper bound certifies the chain; anything else is
  // completed deterministically.
  if (bound->kind == HintKind::kUpperBound && chain->order() == bound->value) return;
  chain->complete();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::optional<OrderHint> hint, std::uint64_t seed)
    : impl_(std::make_shared<Impl>()) {
  if (degree == 0) throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::kDegreeMismatch, "generator degree differs from group degree");
  }
  if (generators.empty()) generators.emplace_back(degree);
  impl_->degree = degree;
  impl_->generators = std::move(generators);
  impl_->hint = hint;
  impl_->seed = seed;
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return impl_->generators; }
std::uint64_t PermGroup::seed() const noexcept { return impl_->seed; }
const std::optional<OrderHint>& PermGroup::hint() const noexcept { return impl_->hint; }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(impl_->built, [this] { impl_->build(); });
  return *impl_->chain;
}

std::shared_ptr<const StabilizerChain> PermGroup::chain_with_prefix(std::span<const Point> prefix) const {
  const StabilizerChain& main = chain();
  if (starts_with(main.base(), prefix)) {
    return std::shared_ptr<const StabilizerChain>(impl_, impl_->chain.get());
  }
  std::lock_guard lock(impl_->prefix_mutex);
  for (const auto& [key, cached] : impl_->prefix_chains) {
    if (std::equal(key.begin(), key.end(), prefix.begin(), prefix.end())) return cached;
  }
  auto built = std::make_shared<StabilizerChain>(degree(), std::vector<Point>(prefix.begin(), prefix.end()));
  for (const auto& g : impl_->generators) {
    auto [residue, level] = built->sift(g);
    if (!residue.is_identity()) built->add_strong_generator(std::move(residue), level);
  }
  Rng rng(impl_->seed ^ fingerprint(prefix));
  built->randomize([&] { return main.random_element(rng); }, main.order(), kPrefixStallLimit);
  if (built->order() != main.order()) built->complete();
  // Trailing prefix levels with trivial orbits carry no information but are
  // kept so that level indices match prefix positions.
  impl_->prefix_chains.emplace_back(std::vector<Point>(prefix.begin(), prefix.end()), built);
  return built;
}

Order PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

bool PermGroup::is_trivial() const {
  return std::all_of(impl_->generators.begin(), impl_->generators.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

void PermGroup::set_lift(Lift lift) { impl_->lift = std::move(lift); }
const Lift* PermGroup::lift() const noexcept { return impl_->lift ? &*impl_->lift : nullptr; }
void PermGroup::set_sampler(std::function<Permutation(Rng&)> sampler) { impl_->sampler = std::move(sampler); }

Permutation PermGroup::random_element(Rng& rng) const { return chain().random_element(rng); }

SubgroupRef::SubgroupRef(PermGroup parent, std::vector<Permutation> generators,
                         std::optional<OrderHint> hint)
    : parent_(parent), group_(parent.degree(), std::move(generators), hint, parent.seed()) {
  for (const auto& g : group_.generators()) {
    if (!parent_.contains(g)) throw Error(ErrorCode::kNotMember, "subgroup generator " + g.to_cycle_string() + " is not in the parent group");
  }
}

SubgroupRef SubgroupRef::trusted(PermGroup parent, PermGroup group) {
  if (parent.degree() != group.degree()) throw Error(ErrorCode::kDegreeMismatch, "subgroup degree differs from parent");
  return SubgroupRef(std::move(parent), std::move(group));
}

}  // namespace plinth
