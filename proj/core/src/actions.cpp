#include "plinth/actions.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "plinth/error.hpp"

namespace plinth {

namespace {

// Permutations keyed by fingerprint, with full comparison on hash hits.
class PermutationIndex {
 public:
  std::uint32_t find(const Permutation& x) const {
    auto [lo, hi] = buckets_.equal_range(fingerprint(x.images()));
    for (auto it = lo; it != hi; ++it) {
      if (items_[it->second] == x) return it->second;
    }
    return kMissing;
  }
  std::uint32_t insert(Permutation x) {
    auto index = static_cast<std::uint32_t>(items_.size());
    buckets_.emplace(fingerprint(x.images()), index);
    items_.push_back(std::move(x));
    return index;
  }
  const std::vector<Permutation>& items() const noexcept { return items_; }

  static constexpr std::uint32_t kMissing = UINT32_MAX;

 private:
  std::unordered_multimap<std::uint64_t, std::uint32_t> buckets_;
  std::vector<Permutation> items_;
};

}  // namespace

Permutation canonical_coset_element(const StabilizerChain& h_chain, const Permutation& x) {
  Permutation c = x;
  for (std::size_t i = 0; i < h_chain.length(); ++i) {
    // Elements u c with u in H^(i) send b_i to o^c for o in the basic orbit.
    Point best = h_chain.base_point(i);
    for (Point o : h_chain.orbit(i)) {
      if (c[o] < c[best]) best = o;
    }
    if (best != h_chain.base_point(i)) c = h_chain.transversal(i, best) * c;
  }
  return c;
}

CosetAction coset_action(const PermGroup& g, const SubgroupRef& h, std::size_t cap) {
  if (g.order() / h.order() > cap) throw Error(ErrorCode::kIndexTooLarge, "index exceeds the cap");
  struct State {
    PermGroup h;
    PermutationIndex cosets;
  };
  auto state = std::make_shared<State>(State{h.group(), {}});
  const StabilizerChain& chain = state->h.chain();
  state->cosets.insert(canonical_coset_element(chain, Permutation(g.degree())));

  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t head = 0; head < state->cosets.items().size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = canonical_coset_element(chain, state->cosets.items()[head] * gens[s]);
      std::uint32_t index = state->cosets.find(y);
      if (index == PermutationIndex::kMissing) {
        if (state->cosets.items().size() >= cap) throw Error(ErrorCode::kIndexTooLarge, "index exceeds the cap");
        index = state->cosets.insert(std::move(y));
      }
      images[s].push_back(index);
    }
  }
  std::vector<Permutation> action;
  for (auto& im : images) action.emplace_back(std::move(im));
  const std::size_t n = state->cosets.items().size();
  PermGroup group(n, std::move(action), OrderHint{g.order(), HintKind::kUpperBound}, g.seed());
  group.set_lift(Lift{std::make_shared<const PermGroup>(g), [state, n](const Permutation& x) {
                        const StabilizerChain& chain = state->h.chain();
                        std::vector<Point> im(n);
                        for (std::size_t i = 0; i < n; ++i) {
                          im[i] = state->cosets.find(canonical_coset_element(chain, state->cosets.items()[i] * x));
                        }
                        return Permutation(std::move(im));
                      }});
  return CosetAction{std::move(group), state->cosets.items()};
}

Permutation least_cyclic_generator(const Permutation& y, Order p) {
  Permutation best = y;
  Permutation power = y;
  for (Order i = 2; i < p; ++i) {
    power *= y;
    if (power < best) best = power;
  }
  return best;
}

SubgroupClassAction cyclic_class_action(const PermGroup& g, const SubgroupRef& socle, Order p,
                                        const SearchOptions& options) {
  const Order s = socle.order();
  if (p < 2 || s % p != 0 || (s / p) % p == 0) {
    throw Error(ErrorCode::kInvalidArgument, "p must divide the socle order exactly once");
  }
  auto z = element_of_order(socle.group(), p, options);
  if (!z) throw Error(ErrorCode::kConstructionFailed, "no element of order " + std::to_string(p) + " found");

  auto index = std::make_shared<PermutationIndex>();
  index->insert(least_cyclic_generator(*z, p));
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t head = 0; head < index->items().size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = least_cyclic_generator(index->items()[head].conjugate(gens[k]), p);
      std::uint32_t at = index->find(y);
      if (at == PermutationIndex::kMissing) at = index->insert(std::move(y));
      images[k].push_back(at);
    }
  }
  const std::size_t n = index->items().size();
  std::vector<Permutation> action;
  for (auto& im : images) action.emplace_back(std::move(im));
  PermGroup group(n, std::move(action), OrderHint{g.order(), HintKind::kUpperBound}, g.seed());
  group.set_lift(Lift{std::make_shared<const PermGroup>(g), [index, n, p](const Permutation& x) {
                        std::vector<Point> im(n);
                        for (std::size_t i = 0; i < n; ++i) {
                          im[i] = index->find(least_cyclic_generator(index->items()[i].conjugate(x), p));
                        }
                        return Permutation(std::move(im));
                      }});
  auto locate = [index, n, p](const Permutation& y) -> Point {
    std::uint32_t at = index->find(least_cyclic_generator(y, p));
    return at == PermutationIndex::kMissing ? static_cast<Point>(n) : at;
  };
  return SubgroupClassAction{std::move(group), index->items(), locate};
}

TupleCodec::TupleCodec(std::size_t base_degree, std::size_t arity, std::size_t cap)
    : base_(base_degree), arity_(arity), size_(1) {
  if (base_degree == 0 || arity == 0) throw Error(ErrorCode::kInvalidArgument, "empty product");
  for (std::size_t i = 0; i < arity; ++i) {
    if (size_ > cap / base_degree) throw Error(ErrorCode::kDegreeOverflow, "product degree exceeds the cap");
    size_ *= base_degree;
  }
}

Point TupleCodec::encode(std::span<const Point> tuple) const {
  std::size_t code = 0;
  for (Point d : tuple) code = code * base_ + d;
  return static_cast<Point>(code);
}

std::vector<Point> TupleCodec::decode(Point p) const {
  std::vector<Point> tuple(arity_);
  std::size_t code = p;
  for (std::size_t i = arity_; i-- > 0;) {
    tuple[i] = static_cast<Point>(code % base_);
    code /= base_;
  }
  return tuple;
}

Permutation product_action_element(const TupleCodec& codec, std::span<const Permutation> base,
                                   const Permutation& top) {
  std::vector<Point> images(codec.size());
  std::vector<Point> out(codec.arity());
  for (Point p = 0; p < codec.size(); ++p) {
    auto tuple = codec.decode(p);
    for (std::size_t i = 0; i < codec.arity(); ++i) out[top[static_cast<Point>(i)]] = base[i][tuple[i]];
    images[p] = codec.encode(out);
  }
  return Permutation(std::move(images));
}

CartesianDecomposition natural_decomposition(const TupleCodec& codec) {
  std::vector<Partition> partitions(codec.arity(), Partition(codec.base_degree()));
  for (Point p = 0; p < codec.size(); ++p) {
    auto tuple = codec.decode(p);
    for (std::size_t j = 0; j < codec.arity(); ++j) partitions[j][tuple[j]].push_back(p);
  }
  return CartesianDecomposition(codec.size(), std::move(partitions));
}

EncodedProductAction product_action_wreath(const PermGroup& k, std::size_t arity, const PermGroup& top,
                                           std::size_t cap) {
  if (arity < 2) throw Error(ErrorCode::kInvalidArgument, "product action needs arity at least 2");
  if (top.degree() != arity) throw Error(ErrorCode::kDegreeMismatch, "top group must act on the coordinates");
  TupleCodec codec(k.degree(), arity, cap);
  const Permutation id_base(k.degree());
  const Permutation id_top(arity);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < arity; ++i) {
    for (const auto& x : k.generators()) {
      std::vector<Permutation> base(arity, id_base);
      base[i] = x;
      gens.push_back(product_action_element(codec, base, id_top));
    }
  }
  const std::vector<Permutation> identity_base(arity, id_base);
  for (const auto& h : top.generators()) gens.push_back(product_action_element(codec, identity_base, h));
  Order bound = top.order();
  for (std::size_t i = 0; i < arity; ++i) bound = checked_mul(bound, k.order());
  PermGroup group(codec.size(), std::move(gens), OrderHint{bound, HintKind::kUpperBound}, k.seed());
  group.set_sampler([k, top, codec, arity](Rng& rng) {
    std::vector<Permutation> base;
    for (std::size_t i = 0; i < arity; ++i) base.push_back(k.random_element(rng));
    return product_action_element(codec, base, top.random_element(rng));
  });
  auto decomposition = natural_decomposition(codec);
  return EncodedProductAction{codec, std::move(group), std::move(decomposition)};
}

Permutation top_image(const Permutation& x, const CartesianDecomposition& e) {
  const std::size_t l = e.arity();
  std::vector<Point> images(l);
  for (std::size_t j = 0; j < l; ++j) {
    const auto& first = e.partition(j).front();
    std::size_t target = l;
    for (std::size_t t = 0; t < l && target == l; ++t) {
      if (e.partition(t).size() != e.partition(j).size()) continue;
      auto of = e.block_of(t);
      std::uint32_t b = of[x[first.front()]];
      if (std::all_of(first.begin(), first.end(), [&](Point p) { return of[x[p]] == b; })) target = t;
    }
    if (target == l) throw Error(ErrorCode::kNotDecompositionPreserving, "a block is not mapped onto a block");
    auto of = e.block_of(target);
    for (const auto& block : e.partition(j)) {
      std::uint32_t b = of[x[block.front()]];
      for (Point p : block) {
        if (of[x[p]] != b) throw Error(ErrorCode::kNotDecompositionPreserving, "a block is not mapped onto a block");
      }
    }
    images[j] = static_cast<Point>(target);
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(ErrorCode::kNotDecompositionPreserving, "partitions are not permuted");
  }
}

PermGroup top_projection(const PermGroup& g, const CartesianDecomposition& e) {
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(top_image(x, e));
  return PermGroup(e.arity(), std::move(gens), std::nullopt, g.seed());
}

std::vector<Permutation> partition_stabilizer_generators(const PermGroup& g, const CartesianDecomposition& e,
                                                         std::size_t j) {
  const auto& gens = g.generators();
  std::vector<Permutation> tops;
  for (const auto& x : gens) tops.push_back(top_image(x, e));
  // Transversal of j's top orbit by elements of G.
  std::vector<std::optional<Permutation>> u(e.arity());
  u[j] = Permutation(g.degree());
  std::vector<Point> queue{static_cast<Point>(j)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Point a = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Point b = tops[s][a];
      if (!u[b]) {
        u[b] = *u[a] * gens[s];
        queue.push_back(b);
      }
    }
  }
  std::vector<Permutation> out;
  for (Point a : queue) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = *u[a] * gens[s] * u[tops[s][a]]->inverse();
      if (!y.is_identity() && std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
    }
  }
  return out;
}

PermGroup component(const PermGroup& g, const CartesianDecomposition& e, std::size_t j) {
  if (j >= e.arity()) throw Error(ErrorCode::kInvalidArgument, "partition index out of range");
  std::vector<Permutation> gens;
  for (const auto& y : partition_stabilizer_generators(g, e, j)) {
    Permutation on_blocks = induced_on_blocks(y, e.partition(j), e.block_of(j));
    if (!on_blocks.is_identity() && std::find(gens.begin(), gens.end(), on_blocks) == gens.end()) {
      gens.push_back(std::move(on_blocks));
    }
  }
  return PermGroup(e.partition(j).size(), std::move(gens), std::nullopt, g.seed());
}

}  // namespace plinth
