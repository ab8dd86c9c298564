#pragma once

#include <functional>
#include <span>
#include <vector>

#include "plinth/decomposition.hpp"
#include "plinth/group_algorithms.hpp"

namespace plinth {

inline constexpr std::size_t kDefaultIndexCap = 100'000;
inline constexpr std::size_t kDefaultDegreeCap = 1'000'000;

// Right cosets Hx, point 0 being H itself. The resulting group carries a
// lift back to G.
struct CosetAction {
  PermGroup group;
  std::vector<Permutation> representatives;  // canonical element of each coset
};

// The unique element of Hx whose images of H's base points are
// lexicographically least.
Permutation canonical_coset_element(const StabilizerChain& h_chain, const Permutation& x);

// Throws IndexTooLarge if |G:H| exceeds `cap`.
CosetAction coset_action(const PermGroup& g, const SubgroupRef& h, std::size_t cap = kDefaultIndexCap);

// Conjugation action on a class of cyclic subgroups of prime order, point 0
// being the subgroup of the element found in the socle.
struct SubgroupClassAction {
  PermGroup group;
  // Lexicographically least nonidentity member of each subgroup. The sorted
  // list of all members starts with the identity followed by this element,
  // so it determines the subgroup.
  std::vector<Permutation> members;
  // Point of the class member <y>, or degree() if <y> is not in the class.
  std::function<Point(const Permutation&)> index_of;
};

Permutation least_cyclic_generator(const Permutation& y, Order p);

// p must divide |socle| exactly once. Throws ConstructionFailed if no element
// of order p is found.
SubgroupClassAction cyclic_class_action(const PermGroup& g, const SubgroupRef& socle, Order p,
                                        const SearchOptions& options = {});

// Tuples (δ_1, ..., δ_ℓ) are encoded row-major, coordinate 1 most significant.
class TupleCodec {
 public:
  TupleCodec(std::size_t base_degree, std::size_t arity, std::size_t cap = kDefaultDegreeCap);
  std::size_t base_degree() const noexcept { return base_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return size_; }
  Point encode(std::span<const Point> tuple) const;
  std::vector<Point> decode(Point p) const;

 private:
  std::size_t base_;
  std::size_t arity_;
  std::size_t size_;
};

// (δ_1,…,δ_ℓ)^{(g_1,…,g_ℓ)h} = (δ_{1h⁻¹}^{g_{1h⁻¹}}, …, δ_{ℓh⁻¹}^{g_{ℓh⁻¹}}):
// the entry in position i, moved by g_i, lands in position i^h.
Permutation product_action_element(const TupleCodec& codec, std::span<const Permutation> base,
                                   const Permutation& top);

struct EncodedProductAction {
  TupleCodec codec;
  PermGroup group;
  CartesianDecomposition decomposition;  // partition j groups tuples by coordinate j
};

// K wr top in product action on Δ^ℓ. Throws DegreeOverflow above `cap`.
EncodedProductAction product_action_wreath(const PermGroup& k, std::size_t arity, const PermGroup& top,
                                           std::size_t cap = kDefaultDegreeCap);

// The natural grid of Δ^ℓ under a codec.
CartesianDecomposition natural_decomposition(const TupleCodec& codec);

// Permutation of the partitions induced by x; throws NotDecompositionPreserving.
Permutation top_image(const Permutation& x, const CartesianDecomposition& e);
PermGroup top_projection(const PermGroup& g, const CartesianDecomposition& e);

// Generators of the stabilizer of partition j under the top action (Schreier
// generators, so they are elements of G).
std::vector<Permutation> partition_stabilizer_generators(const PermGroup& g, const CartesianDecomposition& e,
                                                         std::size_t j);

// Action of the stabilizer of partition j on the blocks of partition j.
PermGroup component(const PermGroup& g, const CartesianDecomposition& e, std::size_t j);

}  // namespace plinth
