#pragma once

#include <string>
#include <vector>

#include "plinth/actions.hpp"
#include "plinth/decomposition.hpp"

namespace plinth {

// Every nontrivial block system of a transitive group, canonicalized and
// sorted. Built by taking minimal systems and recursing on block actions.
std::vector<Partition> all_block_systems(const PermGroup& g);

// Sets of 2..arity_max partitions, each a block system of G or of an index-2
// subgroup of G, that satisfy the grid property and are permuted among
// themselves by G. Sorted by partition list; empty if none.
std::vector<CartesianDecomposition> find_grid_decompositions(const PermGroup& g, std::size_t arity_max = 2);

enum class InclusionTag { kNormal, kCD1S, kCD2Sim, kCD2NotSim, kCD3, kIntransitiveTop };
std::string_view to_string(InclusionTag tag);

struct InclusionType {
  InclusionTag tag = InclusionTag::kNormal;
  std::size_t s = 0;                             // components containing each simple factor
  std::vector<std::size_t> factor_components;    // partitions moved by factor 0
  std::vector<Order> projection_orders;          // A, B for s = 2
  bool projection_is_full = false;               // A = T
  bool spectra_equal = false;
  bool orbit_lengths_equal = false;
  // Normal verdicts: |M_ω| and the product of component stabilizer orders.
  Order stabilizer_order = 0;
  Order component_stabilizer_product = 0;
  bool product_formula_holds = false;
  std::string isomorphism_test;  // how A ≅ B was decided
};

// `factors` are generator lists of the simple direct factors of M. M must be
// normal in G, lie in the base group, and G must preserve E. Projections for
// s = 2 are supported when M is simple; otherwise throws
// ProjectionUnsupported. Throws TooManyComponents if s > 3.
InclusionType classify_inclusion(const PermGroup& g, const SubgroupRef& m,
                                 const std::vector<std::vector<Permutation>>& factors,
                                 const CartesianDecomposition& e, Point omega);

struct BlowupEmbedding {
  EncodedProductAction action;
  CartesianDecomposition source;  // orbits of the complements of each factor
  std::vector<Point> bijection;   // original point -> tuple code
  std::size_t xi_size = 0;
};

// Re-embeds G into Sym(Ξ) wr S_r, Ξ the cosets of M_1 ∩ M_ω in M_1, and
// checks that every generator's image is a product-action element. Throws
// NotXSubgroup, NotInvariant, NotTransitive.
BlowupEmbedding blowup_embedding(const PermGroup& g, const std::vector<std::vector<Permutation>>& factors,
                                 Point omega);

struct FactorizationTerm {
  Order a_order = 0;     // |A_r|
  Order rest_order = 0;  // |∩_{i≠r} A_i|
  Order meet_order = 0;  // |A_r ∩ ∩_{i≠r} A_i|
  bool holds = false;
};

struct StrongFactorization {
  bool holds = false;
  std::vector<FactorizationTerm> terms;
};

// A_r (∩_{i≠r} A_i) = T for every r, by order arithmetic on intersections.
// Throws TooLarge when an intersection exceeds the enumeration bound.
StrongFactorization strong_factorization_check(const PermGroup& t, const std::vector<SubgroupRef>& subgroups,
                                               Order bound = kDefaultEnumerationBound);

}  // namespace plinth
