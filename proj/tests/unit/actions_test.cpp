#include <gtest/gtest.h>

#include <set>

#include "plinth/actions.hpp"
#include "plinth/classical.hpp"
#include "plinth/error.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace plinth {
namespace {

TEST(CosetAction, Examples) {
  auto s4 = symmetric_group(4);
  auto s3 = point_stabilizer(s4, 3);
  auto on_cosets = coset_action(s4, s3);
  EXPECT_EQ(on_cosets.group.degree(), 4U);
  EXPECT_EQ(on_cosets.group.order(), 24U);
  SubgroupRef whole(s4, s4.generators());
  EXPECT_EQ(coset_action(s4, whole).group.degree(), 1U);
  EXPECT_THROW(coset_action(symmetric_group(8), SubgroupRef(symmetric_group(8), {}), 1000), Error);
}

TEST(CosetAction, MatchesEnumeratedCosetsAndCore) {
  Rng rng(5);
  for (const auto& s : corpus::small_groups(43)) {
    PermGroup g(s.degree, s.generators);
    if (g.order() > 2000) continue;
    auto elements = oracle::closure(s.degree, s.generators);
    for (int trial = 0; trial < 3; ++trial) {
      SubgroupRef h(g, {g.random_element(rng)});
      auto action = coset_action(g, h);
      auto he = oracle::closure(s.degree, h.generators());
      std::set<Permutation> hs(he.begin(), he.end());
      EXPECT_EQ(action.group.degree() * hs.size(), elements.size()) << s.name;
      // Representatives lie in distinct cosets and generators act correctly.
      for (std::size_t i = 0; i < action.representatives.size(); ++i) {
        for (std::size_t k = 0; k < s.generators.size(); ++k) {
          Point j = action.group.generators()[k][static_cast<Point>(i)];
          EXPECT_TRUE(hs.count(action.representatives[i] * s.generators[k] * action.representatives[j].inverse()));
        }
      }
      // Kernel is the core: intersection of all conjugates of H.
      std::size_t core = 0;
      for (const auto& x : he) {
        bool in_all = std::all_of(elements.begin(), elements.end(),
                                  [&](const Permutation& y) { return hs.count(x.conjugate(y)) == 1; });
        core += in_all ? 1 : 0;
      }
      EXPECT_EQ(action.group.order() * core, elements.size()) << s.name;
    }
  }
}

TEST(CosetAction, LiftMapsGeneratorsToActionGenerators) {
  auto a5 = alternating_group(5);
  SubgroupRef h(a5, {Permutation::from_cycles(5, {{0, 1, 2}})});
  auto action = coset_action(a5, h);
  const Lift* lift = action.group.lift();
  ASSERT_NE(lift, nullptr);
  for (std::size_t k = 0; k < a5.generators().size(); ++k) {
    EXPECT_EQ(lift->map(a5.generators()[k]), action.group.generators()[k]);
  }
  EXPECT_EQ(action.group.order(), 60U);
}

TEST(ClassAction, A6FivesGivesThirtySix) {
  auto psl = psl2_action(9, Psl2Flavor::kPSL);
  SubgroupRef socle(psl, psl.generators());
  auto action = cyclic_class_action(psl, socle, 5);
  EXPECT_EQ(action.group.degree(), 36U);
  // Sylow count by enumeration: elements of order 5, four per subgroup.
  std::size_t fives = 0;
  for (const auto& x : oracle::closure(10, psl.generators())) fives += x.order() == 5 ? 1 : 0;
  EXPECT_EQ(fives / 4, 36U);
  EXPECT_EQ(action.group.order(), 360U);
  EXPECT_EQ(point_stabilizer(action.group, 0).order() * 36, 360U);
}

TEST(ClassAction, A4Threes) {
  auto a4 = alternating_group(4);
  SubgroupRef socle(a4, a4.generators());
  auto action = cyclic_class_action(a4, socle, 3);
  EXPECT_EQ(action.group.degree(), 4U);
  EXPECT_EQ(action.index_of(action.members[2]), 2U);
  EXPECT_THROW(cyclic_class_action(a4, socle, 2), Error);
}

TEST(ClassAction, KeysArePermutedBijectively) {
  auto g = psl2_action(9, Psl2Flavor::kPGammaL);
  auto psl = psl2_action(9, Psl2Flavor::kPSL);
  SubgroupRef socle(g, psl.generators());
  auto action = cyclic_class_action(g, socle, 5);
  EXPECT_EQ(action.group.degree(), 36U);
  EXPECT_EQ(action.group.order(), 1440U);
  for (const auto& x : g.generators()) {
    std::set<Point> images;
    for (const auto& m : action.members) images.insert(action.index_of(m.conjugate(x)));
    EXPECT_EQ(images.size(), 36U);
    EXPECT_FALSE(images.count(36));
  }
}

// Direct evaluation of the product-action rule, independent of the codec.
std::vector<Point> act_on_tuple(const std::vector<Point>& delta, const std::vector<Permutation>& base,
                                const Permutation& h) {
  const std::size_t l = delta.size();
  Permutation h_inv = h.inverse();
  std::vector<Point> out(l);
  for (std::size_t i = 0; i < l; ++i) {
    Point src = h_inv[static_cast<Point>(i)];
    out[i] = base[src][delta[src]];
  }
  return out;
}

TEST(ProductAction, ExamplesAndOrders) {
  auto s6 = symmetric_group(6);
  auto w = product_action_wreath(s6, 2, symmetric_group(2));
  EXPECT_EQ(w.group.degree(), 36U);
  EXPECT_EQ(w.group.order(), 1036800U);
  auto pet = product_action_wreath(corpus::petersen_automorphisms(), 2, symmetric_group(2));
  EXPECT_EQ(pet.group.degree(), 100U);
  EXPECT_EQ(pet.group.order(), 28800U);
  auto tiny = product_action_wreath(PermGroup::trivial(2), 2, symmetric_group(2));
  EXPECT_EQ(tiny.group.degree(), 4U);
  EXPECT_EQ(tiny.group.order(), 2U);
  EXPECT_THROW(product_action_wreath(s6, 8, symmetric_group(8), 1000), Error);
}

TEST(ProductAction, RuleHoldsOnSampledPoints) {
  Rng rng(50);
  for (std::size_t l : {2, 3}) {
    auto k = symmetric_group(5);
    TupleCodec codec(5, l);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Permutation> base;
      for (std::size_t i = 0; i < l; ++i) base.push_back(oracle::random_permutation(rng, 5));
      Permutation h = oracle::random_permutation(rng, l);
      Permutation x = product_action_element(codec, base, h);
      for (int s = 0; s < 50; ++s) {
        Point p = static_cast<Point>(uniform_below(rng, codec.size()));
        EXPECT_EQ(codec.decode(x[p]), act_on_tuple(codec.decode(p), base, h));
      }
    }
  }
}

TEST(ProductAction, CodecIsRowMajor) {
  TupleCodec codec(6, 2);
  const Point t[] = {2, 5};
  EXPECT_EQ(codec.encode(t), 17U);
  EXPECT_EQ(codec.decode(17), (std::vector<Point>{2, 5}));
}

TEST(TopProjection, Examples) {
  auto w = product_action_wreath(symmetric_group(6), 2, symmetric_group(2));
  EXPECT_EQ(top_projection(w.group, w.decomposition).order(), 2U);
  // Base group only: the first 2 * |gens(S6)| generators.
  std::vector<Permutation> base(w.group.generators().begin(), w.group.generators().begin() + 4);
  EXPECT_EQ(top_projection(PermGroup(36, base), w.decomposition).order(), 1U);
  EXPECT_THROW(top_image(Permutation::from_cycles(36, {{0, 1}}), w.decomposition), Error);
}

TEST(Component, FullWreathAndCoordinateCopies) {
  auto w = product_action_wreath(symmetric_group(6), 2, symmetric_group(2));
  for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(component(w.group, w.decomposition, j).order(), 720U);
  // Copy of K acting in coordinate 1 only.
  std::vector<Permutation> first(w.group.generators().begin(), w.group.generators().begin() + 2);
  PermGroup copy(36, first);
  EXPECT_EQ(component(copy, w.decomposition, 0).order(), 720U);
  EXPECT_EQ(component(copy, w.decomposition, 1).order(), 1U);
}

TEST(Decomposition, RejectsNonGrids) {
  EXPECT_THROW(CartesianDecomposition(4, {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}}), Error);
  CartesianDecomposition ok(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  const std::uint32_t b[] = {1, 0};
  EXPECT_EQ(ok.point_at(b), 2U);
}

}  // namespace
}  // namespace plinth
