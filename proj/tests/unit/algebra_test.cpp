#include <gtest/gtest.h>

#include <set>

#include "plinth/classical.hpp"
#include "plinth/error.hpp"
#include "plinth/group_algorithms.hpp"
#include "support/oracles.hpp"

namespace plinth {
namespace {

// Schoolbook polynomial product modulo the field's modulus, on digit vectors.
Field::Element slow_mul(const Field& f, Field::Element a, Field::Element b) {
  const std::uint32_t p = f.characteristic();
  const std::uint32_t k = f.degree();
  if (k == 1) return static_cast<Field::Element>((std::uint64_t{a} * b) % p);
  std::vector<std::uint32_t> da(k), db(k), prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  const auto& m = f.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    std::uint32_t c = prod[d];
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * m[i] % p) % p;
  }
  Field::Element out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(Field(6), Error);
  EXPECT_THROW(Field(1), Error);
  EXPECT_THROW(Field(70000), Error);
}

TEST(Field, AxiomsExhaustiveUpTo32) {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    Field f(q);
    for (Field::Element a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1U) << q;
      }
      EXPECT_EQ(f.frobenius(f.add(a, 1)), f.add(f.frobenius(a), 1));
      for (Field::Element b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), slow_mul(f, a, b)) << "q=" << q;
        EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        for (Field::Element c = 0; c < q; c += (q > 16 ? 3 : 1)) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
          EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        }
      }
    }
    // Multiplicative group is cyclic, generated by primitive().
    std::set<Field::Element> powers;
    for (std::uint32_t i = 0; i < q - 1; ++i) powers.insert(f.exp(i));
    EXPECT_EQ(powers.size(), q - 1);
  }
}

TEST(Field, LargeSupportedSizes) {
  for (std::uint32_t q : {59, 64, 81, 125, 243, 256, 1024, 65536}) {
    Field f(q);
    EXPECT_EQ(f.pow(f.primitive(), q - 1), 1U);
    Field::Element x = f.exp(q / 3);
    EXPECT_EQ(f.mul(x, f.inv(x)), 1U);
  }
}

TEST(Psl2, Orders) {
  EXPECT_EQ(psl2_action(9, Psl2Flavor::kPSL).order(), 360U);
  EXPECT_EQ(psl2_action(9, Psl2Flavor::kPGammaL).order(), 1440U);
  EXPECT_EQ(psl2_action(8, Psl2Flavor::kPSL).order(), 504U);
  EXPECT_EQ(psl2_action(8, Psl2Flavor::kPSigmaL).order(), 1512U);
  EXPECT_EQ(psl2_action(11, Psl2Flavor::kPGL).order(), 1320U);
  EXPECT_EQ(psl2_action(59, Psl2Flavor::kPSL).order(), 102660U);
  EXPECT_EQ(psl2_action(9, Psl2Flavor::kPSL).degree(), 10U);
}

TEST(Psl2, UnsupportedFlavors) {
  EXPECT_THROW(psl2_action(7, Psl2Flavor::kPSigmaL), Error);
  EXPECT_THROW(psl2_action(25, Psl2Flavor::kM10), Error);
}

TEST(Psl2, DoublyTransitive) {
  for (std::uint32_t q : {4, 5, 7, 8, 9, 11, 13, 16, 19, 23, 25, 27, 29}) {
    auto g = psl2_action(q, Psl2Flavor::kPSL);
    std::vector<Point> all(q + 1);
    for (Point p = 0; p <= q; ++p) all[p] = p;
    EXPECT_TRUE(is_k_transitive(g, all, 2)) << q;
  }
}

TEST(Psl2, ThreeDistinctIndexTwoOvergroups) {
  auto pgaml = psl2_action(9, Psl2Flavor::kPGammaL);
  auto psl = psl2_action(9, Psl2Flavor::kPSL);
  std::vector<PermGroup> middle{psl2_action(9, Psl2Flavor::kPSigmaL), psl2_action(9, Psl2Flavor::kPGL),
                                psl2_action(9, Psl2Flavor::kM10)};
  auto all_elements = oracle::closure(10, pgaml.generators());
  EXPECT_EQ(all_elements.size(), 1440U);
  std::vector<std::set<Permutation>> sets;
  for (const auto& m : middle) {
    EXPECT_EQ(m.order(), 720U);
    for (const auto& x : m.generators()) EXPECT_TRUE(pgaml.contains(x));
    for (const auto& x : psl.generators()) EXPECT_TRUE(m.contains(x));
    auto e = oracle::closure(10, m.generators());
    sets.emplace_back(e.begin(), e.end());
  }
  EXPECT_NE(sets[0], sets[1]);
  EXPECT_NE(sets[0], sets[2]);
  EXPECT_NE(sets[1], sets[2]);
}

TEST(Psl2, FlavorFingerprints) {
  auto max_order = [](const PermGroup& g) {
    Order m = 0;
    for (const auto& x : oracle::closure(g.degree(), g.generators())) m = std::max(m, x.order());
    return m;
  };
  auto s6 = psl2_action(9, Psl2Flavor::kPSigmaL);
  EXPECT_EQ(identify_extension_flavor(s6), Psl2Flavor::kPSigmaL);
  EXPECT_EQ(max_order(s6), 6U);
  auto pgl = psl2_action(9, Psl2Flavor::kPGL);
  EXPECT_EQ(identify_extension_flavor(pgl), Psl2Flavor::kPGL);
  EXPECT_EQ(max_order(pgl), 10U);
  EXPECT_EQ(identify_extension_flavor(psl2_action(9, Psl2Flavor::kPSL)), Psl2Flavor::kPSL);
  EXPECT_EQ(identify_extension_flavor(psl2_action(9, Psl2Flavor::kM10)), Psl2Flavor::kM10);
  EXPECT_THROW(identify_extension_flavor(symmetric_group(10)), Error);
}

TEST(Psl2, FrobeniusIsNotInPsl) {
  Field f(9);
  auto psl = psl2_action(9, Psl2Flavor::kPSL);
  EXPECT_FALSE(psl.contains(semilinear_mobius(f, 1, 0, 0, 1, 1)));
}

TEST(Sp4, OrdersAndFormPreservation) {
  auto g2 = sp4(2);
  EXPECT_EQ(g2.group.degree(), 15U);
  EXPECT_EQ(g2.group.order(), 720U);
  auto g4 = sp4(4);
  EXPECT_EQ(g4.group.degree(), 85U);
  EXPECT_EQ(g4.group.order(), 979200U);
  const Matrix j = symplectic_gram(g4.field);
  for (const auto& m : g4.matrices) {
    EXPECT_EQ(multiply(g4.field, multiply(g4.field, m, j), transpose(m)), j);
  }
}

TEST(Sp4, FaithfulOnProjectivePoints) {
  // The kernel consists of symplectic scalars; in characteristic 2 only 1.
  for (std::uint32_t q : {2, 4}) {
    auto g = sp4(q);
    const Matrix j = symplectic_gram(g.field);
    for (Field::Element lambda = 2; lambda < q; ++lambda) {
      Matrix s = Matrix::identity(4);
      for (std::size_t i = 0; i < 4; ++i) s.at(i, i) = lambda;
      EXPECT_NE(multiply(g.field, multiply(g.field, s, j), transpose(s)), j);
    }
  }
}

TEST(GQ, Parameters) {
  for (std::uint32_t q : {2, 4}) {
    auto gq = symplectic_gq(q);
    const std::size_t n = (q * q + 1) * (q + 1);
    EXPECT_EQ(gq.points.size(), n);
    EXPECT_EQ(gq.lines.size(), n);
    Field f(q);
    std::vector<std::size_t> point_degrees, line_degrees;
    for (const auto& l : gq.lines_on_point) point_degrees.push_back(l.size());
    for (const auto& l : gq.lines) {
      line_degrees.push_back(l.size());
      for (Point a : l) {
        for (Point b : l) EXPECT_EQ(symplectic_form(f, gq.points[a], gq.points[b]), 0U);
      }
    }
    EXPECT_EQ(point_degrees, std::vector<std::size_t>(n, q + 1));
    EXPECT_EQ(point_degrees, line_degrees);
    // Two points share at most one line.
    std::set<std::pair<Point, Point>> pairs;
    for (const auto& l : gq.lines) {
      for (Point a : l) {
        for (Point b : l) {
          if (a < b) EXPECT_TRUE(pairs.insert({a, b}).second);
        }
      }
    }
  }
}

}  // namespace
}  // namespace plinth
