#include <gtest/gtest.h>

#include "plinth/error.hpp"
#include "plinth/generator_file.hpp"
#include "plinth/group_algorithms.hpp"
#include "support/oracles.hpp"

namespace plinth {
namespace {

const std::string kDataDir = PLINTH_DATA_DIR;

ErrorCode code_of(const std::string& text) {
  try {
    parse_generators(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kMismatch;
}

TEST(GeneratorFile, Examples) {
  auto f = parse_generators("degree 3\ngen (1,2)\n");
  ASSERT_EQ(f.generators.size(), 1U);
  EXPECT_EQ(f.generators[0], Permutation::from_cycles(3, {{0, 1}}));
  auto g = parse_generators("# images\ndegree 4\ngen [2, 3, 1, 4]  # a 3-cycle\ngen ()\n");
  EXPECT_EQ(g.generators[0], Permutation::from_cycles(4, {{0, 1, 2}}));
  EXPECT_TRUE(g.generators[1].is_identity());
}

TEST(GeneratorFile, Errors) {
  try {
    parse_generators("degree 3\n\ngen (1,2\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_EQ(code_of("gen (1,2)\ndegree 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("degree 3\ngen (1,4)\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("degree 3\ngen (1,2)(2,3)\n"), ErrorCode::kNotBijection);
  EXPECT_EQ(code_of("degree 3\ngen [1,1,2]\n"), ErrorCode::kNotBijection);
  EXPECT_EQ(code_of("degree 3\ngen [1,2]\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("degree 3\nfoo 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of(""), ErrorCode::kParseError);
  EXPECT_THROW(load_generators("/nonexistent/file"), Error);
}

TEST(GeneratorFile, RoundTripIsStable) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorFile f;
    f.degree = 1 + uniform_below(rng, 30);
    if (trial % 2) f.expected_order = uniform_below(rng, 1'000'000);
    for (std::size_t i = 0; i < uniform_below(rng, 4); ++i) f.generators.push_back(oracle::random_permutation(rng, f.degree));
    std::string once = emit_generators(f);
    auto parsed = parse_generators(once);
    EXPECT_EQ(parsed.generators, f.generators);
    EXPECT_EQ(parsed.expected_order, f.expected_order);
    EXPECT_EQ(emit_generators(parsed), once);
  }
}

TEST(GeneratorFile, ShippedM12) {
  auto f = load_generators(kDataDir + "/m12.gens");
  EXPECT_EQ(f.degree, 12U);
  EXPECT_EQ(f.generators.size(), 2U);
  PermGroup g(f.degree, f.generators);
  EXPECT_EQ(g.order(), 95040U);
  EXPECT_EQ(f.expected_order, std::optional<Order>(95040));
  std::vector<Point> all(12);
  for (Point i = 0; i < 12; ++i) all[i] = i;
  EXPECT_TRUE(is_k_transitive(g, all, 5));
  EXPECT_FALSE(is_k_transitive(g, all, 6));
}

}  // namespace
}  // namespace plinth
