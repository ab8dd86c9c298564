#include <gtest/gtest.h>

#include "plinth/error.hpp"
#include "plinth/factorization.hpp"

namespace plinth {
namespace {

const std::string kDataDir = PLINTH_DATA_DIR;

TEST(FactorizationTable, ParsesShippedFile) {
  auto rows = load_factorization_table(kDataDir + "/psl2_factorizations.tbl");
  EXPECT_EQ(rows.size(), 15U);
  for (const auto& row : rows) {
    // Orders must at least be consistent with |T| = q(q^2-1)/gcd(2,q-1).
    Order t = static_cast<Order>(row.q) * (row.q * row.q - 1) / (row.q % 2 == 0 ? 1 : 2);
    EXPECT_EQ(row.a_order * row.b_order, t * row.meet_order) << "line " << row.line;
  }
}

TEST(FactorizationTable, ParseErrorsCarryLineNumbers) {
  try {
    parse_factorization_table("# comment\n5 | P1 | 10 | A4 | 12 | 2 | x\n7 | P1 | 21 | S4 | 24\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_factorization_table("5 | Q7 | 10 | A4 | 12 | 2 | x\n"), Error);
  EXPECT_THROW(parse_factorization_table("5 | P1 | ten | A4 | 12 | 2 | x\n"), Error);
  EXPECT_THROW(load_factorization_table("/nonexistent/table"), Error);
}

TEST(FactorizationRows, SmallFieldsVerify) {
  for (const auto& row : load_factorization_table(kDataDir + "/psl2_factorizations.tbl")) {
    if (row.q > 11) continue;
    auto record = verify_psl2_factorization_row(row);
    EXPECT_TRUE(record.verified) << "q=" << row.q << " " << row.a_label << "*" << row.b_label;
    EXPECT_EQ(record.meet_order, row.meet_order);
  }
}

TEST(FactorizationRows, ContradictedRowIsMismatch) {
  auto rows = parse_factorization_table("8 | P1 | 56 | D18 | 18 | 3 | x\n");
  auto record = verify_psl2_factorization_row(rows[0]);
  EXPECT_FALSE(record.verified);
  EXPECT_EQ(record.meet_order, 2U);
  auto bad_order = parse_factorization_table("8 | P1 | 50 | D18 | 18 | 2 | x\n");
  EXPECT_THROW(verify_psl2_factorization_row(bad_order[0]), Error);
}

TEST(LabelSpectrum, Dihedral) {
  EXPECT_EQ(label_spectrum("D10"), (OrderSpectrum{{1, 1}, {2, 5}, {5, 4}}));
  EXPECT_EQ(label_spectrum("D8"), (OrderSpectrum{{1, 1}, {2, 5}, {4, 2}}));
}

TEST(ProjectionTable, CrossCheck) {
  auto projections = load_projection_table(kDataDir + "/psl2_projections.tbl");
  auto factorizations = load_factorization_table(kDataDir + "/psl2_factorizations.tbl");
  EXPECT_EQ(projections.size(), 5U);
  EXPECT_TRUE(projection_condition_holds("prime,pm1mod5", 11));
  EXPECT_FALSE(projection_condition_holds("prime,pm1mod5", 9));
  EXPECT_TRUE(projection_condition_holds("pm1mod8", 9));
  EXPECT_EQ(projection_order(projections[1], 9), 36U);
  auto conflicts = cross_check_tables(projections, factorizations);
  ASSERT_EQ(conflicts.size(), 1U);
  EXPECT_EQ(conflicts[0].family, "family-e");
  EXPECT_EQ(conflicts[0].q, 9U);
  EXPECT_EQ(conflicts[0].meet_order, 6U);
  EXPECT_THROW(parse_projection_table("f | pm1modx | S3 | 6 | a\n"), Error);
}

}  // namespace
}  // namespace plinth
