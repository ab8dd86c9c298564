#include <gtest/gtest.h>

#include "plinth/tools/cases.hpp"
#include "plinth/error.hpp"

namespace plinth::tools {
namespace {

Report sample(Status status) {
  Report r{"sample", Status::kPass, 7, {}, {}, {}, nullptr};
  if (status == Status::kSkip) {
    r.skip("no data");
  } else {
    r.check("order", std::uint64_t{60}, status == Status::kPass ? 60U : 59U, "key");
  }
  return r;
}

TEST(Report, StatusFollowsChecks) {
  EXPECT_EQ(sample(Status::kPass).status, Status::kPass);
  EXPECT_EQ(sample(Status::kFail).status, Status::kFail);
  EXPECT_EQ(sample(Status::kSkip).status, Status::kSkip);
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(exit_code({sample(Status::kPass)}), 0);
  EXPECT_EQ(exit_code({sample(Status::kPass), sample(Status::kFail)}), 1);
  EXPECT_EQ(exit_code({sample(Status::kSkip)}), 2);
  EXPECT_EQ(exit_code({sample(Status::kSkip), sample(Status::kPass)}), 0);
}

TEST(Report, KeyOrderAndDigestIgnoreTimings) {
  Report a = sample(Status::kPass);
  Report b = sample(Status::kPass);
  a.timings_ms.emplace_back("phase", 1.0);
  b.timings_ms.emplace_back("phase", 250.0);
  EXPECT_EQ(digest(a), digest(b));
  auto j = to_json(a);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "case", "status", "seed", "checks", "notes", "digest",
                                            "timings_ms"}));
  EXPECT_EQ(j["schema"], kSchemaVersion);

  b.checks[0].actual = "61";
  EXPECT_NE(digest(a), digest(b));
}

TEST(Report, AnchorsResolveKeys) {
  Anchors anchors = Anchors::load(std::string(PLINTH_DATA_DIR) + "/anchors.tbl");
  EXPECT_NE(anchors.lookup("two-arc"), "two-arc");
  EXPECT_EQ(anchors.lookup("no-such-key"), "no-such-key");
  EXPECT_THROW(Anchors::load("/nonexistent/anchors.tbl"), Error);
}

TEST(Cases, RegistryAndSeededDeterminism) {
  EXPECT_THROW(run_case("nope", {}), Error);
  CaseOptions options;
  options.data_dir = PLINTH_DATA_DIR;
  options.seed = 5;
  Report a = run_case("m12", options);
  Report b = run_case("m12", options);
  EXPECT_EQ(a.status, Status::kPass);
  EXPECT_EQ(digest(a), digest(b));
  Report skip = run_case("o8plus2", options);
  EXPECT_EQ(skip.status, Status::kSkip);
}

}  // namespace
}  // namespace plinth::tools
