#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace plinth::tools {

enum class Status { kPass, kFail, kSkip };
std::string_view to_string(Status status);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string anchor;
};

// Check keys resolve to anchor text through a `key | text` table; unknown
// keys are reported verbatim.
class Anchors {
 public:
  Anchors() = default;
  static Anchors load(const std::string& path);  // IoError, ParseError
  std::string lookup(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// status is PASS iff every check passes; SKIP is set explicitly and only
// while there are no checks.
struct Report {
  std::string name;
  Status status = Status::kPass;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings_ms;  // phase order
  const Anchors* anchors = nullptr;

  void check(const std::string& check_name, const std::string& expected, const std::string& actual,
             const std::string& anchor_key);
  void check(const std::string& check_name, bool expected, bool actual, const std::string& anchor_key);
  void check(const std::string& check_name, std::uint64_t expected, std::uint64_t actual,
             const std::string& anchor_key);
  void fail(const std::string& check_name, const std::string& expected, const std::string& error,
            const std::string& anchor_key);
  void skip(const std::string& reason);
};

// Records the wall time of one phase into the report on destruction.
class PhaseTimer {
 public:
  PhaseTimer(Report& report, std::string phase);
  ~PhaseTimer();
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  Report& report_;
  std::string phase_;
  std::int64_t start_ns_;
};

inline constexpr int kSchemaVersion = 1;

// Keys in fixed order: schema, case, status, seed, checks, notes, digest,
// timings_ms. The digest hashes everything before it, so two runs with the
// same seed agree on it even though timings differ.
nlohmann::ordered_json to_json(const Report& report);
std::string digest(const Report& report);
std::string to_text(const Report& report);

// 1 if any report failed, 2 if every report skipped, else 0.
int exit_code(const std::vector<Report>& reports);

// One report is written as an object, several as an array. Throws IoError.
void write_json(const std::vector<Report>& reports, const std::string& path);

}  // namespace plinth::tools
