#include "plinth/tools/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "plinth/error.hpp"

namespace plinth::tools {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkip: return "SKIP";
  }
  return "?";
}

Anchors Anchors::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  Anchors out;
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash == 0) continue;
    if (trim(line).empty()) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(number) + ": expected 'key | text'");
    }
    out.entries_.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
  }
  return out;
}

std::string Anchors::lookup(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return key;
}

void Report::check(const std::string& check_name, const std::string& expected, const std::string& actual,
                   const std::string& anchor_key) {
  bool pass = expected == actual;
  checks.push_back({check_name, expected, actual, pass, anchors ? anchors->lookup(anchor_key) : anchor_key});
  if (!pass) status = Status::kFail;
}

void Report::check(const std::string& check_name, bool expected, bool actual, const std::string& anchor_key) {
  check(check_name, std::string(expected ? "true" : "false"), std::string(actual ? "true" : "false"), anchor_key);
}

void Report::check(const std::string& check_name, std::uint64_t expected, std::uint64_t actual,
                   const std::string& anchor_key) {
  check(check_name, std::to_string(expected), std::to_string(actual), anchor_key);
}

void Report::fail(const std::string& check_name, const std::string& expected, const std::string& error,
                  const std::string& anchor_key) {
  checks.push_back({check_name, expected, "error: " + error, false, anchors ? anchors->lookup(anchor_key) : anchor_key});
  status = Status::kFail;
}

void Report::skip(const std::string& reason) {
  status = Status::kSkip;
  notes.push_back(reason);
}

namespace {

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

nlohmann::ordered_json body(const Report& report) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["case"] = report.name;
  j["status"] = std::string(to_string(report.status));
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    cj["anchor"] = c.anchor;
    j["checks"].push_back(std::move(cj));
  }
  j["notes"] = report.notes;
  return j;
}

}  // namespace

PhaseTimer::PhaseTimer(Report& report, std::string phase)
    : report_(report), phase_(std::move(phase)), start_ns_(now_ns()) {}

PhaseTimer::~PhaseTimer() { report_.timings_ms.emplace_back(phase_, static_cast<double>(now_ns() - start_ns_) / 1e6); }

std::string digest(const Report& report) {
  // 64-bit FNV-1a over the timing-free serialization.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : body(report).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j = body(report);
  j["digest"] = digest(report);
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [phase, ms] : report.timings_ms) timings[phase] = ms;
  j["timings_ms"] = std::move(timings);
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << report.name << ": " << to_string(report.status) << " (seed " << report.seed << ")\n";
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  for (const auto& c : report.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << std::string(width - c.name.size(), ' ')
        << "  expected " << c.expected;
    if (!c.pass || c.actual != c.expected) out << ", got " << c.actual;
    out << '\n';
  }
  for (const auto& n : report.notes) out << "  note: " << n << '\n';
  for (const auto& [phase, ms] : report.timings_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    out << "  time " << phase << ": " << buf << " ms\n";
  }
  return out.str();
}

int exit_code(const std::vector<Report>& reports) {
  bool all_skip = !reports.empty();
  for (const auto& r : reports) {
    if (r.status == Status::kFail) return 1;
    if (r.status != Status::kSkip) all_skip = false;
  }
  return all_skip ? 2 : 0;
}

void write_json(const std::vector<Report>& reports, const std::string& path) {
  nlohmann::ordered_json j;
  if (reports.size() == 1) {
    j = to_json(reports[0]);
  } else {
    j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace plinth::tools
