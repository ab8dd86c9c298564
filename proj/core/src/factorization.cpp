#include "plinth/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <fstream>
#include <numeric>
#include <sstream>

#include "plinth/classical.hpp"
#include "plinth/error.hpp"

namespace plinth {

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

// Non-comment, non-blank lines split on '|', with line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> table_lines(const std::string& text,
                                                                         std::size_t fields) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto bar = line.find('|', start);
      parts.push_back(trim(std::string_view(line).substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (parts.size() != fields) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(number) + ": expected " + std::to_string(fields) +
                                              " fields, found " + std::to_string(parts.size()));
    }
    out.emplace_back(number, std::move(parts));
  }
  return out;
}

std::uint64_t parse_number(const std::string& s, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": not a number: '" + s + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool known_label(const std::string& label) {
  if (label == "P1" || label == "A4" || label == "S4" || label == "A5") return true;
  return label.size() > 1 && label[0] == 'D' &&
         std::all_of(label.begin() + 1, label.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Order parabolic_order(std::uint32_t q) { return static_cast<Order>(q) * (q - 1) / (q % 2 == 0 ? 1 : 2); }

}  // namespace

std::vector<FactorizationRow> parse_factorization_table(const std::string& text) {
  std::vector<FactorizationRow> rows;
  for (auto& [line, f] : table_lines(text, 7)) {
    FactorizationRow row;
    row.q = static_cast<std::uint32_t>(parse_number(f[0], line));
    row.a_label = f[1];
    row.a_order = parse_number(f[2], line);
    row.b_label = f[3];
    row.b_order = parse_number(f[4], line);
    row.meet_order = parse_number(f[5], line);
    row.anchor = f[6];
    row.line = line;
    if (!known_label(row.a_label) || !known_label(row.b_label)) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": unknown subgroup label");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FactorizationRow> load_factorization_table(const std::string& path) {
  return parse_factorization_table(read_file(path));
}

OrderSpectrum label_spectrum(const std::string& label) {
  if (label == "A4") return {{1, 1}, {2, 3}, {3, 8}};
  if (label == "S4") return {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  if (label == "A5") return {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (label.size() > 1 && label[0] == 'D') {
    // Rotations C_m contribute φ(d) elements of order d; m reflections.
    Order m = std::stoull(label.substr(1)) / 2;
    OrderSpectrum out;
    for (Order d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      Order phi = 0;
      for (Order k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
      out[d] += phi;
    }
    out[2] += m;
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "no spectrum for label " + label);
}

FactorizationRecord verify_psl2_factorization_row(const FactorizationRow& row, const SearchOptions& options) {
  PermGroup t = psl2_action(row.q, Psl2Flavor::kPSL);
  FactorizationRecord record{row, t.order(), 0, 0, 0, false};

  auto build = [&](const std::string& label, Order order, std::uint64_t seed,
                   const std::function<bool(const PermGroup&)>& accept) -> SubgroupRef {
    if (label == "P1") return point_stabilizer(t, row.q);
    OrderSpectrum profile = label_spectrum(label);
    SearchOptions o = options;
    o.seed = seed;
    auto found = random_subgroup_of_order(t, order, &profile, o, accept);
    if (!found) {
      throw Error(ErrorCode::kConstructionFailed,
                  "no " + label + " subgroup found in PSL(2," + std::to_string(row.q) + ")");
    }
    return *found;
  };

  SubgroupRef a = build(row.a_label, row.a_order, options.seed, {});
  auto factorizes = [&](const PermGroup& b) {
    SubgroupRef candidate = SubgroupRef::trusted(t, b);
    return intersection_small(a, candidate).order() == a.order() * b.order() / t.order() &&
           a.order() * b.order() % t.order() == 0;
  };
  SubgroupRef b = build(row.b_label, row.b_order, options.seed + 1, factorizes);
  record.a_order = a.order();
  record.b_order = b.order();
  record.meet_order = intersection_small(a, b).order();
  bool product = record.a_order * record.b_order == record.t_order * record.meet_order;
  record.verified = product && record.a_order == row.a_order && record.b_order == row.b_order &&
                    record.meet_order == row.meet_order;
  if (!product || record.a_order != row.a_order || record.b_order != row.b_order) {
    throw Error(ErrorCode::kMismatch, "row at line " + std::to_string(row.line) + " contradicted");
  }
  return record;
}

std::vector<ProjectionRow> parse_projection_table(const std::string& text) {
  std::vector<ProjectionRow> rows;
  for (auto& [line, f] : table_lines(text, 5)) {
    ProjectionRow row{f[0], f[1], f[2], f[3], f[4], line};
    if (row.order != "P1") parse_number(row.order, line);
    std::istringstream conds(row.condition);
    std::string c;
    while (std::getline(conds, c, ',')) {
      c = trim(c);
      bool ok = c == "any" || c == "prime" || (c.rfind("pm1mod", 0) == 0 && c.size() > 6);
      if (!ok) throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": bad condition '" + c + "'");
      if (c.size() > 6 && c != "prime") parse_number(c.substr(6), line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ProjectionRow> load_projection_table(const std::string& path) {
  return parse_projection_table(read_file(path));
}

bool projection_condition_holds(const std::string& condition, std::uint32_t q) {
  std::istringstream conds(condition);
  std::string c;
  while (std::getline(conds, c, ',')) {
    c = trim(c);
    if (c == "any") continue;
    if (c == "prime") {
      if (!is_prime(q)) return false;
      continue;
    }
    std::uint32_t modulus = static_cast<std::uint32_t>(std::stoul(c.substr(6)));
    std::uint32_t r = q % modulus;
    if (r != 1 && r != modulus - 1) return false;
  }
  return true;
}

Order projection_order(const ProjectionRow& row, std::uint32_t q) {
  return row.order == "P1" ? parabolic_order(q) : std::stoull(row.order);
}

std::vector<TableConflict> cross_check_tables(const std::vector<ProjectionRow>& projections,
                                              const std::vector<FactorizationRow>& factorizations) {
  std::vector<TableConflict> out;
  for (const auto& p : projections) {
    for (const auto& f : factorizations) {
      if (!projection_condition_holds(p.condition, f.q)) continue;
      Order order = projection_order(p, f.q);
      if (f.meet_order % order == 0) {
        out.push_back({p.family, f.q, order, f.a_label, f.b_label, f.meet_order});
      }
    }
  }
  return out;
}

}  // namespace plinth
