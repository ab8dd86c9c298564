#include "plinth/generator_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "plinth/error.hpp"

namespace plinth {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Point one_based(Cursor& c, std::uint64_t value, std::size_t degree) {
  if (value < 1 || value > degree) c.fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
  return static_cast<Point>(value - 1);
}

Permutation cycles_at(Cursor& c, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  while (!c.done()) {
    c.expect('(');
    std::vector<Point> cycle;
    if (!c.peek(')')) {
      cycle.push_back(one_based(c, c.number(), degree));
      while (c.peek(',')) {
        c.expect(',');
        cycle.push_back(one_based(c, c.number(), degree));
      }
    }
    c.expect(')');
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

Permutation images_at(Cursor& c, std::size_t degree) {
  c.expect('[');
  std::vector<Point> images;
  if (!c.peek(']')) {
    images.push_back(one_based(c, c.number(), degree));
    while (c.peek(',')) {
      c.expect(',');
      images.push_back(one_based(c, c.number(), degree));
    }
  }
  c.expect(']');
  if (!c.done()) c.fail("trailing text after image list");
  if (images.size() != degree) c.fail("image list has " + std::to_string(images.size()) + " entries");
  return Permutation(std::move(images));
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Cursor c(text, 1);
  return cycles_at(c, degree);
}

GeneratorFile parse_generators(const std::string& text) {
  GeneratorFile file;
  std::istringstream in(text);
  std::string raw;
  bool have_degree = false;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    std::string_view line(raw);
    line = line.substr(0, line.find('#'));
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    line = line.substr(start);
    std::size_t space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    Cursor rest(space == std::string_view::npos ? std::string_view{} : line.substr(space), number);
    if (keyword == "degree") {
      if (have_degree) rest.fail("degree given twice");
      file.degree = rest.number();
      if (!rest.done()) rest.fail("trailing text after degree");
      if (file.degree == 0) rest.fail("degree must be positive");
      have_degree = true;
    } else if (keyword == "order") {
      file.expected_order = rest.number();
      if (!rest.done()) rest.fail("trailing text after order");
    } else if (keyword == "gen") {
      if (!have_degree) rest.fail("gen before degree");
      file.generators.push_back(rest.peek('[') ? images_at(rest, file.degree) : cycles_at(rest, file.degree));
    } else {
      rest.fail("unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_degree) throw Error(ErrorCode::kParseError, "line 0: missing degree");
  return file;
}

GeneratorFile load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_generators(buffer.str());
}

std::string emit_generators(const GeneratorFile& file) {
  std::string out = "degree " + std::to_string(file.degree) + "\n";
  if (file.expected_order) out += "order " + std::to_string(*file.expected_order) + "\n";
  for (const auto& g : file.generators) out += "gen " + g.to_cycle_string() + "\n";
  return out;
}

}  // namespace plinth
