#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plinth/permutation.hpp"

namespace plinth {

// Text format, 1-based points, `#` comments:
//   degree <n>
//   order <N>                      (optional)
//   gen (1,2,3)(4,5)               disjoint cycles, "()" for the identity
//   gen [2,3,1,4,5]                image list
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<Order> expected_order;
};

// Throws ParseError naming the line, NotBijection for invalid generators.
GeneratorFile parse_generators(const std::string& text);
GeneratorFile load_generators(const std::string& path);  // also IoError

// Canonical form: degree, optional order, one cycle-notation line per
// generator. parse(emit(f)) reproduces f and emit is a fixed point.
std::string emit_generators(const GeneratorFile& file);

// Parses "(1,2)(3,4,5)" with 1-based points.
Permutation parse_cycles(const std::string& text, std::size_t degree);

}  // namespace plinth
