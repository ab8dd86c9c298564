#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace plinth {

using Point = std::uint32_t;
using Order = std::uint64_t;

// A bijection of {0, ..., n-1} stored as its image array. Groups act on the
// right: `p * q` applies p first, then q, so (a^p)^q == a^(p*q).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws NotBijection unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  // Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const noexcept { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  // x^-1 * this * x
  Permutation conjugate(const Permutation& x) const;

  bool is_identity() const noexcept;
  Order order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  std::vector<std::size_t> cycle_type() const;    // all cycle lengths, sorted
  // Smallest moved point, or degree() if identity.
  Point first_moved() const noexcept;

  // Disjoint-cycle string with 1-based points, e.g. "(1,2)(3,4,5)"; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// 64-bit FNV-1a over an image array; used for hashed keys of canonical forms.
std::uint64_t fingerprint(std::span<const Point> images) noexcept;

Order checked_mul(Order a, Order b);
Order lcm(Order a, Order b);

}  // namespace plinth
