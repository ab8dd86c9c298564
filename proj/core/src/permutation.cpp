#include "plinth/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "plinth/error.hpp"

namespace plinth {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorCode::kNotBijection, "image array is not a permutation");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree || used[p]) {
        throw Error(ErrorCode::kNotBijection, "cycles are not disjoint or exceed the degree");
      }
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorCode::kDegreeMismatch, "product of unequal degrees");
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (degree() != rhs.degree()) throw Error(ErrorCode::kDegreeMismatch, "product of unequal degrees");
  for (auto& p : images_) p = rhs.images_[p];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result *= base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::conjugate(const Permutation& x) const {
  if (degree() != x.degree()) throw Error(ErrorCode::kDegreeMismatch, "conjugate of unequal degrees");
  // p^x maps a^x to (a^p)^x.
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) result.images_[x.images_[a]] = x.images_[images_[a]];
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Order Permutation::order() const {
  Order result = 1;
  for (std::size_t len : cycle_type()) result = lcm(result, len);
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return static_cast<std::size_t>(fingerprint(p.images()));
}

std::uint64_t fingerprint(std::span<const Point> images) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : images) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (p >> shift) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

Order checked_mul(Order a, Order b) {
  Order r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOrderOverflow, "order exceeds 64 bits");
  return r;
}

Order lcm(Order a, Order b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace plinth
