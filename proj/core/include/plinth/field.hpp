#pragma once

#include <cstdint>
#include <vector>

namespace plinth {

// GF(p^k) with q <= 2^16. An element is the integer whose base-p digits are
// its polynomial coefficients (digit i = coefficient of x^i); 0 and 1 are the
// field's zero and one. Multiplication goes through exp/log tables built
// from a fixed primitive polynomial, so every platform gets the same tables.
class Field {
 public:
  using Element = std::uint32_t;

  // Throws InvalidArgument unless q is a prime power in [2, 65536].
  explicit Field(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  // Modulus coefficients, constant term first, leading 1 last. Empty for k = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  // Generator of the multiplicative group: x for k > 1, the least primitive root for k = 1.
  Element primitive() const noexcept { return exp_[1]; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;  // throws InvalidArgument for 0
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element frobenius(Element a) const noexcept { return pow(a, p_); }
  bool is_square(Element a) const noexcept;

  Element exp(std::uint32_t i) const noexcept { return exp_[i % (q_ - 1)]; }
  std::uint32_t log(Element a) const;  // throws InvalidArgument for 0

 private:
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

// Dense square matrix over a Field, acting on row vectors from the right.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Field::Element> entries;  // row-major

  static Matrix identity(std::size_t dim);
  Field::Element at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  Field::Element& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<Field::Element> apply(const Field& f, const std::vector<Field::Element>& row, const Matrix& m);

}  // namespace plinth
