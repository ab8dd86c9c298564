#include "plinth/field.hpp"

#include <map>
#include <utility>

#include "plinth/error.hpp"

namespace plinth {

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& k) {
  if (q < 2) return false;
  p = 2;
  while (q % p != 0) ++p;
  k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1;
}

}  // namespace

Field::Field(std::uint32_t q) : q_(q) {
  if (q > 65536 || !prime_power(q, p_, k_)) {
    throw Error(ErrorCode::kInvalidArgument, "field size must be a prime power at most 2^16");
  }
  exp_.resize(q - 1);
  log_.assign(q, 0);

  // Builds the power sequence of `g` under `times_g`; true iff g has order q-1.
  auto try_generator = [&](auto&& times_g) {
    std::vector<bool> seen(q, false);
    Element x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      if (x == 0 || seen[x]) return false;
      seen[x] = true;
      exp_[i] = x;
      log_[x] = i;
      x = times_g(x);
    }
    return x == 1;
  };

  if (k_ == 1) {
    for (Element g = 1; g < q; ++g) {
      if (try_generator([&](Element x) { return static_cast<Element>((std::uint64_t{x} * g) % q); })) return;
    }
    throw Error(ErrorCode::kConstructionFailed, "no primitive root");
  }

  // Multiplication by x modulo the monic modulus, on digit vectors.
  auto times_x = [&](Element a) {
    std::vector<std::uint32_t> digits(k_ + 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      digits[i + 1] = a % p_;
      a /= p_;
    }
    std::uint32_t top = digits[k_];
    Element out = 0;
    for (std::uint32_t i = k_; i-- > 0;) {
      std::uint32_t c = (digits[i] + p_ - (top * modulus_[i]) % p_) % p_;
      out = out * p_ + c;
    }
    return out;
  };

  auto it = conway_table().find({p_, k_});
  if (it != conway_table().end()) {
    modulus_ = it->second;
    if (!try_generator(times_x)) throw Error(ErrorCode::kConstructionFailed, "tabulated polynomial is not primitive");
    return;
  }
  // First primitive polynomial in the order of its integer encoding.
  for (std::uint32_t code = 1; code < q; ++code) {
    modulus_.assign(k_ + 1, 0);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < k_; ++i) {
      modulus_[i] = c % p_;
      c /= p_;
    }
    modulus_[k_] = 1;
    if (modulus_[0] != 0 && try_generator(times_x)) return;
  }
  throw Error(ErrorCode::kConstructionFailed, "no primitive polynomial found");
}

Field::Element Field::add(Element a, Element b) const noexcept {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Element Field::neg(Element a) const noexcept {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Field::Element Field::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Field::Element Field::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

bool Field::is_square(Element a) const noexcept {
  return a == 0 || p_ == 2 || log_[a] % 2 == 0;
}

std::uint32_t Field::log(Element a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "log of zero");
  return log_[a];
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m{dim, std::vector<Field::Element>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out{a.dim, std::vector<Field::Element>(a.dim * a.dim, 0)};
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) {
      Field::Element s = 0;
      for (std::size_t i = 0; i < a.dim; ++i) s = f.add(s, f.mul(a.at(r, i), b.at(i, c)));
      out.at(r, c) = s;
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) = a.at(c, r);
  }
  return out;
}

std::vector<Field::Element> apply(const Field& f, const std::vector<Field::Element>& row, const Matrix& m) {
  std::vector<Field::Element> out(m.dim, 0);
  for (std::size_t c = 0; c < m.dim; ++c) {
    for (std::size_t i = 0; i < m.dim; ++i) out[c] = f.add(out[c], f.mul(row[i], m.at(i, c)));
  }
  return out;
}

}  // namespace plinth
