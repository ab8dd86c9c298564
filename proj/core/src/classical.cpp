#include "plinth/classical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plinth/error.hpp"
#include "plinth/group_algorithms.hpp"

namespace plinth {

std::string_view to_string(Psl2Flavor flavor) {
  switch (flavor) {
    case Psl2Flavor::kPSL: return "PSL";
    case Psl2Flavor::kPGL: return "PGL";
    case Psl2Flavor::kPSigmaL: return "PSigmaL";
    case Psl2Flavor::kM10: return "M10";
    case Psl2Flavor::kPGammaL: return "PGammaL";
  }
  return "?";
}

Permutation semilinear_mobius(const Field& f, Field::Element a, Field::Element b, Field::Element c,
                              Field::Element d, std::uint32_t frobenius_power) {
  const std::uint32_t q = f.q();
  const Point infinity = q;
  std::uint64_t exponent = 1;
  for (std::uint32_t i = 0; i < frobenius_power; ++i) exponent *= f.characteristic();
  std::vector<Point> images(q + 1);
  for (Point x = 0; x <= q; ++x) {
    if (x == infinity) {
      images[x] = c == 0 ? infinity : f.div(a, c);
      continue;
    }
    Field::Element y = f.pow(x, exponent);
    Field::Element num = f.add(f.mul(a, y), b);
    Field::Element den = f.add(f.mul(c, y), d);
    images[x] = den == 0 ? infinity : f.div(num, den);
  }
  return Permutation(std::move(images));
}

PermGroup psl2_action(std::uint32_t q, Psl2Flavor flavor) {
  Field f(q);
  const std::uint32_t k = f.degree();
  if ((flavor == Psl2Flavor::kPSigmaL || flavor == Psl2Flavor::kPGammaL) && k == 1) {
    throw Error(ErrorCode::kUnsupportedFlavor, "semilinear flavors need a proper prime power");
  }
  if (flavor == Psl2Flavor::kM10 && q != 9) throw Error(ErrorCode::kUnsupportedFlavor, "M10 exists only for q = 9");
  const Field::Element w = f.primitive();
  const Field::Element one = 1;
  const Field::Element minus_one = f.neg(1);

  std::vector<Permutation> gens{semilinear_mobius(f, one, one, 0, one)};
  const bool linear_pgl = flavor == Psl2Flavor::kPGL || flavor == Psl2Flavor::kPGammaL;
  if (linear_pgl) {
    gens.push_back(semilinear_mobius(f, w, 0, 0, one));
    gens.push_back(semilinear_mobius(f, 0, one, one, 0));
  } else {
    gens.push_back(semilinear_mobius(f, f.mul(w, w), 0, 0, one));
    gens.push_back(semilinear_mobius(f, 0, minus_one, one, 0));
  }
  if (flavor == Psl2Flavor::kPSigmaL || flavor == Psl2Flavor::kPGammaL) {
    gens.push_back(semilinear_mobius(f, one, 0, 0, one, 1));
  }
  if (flavor == Psl2Flavor::kM10) gens.push_back(semilinear_mobius(f, w, 0, 0, one, 1));

  const Order pgl = Order{q} * (Order{q} * q - 1);
  const Order psl = pgl / std::gcd<Order>(2, q - 1);
  Order expected = psl;
  switch (flavor) {
    case Psl2Flavor::kPSL: expected = psl; break;
    case Psl2Flavor::kPGL: expected = pgl; break;
    case Psl2Flavor::kPSigmaL: expected = psl * k; break;
    case Psl2Flavor::kM10: expected = 2 * psl; break;
    case Psl2Flavor::kPGammaL: expected = pgl * k; break;
  }
  PermGroup g(q + 1, std::move(gens));
  if (g.order() != expected) {
    throw Error(ErrorCode::kConstructionFailed, "projective line group has order " + std::to_string(g.order()) +
                                                    ", expected " + std::to_string(expected));
  }
  if (q == 9 && identify_extension_flavor(g) != flavor) {
    throw Error(ErrorCode::kConstructionFailed, "flavor fingerprint disagrees with construction");
  }
  return g;
}

Psl2Flavor identify_extension_flavor(const PermGroup& g) {
  const Order n = g.order();
  if (g.degree() != 10 || 1440 % n != 0 || n % 360 != 0) {
    throw Error(ErrorCode::kUnrecognized, "not between PSL(2,9) and PGammaL(2,9) on 10 points");
  }
  if (n == 360) return Psl2Flavor::kPSL;
  if (n == 1440) return Psl2Flavor::kPGammaL;
  OrderSpectrum spectrum = order_spectrum(g);
  if (spectrum.count(10)) return Psl2Flavor::kPGL;
  if (spectrum.count(8)) return Psl2Flavor::kM10;
  if (spectrum.rbegin()->first == 6) return Psl2Flavor::kPSigmaL;
  throw Error(ErrorCode::kUnrecognized, "element-order spectrum matches no extension of PSL(2,9)");
}

Field::Element symplectic_form(const Field& f, const std::vector<Field::Element>& x,
                               const std::vector<Field::Element>& y) {
  Field::Element s = f.sub(f.mul(x[0], y[3]), f.mul(x[3], y[0]));
  return f.add(s, f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])));
}

Matrix symplectic_gram(const Field& f) {
  Matrix j{4, std::vector<Field::Element>(16, 0)};
  j.at(0, 3) = 1;
  j.at(3, 0) = f.neg(1);
  j.at(1, 2) = 1;
  j.at(2, 1) = f.neg(1);
  return j;
}

namespace {

std::uint32_t encode(const Field& f, const std::vector<Field::Element>& v) {
  std::uint32_t code = 0;
  for (auto x : v) code = code * f.q() + x;
  return code;
}

std::vector<Field::Element> normalize(const Field& f, std::vector<Field::Element> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Field::Element x) { return x != 0; });
  if (lead == v.end()) throw Error(ErrorCode::kInvalidArgument, "zero vector has no projective point");
  Field::Element scale = f.inv(*lead);
  for (auto& x : v) x = f.mul(x, scale);
  return v;
}

// Normalized nonzero vectors of F^4 in increasing code order.
std::vector<std::vector<Field::Element>> projective_points(const Field& f) {
  std::vector<std::vector<Field::Element>> out;
  const std::uint32_t q = f.q();
  for (std::uint32_t code = 1; code < q * q * q * q; ++code) {
    std::vector<Field::Element> v(4);
    std::uint32_t c = code;
    for (std::size_t i = 4; i-- > 0;) {
      v[i] = c % q;
      c /= q;
    }
    if (*std::find_if(v.begin(), v.end(), [](Field::Element x) { return x != 0; }) == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

Point projective_point_index(const Sp4Group& g, const std::vector<Field::Element>& v) {
  return static_cast<Point>(g.index_of_code[encode(g.field, normalize(g.field, v))]);
}

Sp4Group sp4(std::uint32_t q) {
  Field f(q);
  auto points = projective_points(f);
  std::vector<std::int32_t> index_of_code(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::size_t i = 0; i < points.size(); ++i) index_of_code[encode(f, points[i])] = static_cast<std::int32_t>(i);

  const Matrix j = symplectic_gram(f);
  auto to_permutation = [&](const Matrix& m) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      images[i] = static_cast<Point>(index_of_code[encode(f, normalize(f, apply(f, points[i], m)))]);
    }
    return Permutation(std::move(images));
  };

  const Order q2 = Order{q} * q;
  const Order target = q2 * q2 * (q2 - 1) * (q2 * q2 - 1);
  std::vector<Field::Element> scalars{1};
  if (f.primitive() != 1) scalars.push_back(f.primitive());

  std::vector<Matrix> matrices;
  SubgroupClosure closure(points.size());
  for (const auto& v : points) {
    for (auto a : scalars) {
      // x M = x + a (x J v^T) v
      Matrix m = Matrix::identity(4);
      for (std::size_t r = 0; r < 4; ++r) {
        Field::Element jv = 0;
        for (std::size_t s = 0; s < 4; ++s) jv = f.add(jv, f.mul(j.at(r, s), v[s]));
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = f.add(m.at(r, c), f.mul(a, f.mul(jv, v[c])));
      }
      if (multiply(f, multiply(f, m, j), transpose(m)) != j) {
        throw Error(ErrorCode::kConstructionFailed, "transvection does not preserve the form");
      }
      if (closure.add(to_permutation(m))) matrices.push_back(std::move(m));
      if (closure.order() == target) {
        return Sp4Group{f, std::move(matrices), std::move(points), closure.to_group(), std::move(index_of_code)};
      }
    }
  }
  throw Error(ErrorCode::kConstructionFailed, "transvections generate a group of order " + std::to_string(closure.order()));
}

GQGeometry symplectic_gq(std::uint32_t q) {
  Field f(q);
  GQGeometry gq;
  gq.q = q;
  gq.points = projective_points(f);
  std::vector<std::int32_t> index_of_code(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::size_t i = 0; i < gq.points.size(); ++i) index_of_code[encode(f, gq.points[i])] = static_cast<std::int32_t>(i);

  std::set<std::vector<Point>> lines;
  for (std::size_t a = 0; a < gq.points.size(); ++a) {
    for (std::size_t b = a + 1; b < gq.points.size(); ++b) {
      if (symplectic_form(f, gq.points[a], gq.points[b]) != 0) continue;
      std::vector<Point> line{static_cast<Point>(a)};
      for (Field::Element lambda = 0; lambda < q; ++lambda) {
        std::vector<Field::Element> v(4);
        for (std::size_t i = 0; i < 4; ++i) v[i] = f.add(gq.points[b][i], f.mul(lambda, gq.points[a][i]));
        line.push_back(static_cast<Point>(index_of_code[encode(f, normalize(f, v))]));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  gq.lines.assign(lines.begin(), lines.end());
  gq.lines_on_point.resize(gq.points.size());
  for (std::size_t l = 0; l < gq.lines.size(); ++l) {
    for (Point p : gq.lines[l]) gq.lines_on_point[p].push_back(static_cast<std::uint32_t>(l));
  }
  return gq;
}

}  // namespace plinth
