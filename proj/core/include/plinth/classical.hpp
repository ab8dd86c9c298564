#pragma once

#include <string_view>
#include <vector>

#include "plinth/field.hpp"
#include "plinth/perm_group.hpp"

namespace plinth {

enum class Psl2Flavor { kPSL, kPGL, kPSigmaL, kM10, kPGammaL };

std::string_view to_string(Psl2Flavor flavor);

// x -> (a x^(p^s) + b) / (c x^(p^s) + d) on the projective line, where
// point i < q is the field element i and point q is infinity.
Permutation semilinear_mobius(const Field& f, Field::Element a, Field::Element b, Field::Element c,
                              Field::Element d, std::uint32_t frobenius_power = 0);

// Projective (semi)linear group on q+1 points. The order is checked against
// the closed form. Throws UnsupportedFlavor for PSigmaL/PGammaL over a prime
// field and for M10 unless q = 9.
PermGroup psl2_action(std::uint32_t q, Psl2Flavor flavor);

// For a group on 10 points with PSL(2,9) <= G <= PGammaL(2,9), by order and
// element-order spectrum. Throws Unrecognized otherwise.
Psl2Flavor identify_extension_flavor(const PermGroup& g);

// Standard alternating form B(x,y) = x0 y3 - x3 y0 + x1 y2 - x2 y1.
Field::Element symplectic_form(const Field& f, const std::vector<Field::Element>& x,
                               const std::vector<Field::Element>& y);
Matrix symplectic_gram(const Field& f);

struct Sp4Group {
  Field field;
  std::vector<Matrix> matrices;                      // transvection generators
  std::vector<std::vector<Field::Element>> points;   // first nonzero coordinate 1
  PermGroup group;                                   // action on `points`
  std::vector<std::int32_t> index_of_code;           // normalized vector code -> point index
};

// Sp(4,q) from transvections x -> x + a B(x,v) v, acting on the
// (q^4-1)/(q-1) projective points. Transvections are added until the
// permutation group reaches q^4 (q^2-1)(q^4-1).
Sp4Group sp4(std::uint32_t q);

Point projective_point_index(const Sp4Group& g, const std::vector<Field::Element>& v);

// Points and totally isotropic lines of W(q); lines hold sorted point indices.
struct GQGeometry {
  std::uint32_t q = 0;
  std::vector<std::vector<Field::Element>> points;
  std::vector<std::vector<Point>> lines;
  std::vector<std::vector<std::uint32_t>> lines_on_point;
};

GQGeometry symplectic_gq(std::uint32_t q);

}  // namespace plinth
