#pragma once

#include <string>
#include <vector>

#include "plinth/group_algorithms.hpp"

namespace plinth {

// One line `q | A-label | A-order | B-label | B-order | meet-order | anchor`.
// Labels: P1 (point stabilizer on the projective line), A4, S4, A5, and Dn
// for the dihedral group of order n.
struct FactorizationRow {
  std::uint32_t q = 0;
  std::string a_label;
  Order a_order = 0;
  std::string b_label;
  Order b_order = 0;
  Order meet_order = 0;
  std::string anchor;
  std::size_t line = 0;
};

// Throws ParseError with the offending line number. `#` starts a comment.
std::vector<FactorizationRow> parse_factorization_table(const std::string& text);
std::vector<FactorizationRow> load_factorization_table(const std::string& path);  // IoError, ParseError

struct FactorizationRecord {
  FactorizationRow row;
  Order t_order = 0;
  Order a_order = 0;  // as constructed
  Order b_order = 0;
  Order meet_order = 0;
  bool verified = false;  // |A||B| = |T||A∩B| and every order matches the row
};

// Builds A and B inside PSL(2,q) on q+1 points; B is searched among random
// subgroups of its isomorphism type until AB = T. Throws ConstructionFailed
// when the search budget runs out and Mismatch when the row's orders are
// contradicted.
FactorizationRecord verify_psl2_factorization_row(const FactorizationRow& row, const SearchOptions& options = {});

// Element-order spectrum of the labelled group, used as a search profile.
OrderSpectrum label_spectrum(const std::string& label);

// One line `family | condition | label | order | anchor`. Condition is `any`
// or a comma list of `prime` and `pm1modN` (q ≡ ±1 mod N). Order `P1` means
// the parabolic order q(q-1)/gcd(2,q-1).
struct ProjectionRow {
  std::string family;
  std::string condition;
  std::string label;
  std::string order;
  std::string anchor;
  std::size_t line = 0;
};

std::vector<ProjectionRow> parse_projection_table(const std::string& text);
std::vector<ProjectionRow> load_projection_table(const std::string& path);

bool projection_condition_holds(const std::string& condition, std::uint32_t q);
Order projection_order(const ProjectionRow& row, std::uint32_t q);

// A projection row and a factorization row at the same q whose meet order is
// divisible by the projection order, i.e. the tables do not rule it out.
struct TableConflict {
  std::string family;
  std::uint32_t q = 0;
  Order projection_order = 0;
  std::string a_label;
  std::string b_label;
  Order meet_order = 0;
};

std::vector<TableConflict> cross_check_tables(const std::vector<ProjectionRow>& projections,
                                              const std::vector<FactorizationRow>& factorizations);

}  // namespace plinth
