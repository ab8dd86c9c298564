#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "plinth/actions.hpp"
#include "plinth/autgq.hpp"
#include "plinth/cartesian.hpp"
#include "plinth/orbital.hpp"
#include "plinth/tools/cases.hpp"

namespace plinth::tools::detail {

template <typename Range>
std::string braced(const Range& values) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string spectrum_string(const OrderSpectrum& s);

SearchOptions search_options(const CaseOptions& options, std::uint64_t salt = 0);

struct SuborbitVerdict {
  std::size_t index = 0;
  Point representative = 0;
  std::size_t length = 0;
  bool self_paired = false;
  bool connected = false;        // self-paired only
  bool two_transitive = false;   // stabilizer on the suborbit
};

// Connectivity of each self-paired orbital graph is decided as
// |base^<G_α, t>| = n for a transporter t; 2-transitivity needs k(k-1) to
// divide |G_α| before the stabilizer chain is consulted.
std::vector<SuborbitVerdict> scan_suborbits(const OrbitalData& data);

std::vector<std::size_t> sorted_lengths(const OrbitalData& data);

// Grid search, classification and the s bound, recorded as checks.
void grid_and_classify(Report& report, const PermGroup& g, const SubgroupRef& socle, InclusionTag expected,
                       const std::vector<Order>& expected_projections, std::size_t expected_blocks);

struct A6Setup {
  PermGroup full;      // PΓL(2,9) on 36 points
  SubgroupRef socle;   // A6
  SubgroupClassAction action;
};
A6Setup build_a6(const CaseOptions& options);

struct Sp44Setup {
  AutomorphismSearch aut;  // on the 170-vertex incidence graph
  SubgroupClassAction action;
  SubgroupRef socle;       // Sp(4,4) in the 14,400-point action
};
Sp44Setup build_sp44(const CaseOptions& options);

// Point stabilizer of the socle against the tabulated dihedral envelope.
void envelope_checks(Report& report, const SubgroupRef& socle, Order stabilizer, Order dihedral,
                     const CaseOptions& options);

Report case_sylvester(const CaseOptions& options);
Report case_sp44(const CaseOptions& options);
Report case_m12(const CaseOptions& options);
Report case_o8plus2(const CaseOptions& options);
Report case_factorizations(const CaseOptions& options);
Report case_products(const CaseOptions& options);
Report case_classify_a6(const CaseOptions& options);
Report case_classify_sp44(const CaseOptions& options);

}  // namespace plinth::tools::detail
