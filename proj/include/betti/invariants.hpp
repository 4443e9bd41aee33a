#pragma once

#include <string>
#include <vector>

#include "betti/face.hpp"
#include "betti/table.hpp"

namespace betti {

// sigma is critical when dropping any member or adding any non-member
// strictly changes its label. Critical faces force nonzero Betti entries.
bool is_critical(const Face& f, const MonomialIdeal& ideal);

struct CriticalReport {
  std::vector<Face> critical;
  std::int64_t p = 0;  // max cardinality of a critical face
  std::int64_t r = 0;  // max (deg label - cardinality)
};

// Exhaustive subset scan; exponential, verification-only.
CriticalReport pr_invariants(const MonomialIdeal& ideal, int max_generators = 20);

struct BoundsCheck {
  bool ok = false;
  int projdim = 0;
  std::int64_t reg = 0;
  std::int64_t p = 0;
  std::int64_t r = 0;
};

// projdim >= p and reg >= r must hold on a correct table.
BoundsCheck check_bounds(const BettiTable& table, const CriticalReport& report);

// Vanishing propagation. Graded form: a window of d consecutive zero degrees
// at level i forces a zero one level up, d = max generator degree.
// Multigraded form: the same per generator multidegree. Returns human-readable
// violation descriptions; empty on every correct table.
std::vector<std::string> verify_vanishing(const BettiTable& table, const MonomialIdeal& ideal);
std::vector<std::string> verify_vanishing(const MultigradedBetti& mg, const MonomialIdeal& ideal);

// Weaker tail form: the top nonzero degree may climb by at most d per level.
std::vector<std::string> check_degree_tail(const BettiTable& table, std::int64_t d);

}  // namespace betti
