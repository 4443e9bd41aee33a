#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "betti/ideal.hpp"

namespace betti {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Graded Betti numbers of S/I. Storage: rows are strands j = deg - i
// (0..b-1), columns are homological degrees i (0..a-1), entry (j,i) =
// beta_{i,i+j}. Sized up front from a(I) = min(n,r)+1, b(I) =
// min(n,r)*(maxdeg-1)+1; writes outside those bounds throw (they would mean
// the engine broke a theorem).
class BettiTable {
 public:
  BettiTable() : m_(1, 1) { m_.setZero(); }
  BettiTable(Eigen::Index strands, Eigen::Index hom_degrees);
  static BettiTable sized_for(const MonomialIdeal& ideal);

  std::int64_t beta(int i, std::int64_t deg) const;  // 0 outside storage
  void add(int i, std::int64_t deg, std::int64_t count);

  // -1 / table of the zero module never happens here: (0,0) is always 1 for S/I.
  int projdim() const;
  std::int64_t regularity() const;
  std::int64_t total(int i) const;

  Eigen::Index strand_rows() const { return m_.rows(); }
  Eigen::Index degree_cols() const { return m_.cols(); }
  CountMatrix& raw() { return m_; }
  const CountMatrix& raw() const { return m_; }

  // Equal as tables: same entries everywhere, padding ignored.
  friend bool operator==(const BettiTable& a, const BettiTable& b);
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

 private:
  CountMatrix m_;
};

// Multigraded Betti numbers: (i, multidegree) -> count. Ordered map so
// iteration (and hence rendering) is deterministic.
class MultigradedBetti {
 public:
  using Key = std::pair<int, std::vector<std::int32_t>>;

  void add(int i, const Exponents& deg, std::int64_t count = 1);
  std::int64_t count(int i, const Exponents& deg) const;
  const std::map<Key, std::int64_t>& entries() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  // Collapse multidegrees to total degree. Must reproduce the graded table.
  BettiTable to_graded(const MonomialIdeal& ideal) const;

  friend bool operator==(const MultigradedBetti& a, const MultigradedBetti& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::map<Key, std::int64_t> counts_;
};

std::vector<std::int32_t> to_key(const Exponents& e);
Exponents from_key(const std::vector<std::int32_t>& v);

}  // namespace betti
