#include "betti/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

BettiTable::BettiTable(Eigen::Index strands, Eigen::Index hom_degrees)
    : m_(strands, hom_degrees) {
  if (strands < 1 || hom_degrees < 1) throw std::invalid_argument("empty Betti table");
  m_.setZero();
}

BettiTable BettiTable::sized_for(const MonomialIdeal& ideal) {
  const std::int64_t p = std::min(ideal.n_vars(), ideal.n_generators());
  const std::int64_t maxdeg = std::max<std::int64_t>(ideal.max_generator_degree(), 1);
  return BettiTable(p * (maxdeg - 1) + 1, p + 1);
}

std::int64_t BettiTable::beta(int i, std::int64_t deg) const {
  const std::int64_t j = deg - i;
  if (i < 0 || i >= m_.cols() || j < 0 || j >= m_.rows()) return 0;
  return m_(j, i);
}

void BettiTable::add(int i, std::int64_t deg, std::int64_t count) {
  const std::int64_t j = deg - i;
  if (i < 0 || i >= m_.cols() || j < 0 || j >= m_.rows())
    throw std::logic_error("Betti table write out of theoretical bounds");
  m_(j, i) += count;
}

int BettiTable::projdim() const {
  for (Eigen::Index i = m_.cols() - 1; i >= 0; --i)
    if ((m_.col(i).array() != 0).any()) return static_cast<int>(i);
  return 0;
}

std::int64_t BettiTable::regularity() const {
  for (Eigen::Index j = m_.rows() - 1; j >= 0; --j)
    if ((m_.row(j).array() != 0).any()) return j;
  return 0;
}

std::int64_t BettiTable::total(int i) const {
  if (i < 0 || i >= m_.cols()) return 0;
  return m_.col(i).sum();
}

bool operator==(const BettiTable& a, const BettiTable& b) {
  const Eigen::Index rows = std::max(a.m_.rows(), b.m_.rows());
  const Eigen::Index cols = std::max(a.m_.cols(), b.m_.cols());
  for (Eigen::Index j = 0; j < rows; ++j)
    for (Eigen::Index i = 0; i < cols; ++i) {
      const std::int64_t av = (j < a.m_.rows() && i < a.m_.cols()) ? a.m_(j, i) : 0;
      const std::int64_t bv = (j < b.m_.rows() && i < b.m_.cols()) ? b.m_(j, i) : 0;
      if (av != bv) return false;
    }
  return true;
}

std::vector<std::int32_t> to_key(const Exponents& e) {
  return std::vector<std::int32_t>(e.data(), e.data() + e.size());
}

Exponents from_key(const std::vector<std::int32_t>& v) {
  Exponents e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[static_cast<Eigen::Index>(i)] = v[i];
  return e;
}

void MultigradedBetti::add(int i, const Exponents& deg, std::int64_t count) {
  if (count == 0) return;
  counts_[{i, to_key(deg)}] += count;
}

std::int64_t MultigradedBetti::count(int i, const Exponents& deg) const {
  auto it = counts_.find({i, to_key(deg)});
  return it == counts_.end() ? 0 : it->second;
}

BettiTable MultigradedBetti::to_graded(const MonomialIdeal& ideal) const {
  BettiTable t = BettiTable::sized_for(ideal);
  for (const auto& [key, c] : counts_) {
    std::int64_t deg = 0;
    for (std::int32_t e : key.second) deg += e;
    t.add(key.first, deg, c);
  }
  return t;
}

}  // namespace betti
