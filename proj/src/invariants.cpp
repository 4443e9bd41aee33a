#include "betti/invariants.hpp"

#include <stdexcept>

namespace betti {

bool is_critical(const Face& f, const MonomialIdeal& ideal) {
  const Monomial label = face_label(f, ideal);
  for (int v : f.members())
    if (face_label(f.without(v), ideal) == label) return false;
  for (int v = 0; v < ideal.n_generators(); ++v) {
    if (f.contains(v)) continue;
    if (lcm(label, ideal.generator(v)) == label) return false;
  }
  return true;
}

CriticalReport pr_invariants(const MonomialIdeal& ideal, int max_generators) {
  const int r = ideal.n_generators();
  if (r > max_generators) throw std::invalid_argument("pr_invariants: generator cap exceeded");
  CriticalReport rep;
  for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
    std::vector<int> mem;
    for (int v = 0; v < r; ++v)
      if (mask & (1ull << v)) mem.push_back(v);
    Face f(std::move(mem));
    if (!is_critical(f, ideal)) continue;
    rep.p = std::max<std::int64_t>(rep.p, f.size());
    rep.r = std::max<std::int64_t>(rep.r, face_label(f, ideal).degree() - f.size());
    rep.critical.push_back(std::move(f));
  }
  return rep;
}

BoundsCheck check_bounds(const BettiTable& table, const CriticalReport& report) {
  BoundsCheck b;
  b.projdim = table.projdim();
  b.reg = table.regularity();
  b.p = report.p;
  b.r = report.r;
  b.ok = b.projdim >= b.p && b.reg >= b.r;
  return b;
}

std::vector<std::string> verify_vanishing(const BettiTable& table, const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  const std::int64_t d = std::max<std::int64_t>(ideal.max_generator_degree(), 1);
  // contrapositive: every nonzero beta_{i+1,m} needs a nonzero beta_{i,k}
  // within the window m-d <= k <= m-1
  for (Eigen::Index i1 = 1; i1 < table.degree_cols(); ++i1)
    for (Eigen::Index j = 0; j < table.strand_rows(); ++j) {
      if (table.raw()(j, i1) == 0) continue;
      const std::int64_t m = j + i1;
      bool witness = false;
      for (std::int64_t kdeg = m - d; kdeg < m && !witness; ++kdeg)
        witness = table.beta(static_cast<int>(i1 - 1), kdeg) != 0;
      if (!witness)
        out.push_back("graded vanishing violated at i=" + std::to_string(i1) +
                      ", deg=" + std::to_string(m));
    }
  return out;
}

std::vector<std::string> verify_vanishing(const MultigradedBetti& mg, const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  const int n = ideal.n_vars();
  for (const auto& [key, count] : mg.entries()) {
    const auto& [i1, c] = key;
    if (i1 < 1 || count == 0) continue;
    // one theorem instance per generator dividing x^c: window a <= b < c with
    // a = c - deg u_l (for u_l not dividing x^c the window leaves N^n and the
    // covering argument behind the theorem does not apply)
    for (int l = 0; l < ideal.n_generators(); ++l) {
      const auto& al = ideal.generator(l).exponents();
      bool applicable = true;
      for (int t = 0; t < n && applicable; ++t) applicable = al[t] <= c[t];
      if (!applicable) continue;
      bool witness = false;
      for (const auto& [key2, count2] : mg.entries()) {
        if (key2.first != i1 - 1 || count2 == 0) continue;
        const auto& b = key2.second;
        bool in_window = true;
        bool strictly_below = false;
        for (int t = 0; t < n && in_window; ++t) {
          if (b[t] > c[t] || b[t] < c[t] - al[t]) in_window = false;
          if (b[t] < c[t]) strictly_below = true;
        }
        if (in_window && strictly_below) {
          witness = true;
          break;
        }
      }
      if (!witness) {
        std::string deg = "(";
        for (int t = 0; t < n; ++t) deg += (t ? "," : "") + std::to_string(c[t]);
        deg += ")";
        out.push_back("multigraded vanishing violated at i=" + std::to_string(i1) + ", deg=" +
                      deg + ", generator " + std::to_string(l + 1));
      }
    }
  }
  return out;
}

std::vector<std::string> check_degree_tail(const BettiTable& table, std::int64_t d) {
  std::vector<std::string> out;
  auto top_degree = [&](Eigen::Index i) -> std::int64_t {
    std::int64_t top = -1;
    for (Eigen::Index j = 0; j < table.strand_rows(); ++j)
      if (table.raw()(j, i) != 0) top = j + i;
    return top;
  };
  for (Eigen::Index i = 0; i + 1 < table.degree_cols(); ++i) {
    const std::int64_t above = top_degree(i + 1);
    if (above < 0) continue;
    const std::int64_t here = top_degree(i);
    if (here < 0 || above > here + d)
      out.push_back("degree tail grows by more than d at i=" + std::to_string(i + 1));
  }
  return out;
}

}  // namespace betti
