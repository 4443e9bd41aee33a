#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "betti/face.hpp"
#include "betti/field.hpp"
#include "betti/table.hpp"

namespace betti {

inline void engine_check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("engine invariant violated: ") + what);
}

enum class StepDecision { stop_add_both, stop_add_current, stop_add_nothing, continue_add_current };

// Branches in the driver's order: finish at the generator count, at the
// variable count, or when a layer empties.
inline StepDecision step_decision(int i, int r, int n, std::size_t current_size,
                                  std::size_t next_size) {
  if (i == r - 1) return StepDecision::stop_add_both;
  if (i == n) return StepDecision::stop_add_current;
  if (current_size == 0) return StepDecision::stop_add_nothing;
  if (next_size == 0) return StepDecision::stop_add_current;
  return StepDecision::continue_add_current;
}

struct DeformStats {
  std::size_t candidates = 0;  // admissible level-(i+2) faces visited
  std::size_t cancelled = 0;   // (sigma, tau) pairs removed
};

// State between passes: current = Delta_i (finalized), lower = Delta_{i+1}
// (still mutable), vlist = the candidate seed at level i+1. Edge weights
// (rows: level-(i+2) face -> its weighted lower neighbours) live only inside
// a pass; both maps are empty here.
template <class Field>
struct LayeredGraph {
  using Element = typename Field::Element;
  using Row = std::unordered_map<Face, Element, FaceHash>;

  int level = 0;
  std::vector<std::pair<Face, Monomial>> current;
  std::unordered_map<Face, Monomial, FaceHash> lower;
  std::vector<std::pair<Face, Monomial>> vlist;
  std::unordered_map<Face, Row, FaceHash> rows;
  std::unordered_map<Face, std::unordered_set<Face, FaceHash>, FaceHash> cols;
};

template <class Field>
LayeredGraph<Field> init_graph(const MonomialIdeal& ideal, StartComplex start, const Field&) {
  if (ideal.n_generators() == 0) throw std::invalid_argument("init_graph: no generators");
  LayeredGraph<Field> g;
  g.current.emplace_back(Face(), Monomial::unit(ideal.n_vars()));
  for (auto& f : enumerate_admissible_faces(1, ideal, start)) {
    Monomial label = face_label(f, ideal);
    g.lower.emplace(f, label);
    g.vlist.emplace_back(std::move(f), std::move(label));
  }
  return g;
}

// One pass: visit level-(i+2) candidates in lex order; each candidate either
// joins the new layer or cancels against its lex-least equal-label partner
// tau in Delta_{i+1}, propagating weight corrections to all (alpha, beta)
// pairs around the cancelled edge. On return the graph sits one level deeper
// and the edge maps are empty again (every weight provably cancels).
template <class Field>
DeformStats deform(LayeredGraph<Field>& g, const MonomialIdeal& ideal, const Field& k,
                   StartComplex start,
                   const std::vector<std::pair<Face, Monomial>>* custom_candidates = nullptr) {
  using Element = typename Field::Element;
  const int r = ideal.n_generators();
  DeformStats stats;

  std::vector<std::pair<Face, Monomial>> cand;
  if (custom_candidates) {
    cand = *custom_candidates;
  } else {
    // extending each seed past its max enumerates every subset that could
    // pass the filter exactly once, in lex order
    for (const auto& [tau, mtau] : g.vlist) {
      const int lo = tau.empty() ? 0 : tau.max() + 1;
      for (int v = lo; v < r; ++v)
        cand.emplace_back(tau.with(v), lcm(mtau, ideal.generator(v)));
    }
  }
  engine_check(std::is_sorted(cand.begin(), cand.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; }),
               "candidate list not lex-sorted");

  std::unordered_map<Face, Monomial, FaceHash> upper;
  std::vector<std::pair<Face, Monomial>> vnext;

  for (const auto& [sigma, msigma] : cand) {
    if (!face_admissible(sigma, ideal, start)) continue;
    vnext.emplace_back(sigma, msigma);
    ++stats.candidates;

    // partners of sigma in Delta_{i+1}: stored nonzero edges plus implicit
    // equal-label boundary edges not yet materialized
    std::vector<std::pair<Face, Element>> partners;
    {
      auto row_it = g.rows.find(sigma);
      if (row_it != g.rows.end())
        for (const auto& [beta, w] : row_it->second)
          if (!Field::is_zero(w)) partners.emplace_back(beta, w);
      for (int v : sigma.members()) {
        Face beta = sigma.without(v);
        auto lit = g.lower.find(beta);
        if (lit == g.lower.end() || lit->second != msigma) continue;
        if (row_it != g.rows.end() && row_it->second.count(beta)) continue;
        partners.emplace_back(std::move(beta), k.from_int(sign_in(v, sigma)));
      }
    }
    if (partners.empty()) {
      upper.emplace(sigma, msigma);
      continue;
    }

    std::size_t pi = 0;
    for (std::size_t t = 1; t < partners.size(); ++t)
      if (partners[t].first < partners[pi].first) pi = t;
    const Face tau = partners[pi].first;
    const Element pivot = partners[pi].second;
    engine_check(!Field::is_zero(pivot), "zero pivot weight");
    engine_check(g.lower.at(tau) == msigma, "pivot label mismatch");

    // level-(i+2) faces hanging off tau: fresh cofaces alpha = tau + {v}
    // beyond sigma plus already-stored nonzero edges into tau
    std::vector<std::pair<Face, Element>> col;
    {
      std::unordered_set<Face, FaceHash> seen;
      auto cit = g.cols.find(tau);
      if (cit != g.cols.end()) {
        for (const Face& alpha : cit->second) {
          if (!(sigma < alpha)) continue;
          const Element& w = g.rows.at(alpha).at(tau);
          bool fresh_coface = false;
          int v = -1, extra = 0;
          for (int x : alpha.members())
            if (!tau.contains(x)) {
              v = x;
              ++extra;
            }
          if (extra == 1)
            fresh_coface = divides(ideal.generator(v), msigma) &&
                           face_admissible(alpha, ideal, start);
          if (fresh_coface || !Field::is_zero(w)) {
            col.emplace_back(alpha, w);
            seen.insert(alpha);
          }
          if (fresh_coface) {
            engine_check(upper.count(alpha) == 1, "stored coface missing from new layer");
          }
        }
      }
      for (int v = 0; v < r; ++v) {
        if (tau.contains(v)) continue;
        Face alpha = tau.with(v);
        if (!(sigma < alpha) || seen.count(alpha)) continue;
        if (!divides(ideal.generator(v), msigma)) continue;
        if (!face_admissible(alpha, ideal, start)) continue;
        Element w = k.from_int(sign_in(v, alpha));
        upper.emplace(alpha, msigma);
        col.emplace_back(std::move(alpha), std::move(w));
      }
    }

    for (std::size_t b = 0; b < partners.size(); ++b) {
      if (b == pi) continue;
      const Face& beta = partners[b].first;
      const Element q = partners[b].second / pivot;
      for (const auto& [alpha, walpha] : col) {
        Element upd = walpha * q;
        auto& row = g.rows[alpha];
        auto eit = row.find(beta);
        if (eit != row.end()) {
          eit->second -= upd;
        } else {
          Element base = k.zero();
          int v = -1, extra = 0;
          for (int x : alpha.members())
            if (!beta.contains(x)) {
              v = x;
              ++extra;
            }
          if (extra == 1) base = k.from_int(sign_in(v, alpha));
          row.emplace(beta, base - upd);
          g.cols[beta].insert(alpha);
        }
      }
    }

    upper.erase(sigma);
    g.lower.erase(tau);
    ++stats.cancelled;
    // drop sigma's row and tau's column (maps may have rehashed; re-find)
    auto row_it = g.rows.find(sigma);
    if (row_it != g.rows.end()) {
      for (const auto& [beta, w] : row_it->second) {
        auto c2 = g.cols.find(beta);
        if (c2 != g.cols.end()) {
          c2->second.erase(sigma);
          if (c2->second.empty()) g.cols.erase(c2);
        }
      }
      g.rows.erase(row_it);
    }
    auto cit = g.cols.find(tau);
    if (cit != g.cols.end()) {
      for (const Face& alpha : cit->second) {
        auto r2 = g.rows.find(alpha);
        if (r2 != g.rows.end()) {
          r2->second.erase(tau);
          if (r2->second.empty()) g.rows.erase(r2);
        }
      }
      g.cols.erase(cit);
    }
  }

  for (const auto& [alpha, row] : g.rows)
    for (const auto& [beta, w] : row)
      engine_check(Field::is_zero(w), "stored edge survives a deformation pass");
  g.rows.clear();
  g.cols.clear();

  g.current.assign(g.lower.begin(), g.lower.end());
  std::sort(g.current.begin(), g.current.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  g.lower = std::move(upper);
  // the next candidate seed keeps every admissible face, cancelled or not:
  // cancellation removes faces from the layer, never from the V sets
  g.vlist = std::move(vnext);
  g.level += 1;
  return stats;
}

// Strand profile of one finalized layer: entry (deg - level, level).
inline CountMatrix strand_counts(const std::vector<std::pair<Face, Monomial>>& faces, int level,
                                 Eigen::Index strands, Eigen::Index hom_degrees) {
  CountMatrix m = CountMatrix::Zero(strands, hom_degrees);
  for (const auto& [f, mon] : faces) {
    const std::int64_t j = mon.degree() - level;
    if (level < 0 || level >= hom_degrees || j < 0 || j >= strands)
      throw std::logic_error("strand count outside the theoretical table bounds");
    ++m(j, level);
  }
  return m;
}

template <class Field>
BettiTable compute_betti_table(const MonomialIdeal& ideal, const Field& k,
                               StartComplex start = StartComplex::lyubeznik,
                               MultigradedBetti* multigraded = nullptr) {
  const int r = ideal.n_generators();
  const int n = ideal.n_vars();
  BettiTable table = BettiTable::sized_for(ideal);
  if (multigraded) *multigraded = MultigradedBetti();
  auto record = [&](const std::vector<std::pair<Face, Monomial>>& faces, int level) {
    table.raw() += strand_counts(faces, level, table.strand_rows(), table.degree_cols());
    if (multigraded)
      for (const auto& [f, m] : faces) multigraded->add(level, m.exponents());
  };
  if (r == 0) {
    table.add(0, 0, 1);
    if (multigraded) multigraded->add(0, Exponents::Zero(n));
    return table;
  }
  LayeredGraph<Field> g = init_graph(ideal, start, k);
  for (;;) {
    switch (step_decision(g.level, r, n, g.current.size(), g.lower.size())) {
      case StepDecision::stop_add_both: {
        record(g.current, g.level);
        std::vector<std::pair<Face, Monomial>> last(g.lower.begin(), g.lower.end());
        record(last, g.level + 1);
        return table;
      }
      case StepDecision::stop_add_current:
        record(g.current, g.level);
        return table;
      case StepDecision::stop_add_nothing:
        return table;
      case StepDecision::continue_add_current:
        record(g.current, g.level);
        deform(g, ideal, k, start);
        break;
    }
  }
}

template <class Field>
MultigradedBetti compute_multigraded(const MonomialIdeal& ideal, const Field& k,
                                     StartComplex start = StartComplex::lyubeznik) {
  MultigradedBetti mg;
  compute_betti_table(ideal, k, start, &mg);
  return mg;
}

}  // namespace betti
