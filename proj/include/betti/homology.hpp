#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "betti/morse.hpp"

namespace betti {

// Simplicial complex on [n] described by its minimal nonfaces (an antichain
// of nonempty vertex sets). Empty nonface list = the full simplex.
struct NonfaceComplex {
  int n = 0;
  std::vector<Face> nonfaces;
};

// Validates vertex ranges and the antichain property; rejects empty nonfaces.
NonfaceComplex make_nonface_complex(int n, std::vector<Face> nonfaces);

// x^{G_1},...,x^{G_r} in n variables.
MonomialIdeal stanley_reisner_ideal(const NonfaceComplex& complex);

// Clique complex of a graph: minimal nonfaces are the nonadjacent pairs.
NonfaceComplex clique_nonfaces(int n, const std::vector<std::pair<int, int>>& edges);

// All faces (subsets containing no nonface); n <= 20, oracle-scale only.
std::vector<Face> expand_face_list(const NonfaceComplex& complex);
// Same, restricted to subsets of w.
std::vector<Face> expand_restricted(const NonfaceComplex& complex, const Face& w);

// Covering candidates at one level: size-many nonface indices whose vertex
// sets union to [n], lex order, labels all x_1...x_n.
std::vector<std::pair<Face, Monomial>> covering_candidates(const MonomialIdeal& ideal, int size);

// dims[d+1] = dim H~_d(complex; k) for d = -1..n-1, via the deformation
// restricted to covering faces. Layer h of the reduced complex contributes to
// H~_{n-h-1}. The usual empty-layer early stops do not apply here: a covering
// slice can be empty at one level and inhabited two levels up.
template <class Field>
std::vector<std::int64_t> homology_dims(const NonfaceComplex& complex, const Field& k,
                                        StartComplex start = StartComplex::lyubeznik) {
  const int n = complex.n;
  if (n > 62) throw std::invalid_argument("homology_dims: too many vertices");
  std::vector<std::int64_t> dims(n + 1, 0);
  if (complex.nonfaces.empty()) {
    if (n == 0) dims[0] = 1;  // the complex {∅}
    return dims;              // otherwise a simplex: contractible
  }
  MonomialIdeal ideal = stanley_reisner_ideal(complex);
  const int r = ideal.n_generators();

  auto record = [&](const auto& faces, int level) {
    for ([[maybe_unused]] const auto& entry : faces) {
      engine_check(level <= n, "covering face above level n survived");
      dims[n - level] += 1;
    }
  };

  LayeredGraph<Field> g;
  for (auto& p : covering_candidates(ideal, 0)) g.current.push_back(std::move(p));
  for (auto& p : covering_candidates(ideal, 1)) g.lower.emplace(std::move(p.first), std::move(p.second));
  for (;;) {
    if (g.level == r - 1) {
      record(g.current, g.level);
      record(g.lower, g.level + 1);
      break;
    }
    if (g.level == n) {
      record(g.current, g.level);
      break;
    }
    record(g.current, g.level);
    auto cand = covering_candidates(ideal, g.level + 2);
    deform(g, ideal, k, start, &cand);
  }
  return dims;
}

}  // namespace betti
