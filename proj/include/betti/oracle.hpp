#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "betti/face.hpp"
#include "betti/field.hpp"
#include "betti/table.hpp"

namespace betti {

template <class Field>
using FieldMatrix = Eigen::Matrix<typename Field::Element, Eigen::Dynamic, Eigen::Dynamic>;

// Row-reduce and count pivots. Destroys its argument.
template <class Field>
int exact_rank(FieldMatrix<Field> m, const Field&) {
  int rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (!Field::is_zero(m(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const Eigen::Index len = m.cols() - c;
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (Field::is_zero(m(r, c))) continue;
      typename Field::Element f = m(r, c) / m(rank, c);
      m.row(r).tail(len) -= m.row(rank).tail(len) * f;
    }
    ++rank;
  }
  return rank;
}

// Boundary of `upper` into the span of lower_index's faces: entry is the
// simplicial sign when the codim-1 subface is present, 0 otherwise.
template <class Field>
FieldMatrix<Field> boundary_matrix(const std::vector<Face>& upper,
                                   const std::unordered_map<Face, int, FaceHash>& lower_index,
                                   const Field& k) {
  FieldMatrix<Field> m(static_cast<Eigen::Index>(lower_index.size()),
                       static_cast<Eigen::Index>(upper.size()));
  m.setConstant(k.zero());
  for (std::size_t c = 0; c < upper.size(); ++c)
    for (int v : upper[c].members()) {
      auto it = lower_index.find(upper[c].without(v));
      if (it != lower_index.end())
        m(it->second, static_cast<Eigen::Index>(c)) = k.from_int(sign_in(v, upper[c]));
    }
  return m;
}

// dims[s] = dim H_s of the complex whose degree-s basis is bases[s], with the
// boundary implied by face inclusion (missing subfaces contribute 0).
template <class Field>
std::vector<std::int64_t> chain_homology(const std::vector<std::vector<Face>>& bases,
                                         const Field& k) {
  const int top = static_cast<int>(bases.size());
  std::vector<int> ranks(top + 1, 0);
  for (int s = 1; s < top; ++s) {
    if (bases[s].empty() || bases[s - 1].empty()) continue;
    std::unordered_map<Face, int, FaceHash> lower;
    for (std::size_t i = 0; i < bases[s - 1].size(); ++i)
      lower.emplace(bases[s - 1][i], static_cast<int>(i));
    ranks[s] = exact_rank<Field>(boundary_matrix(bases[s], lower, k), k);
  }
  std::vector<std::int64_t> dims(top, 0);
  for (int s = 0; s < top; ++s)
    dims[s] = static_cast<std::int64_t>(bases[s].size()) - ranks[s] - ranks[s + 1];
  return dims;
}

constexpr int kOracleMaxGenerators = 12;

// dim Tor_i(S/I, k)_a for all i at once: homology of the Taylor complex
// tensored with k, where only faces labeled exactly x^a survive and only
// unit (equal-label) boundary coefficients remain.
template <class Field>
std::vector<std::int64_t> oracle_multigraded_betti(const MonomialIdeal& ideal,
                                                   const Exponents& a, const Field& k) {
  const int r = ideal.n_generators();
  if (r > kOracleMaxGenerators) throw std::invalid_argument("oracle: too many generators");
  if (a.size() != ideal.n_vars()) throw std::invalid_argument("oracle: bad multidegree length");
  const Monomial target{Exponents(a)};
  std::vector<std::vector<Face>> bases(r + 1);
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> mem;
    for (int v = 0; v < r; ++v)
      if (mask & (1u << v)) mem.push_back(v);
    Face f(std::move(mem));
    if (face_label(f, ideal) == target) bases[f.size()].push_back(std::move(f));
  }
  return chain_homology(bases, k);
}

// All multigraded Betti numbers, stratum by Taylor label (any multidegree that
// is not a Taylor label has zero Betti numbers in every homological degree).
template <class Field>
MultigradedBetti oracle_multigraded(const MonomialIdeal& ideal, const Field& k) {
  const int r = ideal.n_generators();
  if (r > kOracleMaxGenerators) throw std::invalid_argument("oracle: too many generators");
  std::map<std::vector<std::int32_t>, std::vector<std::vector<Face>>> strata;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> mem;
    for (int v = 0; v < r; ++v)
      if (mask & (1u << v)) mem.push_back(v);
    Face f(std::move(mem));
    Monomial label = face_label(f, ideal);
    auto& bases = strata[to_key(label.exponents())];
    if (bases.empty()) bases.resize(r + 1);
    bases[f.size()].push_back(std::move(f));
  }
  MultigradedBetti mg;
  for (const auto& [key, bases] : strata) {
    auto dims = chain_homology(bases, k);
    const Exponents deg = from_key(key);
    for (int s = 0; s <= r; ++s)
      if (dims[s] != 0) mg.add(s, deg, dims[s]);
  }
  return mg;
}

template <class Field>
BettiTable oracle_betti_table(const MonomialIdeal& ideal, const Field& k) {
  if (ideal.n_generators() == 0) {
    BettiTable t(1, 1);
    t.add(0, 0, 1);
    return t;
  }
  return oracle_multigraded(ideal, k).to_graded(ideal);
}

// Reduced (co)homology dims of a simplicial complex given by its full face
// list; index d+1 holds dim H~_d for d = -1..n_vertices-1. The empty list is
// the void complex (all zeros); {∅} alone gives H~_{-1} = 1.
template <class Field>
std::vector<std::int64_t> reduced_cohomology(const std::vector<Face>& faces, int n_vertices,
                                             const Field& k) {
  if (n_vertices < 0 || n_vertices > 20)
    throw std::invalid_argument("reduced_cohomology: vertex count out of range");
  std::vector<std::int64_t> dims(n_vertices + 1, 0);
  if (faces.empty()) return dims;
  std::unordered_set<Face, FaceHash> set(faces.begin(), faces.end());
  if (set.size() != faces.size())
    throw std::invalid_argument("reduced_cohomology: duplicate face");
  int top = 0;
  for (const auto& f : faces) {
    if (!f.empty() && f.max() >= n_vertices)
      throw std::invalid_argument("reduced_cohomology: vertex out of range");
    top = std::max(top, f.size());
    for (int v : f.members())
      if (!set.count(f.without(v)))
        throw std::invalid_argument("reduced_cohomology: face list not subset-closed");
  }
  std::vector<std::vector<Face>> bases(top + 1);
  for (const auto& f : faces) bases[f.size()].push_back(f);
  auto h = chain_homology(bases, k);
  for (std::size_t s = 0; s < h.size(); ++s) dims[s] = h[s];
  return dims;
}

}  // namespace betti
