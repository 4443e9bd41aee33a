#include "betti/ideal.hpp"

#include <stdexcept>

namespace betti {

std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens) {
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {  // covers duplicates too
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    std::erase_if(kept, [&](const Monomial& k) { return divides(g, k); });
    kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<Monomial> generators) : n_(n_vars) {
  if (n_ < 0) throw std::invalid_argument("negative ring size");
  for (const auto& g : generators) {
    if (g.n_vars() != n_) throw std::invalid_argument("generator ring size mismatch");
    if (g.is_unit()) throw std::invalid_argument("unit ideal has no interesting resolution");
  }
  gens_ = minimalize_generators(std::move(generators));
}

std::int64_t MonomialIdeal::max_generator_degree() const {
  std::int64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if ((g.exponents().array() > 1).any()) return false;
  return true;
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.n_vars();
  // slot layout: variable i contributes max_i slots, max_i = largest exponent
  // of x_i across generators (at least 1 so depolarize stays well defined on
  // unused variables).
  std::vector<int> width(n, 1);
  for (const auto& g : ideal.generators())
    for (int i = 0; i < n; ++i) width[i] = std::max(width[i], g.exponent(i));
  std::vector<int> offset(n, 0);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    offset[i] = total;
    total += width[i];
  }
  std::vector<int> var_map(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < width[i]; ++j) var_map[offset[i] + j] = i;

  std::vector<Monomial> gens;
  gens.reserve(ideal.n_generators());
  for (const auto& g : ideal.generators()) {
    Exponents e = Exponents::Zero(total);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < g.exponent(i); ++j) e[offset[i] + j] = 1;
    gens.emplace_back(std::move(e));
  }
  return Polarization{MonomialIdeal(total, std::move(gens)), std::move(var_map), n};
}

Exponents Polarization::depolarize(const Exponents& polarized) const {
  if (polarized.size() != static_cast<Eigen::Index>(var_map.size()))
    throw std::invalid_argument("polarized exponent vector has wrong length");
  Exponents e = Exponents::Zero(source_vars);
  for (std::size_t j = 0; j < var_map.size(); ++j) e[var_map[j]] += polarized[j];
  return e;
}

}  // namespace betti
