#pragma once

#include <vector>

#include "betti/monomial.hpp"

namespace betti {

// Keeps only the generators not strictly divisible by another; first
// occurrence wins on duplicates, input order preserved otherwise.
std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens);

// Monomial ideal given by its (minimalized) generators. The unit ideal is
// rejected: resolutions below are of S/I for proper I. The zero ideal (r = 0)
// is fine.
class MonomialIdeal {
 public:
  MonomialIdeal(int n_vars, std::vector<Monomial> generators);

  int n_vars() const { return n_; }
  int n_generators() const { return static_cast<int>(gens_.size()); }
  const Monomial& generator(int k) const { return gens_[k]; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::int64_t max_generator_degree() const;
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int n_;
  std::vector<Monomial> gens_;
};

// Substitute x_i^e -> product of e fresh variables. var_map[j] = original
// variable of polarized slot j; depolarize collapses a polarized exponent
// vector back by summing slots per original variable.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<int> var_map;
  int source_vars;

  Exponents depolarize(const Exponents& polarized) const;
};

Polarization polarize(const MonomialIdeal& ideal);

}  // namespace betti
