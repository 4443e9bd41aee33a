#pragma once

#include <cstdint>
#include <random>

#include "betti/ideal.hpp"

namespace betti {

// mt19937_64 plus an unbiased bounded draw (rejection sampling); the stdlib
// distributions are not reproducible across implementations, this is.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 g_;
};

// C(n+d-1, d), the number of degree-d monomials in n variables; throws on
// 64-bit overflow.
std::int64_t monomial_count(int n, int d);

// rank-th degree-d monomial, ordered by decreasing exponent blocks of x_1,
// then recursively on the rest.
Monomial unrank_monomial(int n, int d, std::int64_t rank);

Monomial random_monomial(int n, int d, SeededRng& rng);

// Draw degree-d monomials uniformly until r survive minimalization.
// Deterministic in (n, r, d, seed). Degree range [dmin, dmax] picks the
// degree uniformly per draw.
MonomialIdeal random_ideal(int n, int r, int d, std::uint64_t seed);
MonomialIdeal random_ideal_mixed(int n, int r, int dmin, int dmax, std::uint64_t seed);

}  // namespace betti
