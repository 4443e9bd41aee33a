#include "betti/random_ideal.hpp"

#include <stdexcept>

namespace betti {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t monomial_count(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("monomial_count: bad arguments");
  // C(n+d-1, d) incrementally, watching for overflow
  std::int64_t c = 1;
  for (int i = 1; i <= d; ++i) {
    const std::int64_t num = n - 1 + i;
    if (c > (std::int64_t{1} << 62) / num)
      throw std::overflow_error("monomial_count: too many monomials");
    c = c * num / i;  // exact: every prefix product is a binomial coefficient
  }
  return c;
}

Monomial unrank_monomial(int n, int d, std::int64_t rank) {
  if (rank < 0 || rank >= monomial_count(n, d))
    throw std::out_of_range("unrank_monomial: rank out of range");
  Exponents e = Exponents::Zero(n);
  for (int var = 0; var < n - 1; ++var) {
    // blocks by exponent of this variable, highest exponent first
    for (int exp = d; exp >= 0; --exp) {
      const std::int64_t block = monomial_count(n - var - 1, d - exp);
      if (rank < block) {
        e[var] = exp;
        d -= exp;
        break;
      }
      rank -= block;
    }
  }
  e[n - 1] = d;
  return Monomial(std::move(e));
}

Monomial random_monomial(int n, int d, SeededRng& rng) {
  return unrank_monomial(n, d, static_cast<std::int64_t>(rng.below(monomial_count(n, d))));
}

static MonomialIdeal draw_ideal(int n, int r, int dmin, int dmax, std::uint64_t seed) {
  if (n < 1 || r < 0 || dmin < 1 || dmax < dmin)
    throw std::invalid_argument("random ideal: bad parameters");
  if (dmax > kMaxExponent) throw std::invalid_argument("random ideal: degree too large");
  SeededRng rng(seed);
  std::vector<Monomial> pool;
  const long budget = 20000 + 500L * r;
  for (long attempt = 0; static_cast<int>(pool.size()) < r; ++attempt) {
    if (attempt >= budget)
      throw std::runtime_error("random ideal: draw budget exhausted (infeasible parameters?)");
    const int d = dmin + static_cast<int>(rng.below(static_cast<std::uint64_t>(dmax - dmin + 1)));
    pool.push_back(random_monomial(n, d, rng));
    pool = minimalize_generators(std::move(pool));
  }
  return MonomialIdeal(n, std::move(pool));
}

MonomialIdeal random_ideal(int n, int r, int d, std::uint64_t seed) {
  if (d >= 1 && r > 0 && monomial_count(n, d) < r)
    throw std::invalid_argument("random ideal: infeasible (r exceeds degree-d monomial count)");
  return draw_ideal(n, r, d, d, seed);
}

MonomialIdeal random_ideal_mixed(int n, int r, int dmin, int dmax, std::uint64_t seed) {
  return draw_ideal(n, r, dmin, dmax, seed);
}

}  // namespace betti
