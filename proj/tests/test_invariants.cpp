#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "betti/invariants.hpp"
#include "betti/morse.hpp"
#include "betti/random_ideal.hpp"
#include "helpers.hpp"

using namespace betti;
using betti::testing::make_ideal;

TEST_SUITE("invariants") {

TEST_CASE("critical faces") {
  const MonomialIdeal pairs = make_ideal(4, {"x1*x2", "x3*x4"});
  CHECK(is_critical(Face(), pairs));  // dropping nothing, adding anything changes the label
  CHECK(is_critical(Face({0}), pairs));
  CHECK(is_critical(Face({0, 1}), pairs));

  const MonomialIdeal tri = make_ideal(3, {"x1*x2", "x2*x3", "x1*x3"});
  CHECK(is_critical(Face({0}), tri));
  CHECK_FALSE(is_critical(Face({0, 1}), tri));    // adding u3 keeps the label xyz
  CHECK_FALSE(is_critical(Face({0, 1, 2}), tri)); // dropping any member keeps it too
}

TEST_CASE("p and r by exhaustive scan") {
  const CriticalReport pairs = pr_invariants(make_ideal(4, {"x1*x2", "x3*x4"}));
  CHECK(pairs.p == 2);
  CHECK(pairs.r == 2);
  CHECK(pairs.critical.size() == 4);  // every subset is critical

  const CriticalReport single = pr_invariants(make_ideal(1, {"x1"}));
  CHECK(single.p == 1);
  CHECK(single.r == 0);

  const CriticalReport tri = pr_invariants(make_ideal(3, {"x1*x2", "x2*x3", "x1*x3"}));
  CHECK(tri.p == 1);
  CHECK(tri.r == 1);

  const CriticalReport zero = pr_invariants(MonomialIdeal(2, {}));
  CHECK(zero.p == 0);
  CHECK(zero.r == 0);
  CHECK(zero.critical.size() == 1);

  CHECK_THROWS_AS(pr_invariants(make_ideal(1, {"x1"}), 0), std::invalid_argument);
}

TEST_CASE("bounds hold on computed tables") {
  const RationalField q;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(4, 5, 2, 3, seed);
    const BoundsCheck b = check_bounds(compute_betti_table(i, q), pr_invariants(i));
    CHECK(b.ok);
    CHECK(b.projdim >= b.p);
    CHECK(b.reg >= b.r);
  }
}

TEST_CASE("graded vanishing clean and corrupted") {
  const RationalField q;
  const MonomialIdeal pow = make_ideal(2, {"x1^2", "x1*x2", "x2^2"});
  CHECK(verify_vanishing(compute_betti_table(pow, q), pow).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(4, 5, 2, 4, seed);
    const BettiTable t = compute_betti_table(i, q);
    CHECK(verify_vanishing(t, i).empty());
    CHECK(check_degree_tail(t, i.max_generator_degree()).empty());
  }

  // corrupted negative control: Koszul numbers plus a stray beta_{2,5}
  const MonomialIdeal koszul3 = make_ideal(3, {"x1", "x2", "x3"});
  BettiTable bad(4, 4);
  bad.add(0, 0, 1);
  bad.add(1, 1, 3);
  bad.add(2, 2, 3);
  bad.add(3, 3, 1);
  bad.add(2, 5, 1);
  CHECK_FALSE(verify_vanishing(bad, koszul3).empty());
  CHECK_FALSE(check_degree_tail(bad, koszul3.max_generator_degree()).empty());
}

TEST_CASE("multigraded vanishing clean and corrupted") {
  const RationalField q;
  const MonomialIdeal pow = make_ideal(2, {"x1^2", "x1*x2", "x2^2"});
  MultigradedBetti mg = compute_multigraded(pow, q);
  CHECK(verify_vanishing(mg, pow).empty());
  for (std::uint64_t seed = 10; seed < 18; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(3, 5, 2, 3, seed);
    CHECK(verify_vanishing(compute_multigraded(i, q), i).empty());
  }

  Exponents bogus(2);
  bogus << 3, 3;
  mg.add(2, bogus);
  CHECK_FALSE(verify_vanishing(mg, pow).empty());
}

TEST_CASE("table bounds writes") {
  BettiTable t(2, 3);
  t.add(1, 2, 5);
  CHECK(t.beta(1, 2) == 5);
  CHECK(t.beta(2, 9) == 0);                          // outside reads are zero
  CHECK_THROWS_AS(t.add(3, 3, 1), std::logic_error);  // outside writes never happen
  CHECK_THROWS_AS(t.add(1, 4, 1), std::logic_error);  // strand 3 of 2
  CHECK_THROWS_AS(t.add(1, 0, 1), std::logic_error);  // negative strand
}

TEST_CASE("table equality ignores padding") {
  BettiTable a(2, 2), b(4, 5);
  a.add(0, 0, 1);
  a.add(1, 2, 3);
  b.add(0, 0, 1);
  b.add(1, 2, 3);
  CHECK(a == b);
  b.add(2, 4, 1);
  CHECK(a != b);
}

}  // TEST_SUITE
