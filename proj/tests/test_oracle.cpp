#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "betti/homology.hpp"
#include "betti/oracle.hpp"
#include "betti/random_ideal.hpp"
#include "helpers.hpp"

using namespace betti;
using betti::testing::make_ideal;

namespace {

Exponents exps(std::initializer_list<std::int32_t> v) {
  Exponents e(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) e[i++] = x;
  return e;
}

// faces of the Stanley-Reisner complex of a squarefree ideal
NonfaceComplex sr_complex(const MonomialIdeal& ideal) {
  std::vector<Face> nonfaces;
  for (const auto& g : ideal.generators()) {
    std::vector<int> supp;
    for (int v = 0; v < ideal.n_vars(); ++v)
      if (g.exponent(v) > 0) supp.push_back(v);
    nonfaces.emplace_back(std::move(supp));
  }
  return make_nonface_complex(ideal.n_vars(), std::move(nonfaces));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("exact rank") {
  const RationalField q;
  FieldMatrix<RationalField> m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = q.from_int(i + j);
  CHECK(exact_rank(m, q) == 2);  // rows are an arithmetic progression

  // ill-conditioned for floats, exact here: tiny Hilbert-like matrix
  FieldMatrix<RationalField> h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = q.one() / q.from_int(i + j + 1);
  CHECK(exact_rank(h, q) == 3);

  const PrimeField f2(2);
  FieldMatrix<PrimeField> p(2, 2);
  p(0, 0) = f2.from_int(1);
  p(0, 1) = f2.from_int(1);
  p(1, 0) = f2.from_int(1);
  p(1, 1) = f2.from_int(3);  // = 1 mod 2
  CHECK(exact_rank(p, f2) == 1);
  const PrimeField f5(5);
  FieldMatrix<PrimeField> p5(2, 2);
  p5(0, 0) = f5.from_int(1);
  p5(0, 1) = f5.from_int(1);
  p5(1, 0) = f5.from_int(1);
  p5(1, 1) = f5.from_int(3);
  CHECK(exact_rank(p5, f5) == 2);
}

TEST_CASE("multigraded fixtures") {
  const RationalField q;
  const MonomialIdeal pow = make_ideal(2, {"x1^2", "x1*x2", "x2^2"});
  // spec fixture: at a = (2,1) only the first syzygy strand is inhabited...
  const auto at21 = oracle_multigraded_betti(pow, exps({2, 1}), q);
  CHECK(at21[2] == 1);
  CHECK(at21[0] == 0);
  CHECK(at21[1] == 0);
  // ... and the cancelling pair at (2,2) contributes nothing
  for (auto v : oracle_multigraded_betti(pow, exps({2, 2}), q)) CHECK(v == 0);

  const MultigradedBetti mg = oracle_multigraded(pow, q);
  CHECK(mg.count(0, exps({0, 0})) == 1);
  CHECK(mg.count(1, exps({2, 0})) == 1);
  CHECK(mg.count(1, exps({1, 1})) == 1);
  CHECK(mg.count(1, exps({0, 2})) == 1);
  CHECK(mg.count(2, exps({2, 1})) == 1);
  CHECK(mg.count(2, exps({1, 2})) == 1);
  CHECK(mg.count(2, exps({2, 2})) == 0);
  std::int64_t total = 0;
  for (const auto& [key, c] : mg.entries()) total += c;
  CHECK(total == 6);
}

TEST_CASE("graded fixtures") {
  const RationalField q;
  const BettiTable t = oracle_betti_table(make_ideal(2, {"x1^2", "x1*x2", "x2^2"}), q);
  CHECK(t.beta(0, 0) == 1);
  CHECK(t.beta(1, 2) == 3);
  CHECK(t.beta(2, 3) == 2);
  CHECK(t.projdim() == 2);
  CHECK(t.regularity() == 1);

  const BettiTable koszul = oracle_betti_table(make_ideal(3, {"x1", "x2", "x3"}), q);
  const std::int64_t expect[4] = {1, 3, 3, 1};
  for (int i = 0; i <= 3; ++i) CHECK(koszul.beta(i, i) == expect[i]);
  CHECK(koszul.regularity() == 0);

  const BettiTable zero = oracle_betti_table(MonomialIdeal(3, {}), q);
  CHECK(zero.beta(0, 0) == 1);
  CHECK(zero.projdim() == 0);

  CHECK_THROWS_AS(oracle_betti_table(random_ideal(8, 13, 3, 5), q), std::invalid_argument);
}

TEST_CASE("reduced cohomology fixtures") {
  const RationalField q;
  auto face = [](std::initializer_list<int> v) { return Face(std::vector<int>(v)); };

  // hollow triangle: a circle
  std::vector<Face> hollow = {face({}), face({0}), face({1}), face({2}),
                              face({0, 1}), face({0, 2}), face({1, 2})};
  auto dims = reduced_cohomology(hollow, 3, q);
  CHECK(dims == std::vector<std::int64_t>{0, 0, 1, 0});

  // full simplex: contractible
  std::vector<Face> full = hollow;
  full.push_back(face({0, 1, 2}));
  dims = reduced_cohomology(full, 3, q);
  CHECK(dims == std::vector<std::int64_t>{0, 0, 0, 0});

  // boundary of the tetrahedron: a 2-sphere
  std::vector<Face> sphere;
  for (unsigned mask = 0; mask < 15; ++mask) {
    std::vector<int> mem;
    for (int v = 0; v < 4; ++v)
      if (mask & (1u << v)) mem.push_back(v);
    sphere.emplace_back(std::move(mem));
  }
  dims = reduced_cohomology(sphere, 4, q);
  CHECK(dims == std::vector<std::int64_t>{0, 0, 0, 1, 0});

  // two points: one extra connected component
  dims = reduced_cohomology({face({}), face({0}), face({1})}, 2, q);
  CHECK(dims == std::vector<std::int64_t>{0, 1, 0});

  // the complex holding only the empty face
  dims = reduced_cohomology({face({})}, 2, q);
  CHECK(dims == std::vector<std::int64_t>{1, 0, 0});

  // the void complex has no homology at all
  dims = reduced_cohomology({}, 2, q);
  CHECK(dims == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("reduced cohomology validation") {
  const RationalField q;
  auto face = [](std::initializer_list<int> v) { return Face(std::vector<int>(v)); };
  // not subset-closed
  CHECK_THROWS_AS(reduced_cohomology({face({}), face({0, 1})}, 2, q), std::invalid_argument);
  // vertex out of range
  CHECK_THROWS_AS(reduced_cohomology({face({}), face({5})}, 2, q), std::invalid_argument);
  // duplicate face
  CHECK_THROWS_AS(reduced_cohomology({face({}), face({0}), face({0})}, 2, q),
                  std::invalid_argument);
  // too many vertices
  CHECK_THROWS_AS(reduced_cohomology({face({})}, 21, q), std::invalid_argument);
}

TEST_CASE("euler characteristic matches homology") {
  // reduced chi = sum over faces of (-1)^dim = sum over degrees of (-1)^d dim H~_d,
  // in every characteristic
  const RationalField q;
  const PrimeField f2(2);
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 30 && tested < 8; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(5, 4, 2, 3, seed);
    if (!i.is_squarefree()) continue;
    ++tested;
    const auto faces = expand_face_list(sr_complex(i));
    std::int64_t chi = 0;
    for (const auto& f : faces) chi += (f.size() % 2 == 0) ? -1 : 1;  // (-1)^(size-1)
    std::int64_t hsum_q = 0, hsum_2 = 0;
    const auto dq = reduced_cohomology(faces, i.n_vars(), q);
    const auto d2 = reduced_cohomology(faces, i.n_vars(), f2);
    for (std::size_t s = 0; s < dq.size(); ++s) {
      const int sign = (s % 2 == 1) ? 1 : -1;  // slot s holds degree s-1
      hsum_q += sign * dq[s];
      hsum_2 += sign * d2[s];
    }
    CHECK(chi == hsum_q);
    CHECK(chi == hsum_2);
  }
  CHECK(tested > 0);
}

TEST_CASE("hochster formula on full support") {
  const RationalField q;
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 30 && tested < 8; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(4, 4, 2, 3, seed);
    if (!i.is_squarefree()) continue;
    ++tested;
    const NonfaceComplex cx = sr_complex(i);
    const MultigradedBetti mg = oracle_multigraded(i, q);
    const int n = i.n_vars();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> wv;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) wv.push_back(v);
      const Face w(wv);
      const auto h = reduced_cohomology(expand_restricted(cx, w), n, q);
      Exponents a = Exponents::Zero(n);
      for (int v : wv) a[v] = 1;
      for (int i1 = 0; i1 <= w.size(); ++i1) {
        // beta_{i,W}(S/I) = dim H~_{|W|-i-1}(restriction)
        const int d = w.size() - i1 - 1;
        const std::int64_t expected = (d >= -1) ? h[d + 1] : 0;
        CHECK(mg.count(i1, a) == expected);
      }
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("polarization preserves the table") {
  const RationalField q;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const MonomialIdeal i = random_ideal_mixed(3, 4, 2, 3, seed);
    const Polarization p = polarize(i);
    CHECK(oracle_betti_table(i, q) == oracle_betti_table(p.ideal, q));
    // multigraded collapses back through depolarization
    MultigradedBetti collapsed;
    const MultigradedBetti wide = oracle_multigraded(p.ideal, q);
    for (const auto& [key, c] : wide.entries())
      collapsed.add(key.first, p.depolarize(from_key(key.second)), c);
    CHECK(collapsed == oracle_multigraded(i, q));
  }
}

}  // TEST_SUITE
