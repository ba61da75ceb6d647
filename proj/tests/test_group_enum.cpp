#include <random>

#include "doctest.h"
#include "wcg/classifier.hpp"
#include "wcg/group_enum.hpp"

using namespace wcg;

TEST_CASE("enumerating finite Coxeter groups") {
  const auto a2 = bfs_enumerate(standard_generators(CoxeterGraph::chain(2)), 100, true);
  CHECK(a2.order() == 6);
  CHECK(a2.growth == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(is_identity(a2.elements.front()));

  CHECK(bfs_enumerate(standard_generators(CoxeterGraph::chain(3)), 100).order() == 24);
  CHECK(bfs_enumerate(standard_generators(CoxeterGraph::chain(2, Label(4))), 100).order() == 8);
  CHECK(bfs_enumerate(standard_generators(CoxeterGraph::chain(2, Label(5))), 100).order() == 10);
}

TEST_CASE("budget exhaustion") {
  const auto w = monomial_witness(4, 2);
  const auto r = bfs_enumerate(w.generators(), 500);
  CHECK_FALSE(r.closed);
  CHECK_FALSE(r.order());
  CHECK(r.size == 500);
  CHECK(enumeration_to_json(r)["status"] == "budget exhausted");
}

TEST_CASE("monomial model") {
  const Cyclotomic a = 3;
  CHECK(monomial_from_matrix(identity<Cyclotomic>(3), a) == MonomialMatrix::identity(3));

  const auto w = monomial_witness(4, a);
  const auto big_a = monomial_from_matrix(w.big_a, a);
  CHECK(big_a.perm == std::vector<int>{3, 1, 2, 0});
  CHECK(big_a.exponents == std::vector<long>{-1, 0, 0, 1});

  const auto t1 = monomial_from_matrix(w.t[0], a);
  CHECK(monomial_compose(t1, t1) == MonomialMatrix::identity(4));

  RepMatrix dense = identity<Cyclotomic>(2);
  dense(0, 1) = 1;
  CHECK_THROWS(monomial_from_matrix(dense, a));
  RepMatrix odd = identity<Cyclotomic>(2);
  odd(0, 0) = 5;
  CHECK_THROWS(monomial_from_matrix(odd, a));

  // composition agrees with matrix multiplication on random words
  std::mt19937 rng(11);
  const auto gens = w.generators();
  for (int trial = 0; trial < 50; ++trial) {
    RepMatrix m = identity<Cyclotomic>(4);
    auto mm = MonomialMatrix::identity(4);
    for (int k = 0; k < 8; ++k) {
      const auto g = rng() % gens.size();
      m = (m * gens[g]).eval();
      mm = monomial_compose(mm, monomial_from_matrix(gens[g], a));
    }
    CHECK(exactly_equal(mm.to_matrix(a), m));
    CHECK(mm.exponent_sum() == 0);
  }
}

TEST_CASE("affine permutations") {
  CHECK(affine_from_monomial(MonomialMatrix::identity(3)) == AffinePermutation::identity(3));

  MonomialMatrix shift = MonomialMatrix::identity(3);
  shift.exponents = {1, -1, 0};
  CHECK(affine_from_monomial(shift).window() == std::vector<long>{-2, 5, 3});

  const auto w = monomial_witness(4, 2);
  CHECK(affine_from_monomial(monomial_from_matrix(w.big_a, 2)) == AffinePermutation::generator(4, 0));
  for (int i = 1; i < 4; ++i)
    CHECK(affine_from_monomial(monomial_from_matrix(w.t[static_cast<std::size_t>(i - 1)], 2)) ==
          AffinePermutation::generator(4, i));

  MonomialMatrix bad = MonomialMatrix::identity(3);
  bad.exponents = {1, 0, 0};
  CHECK_THROWS(affine_from_monomial(bad));
  CHECK_THROWS(AffinePermutation({1, 1, 4}));
  CHECK_THROWS(AffinePermutation({1, 2, 4}));

  const auto s0 = AffinePermutation::generator(3, 0);
  CHECK(s0(0) == 1);
  CHECK(s0(4) == 3);
  CHECK(s0.length() == 1);
  CHECK(affine_compose(s0, s0) == AffinePermutation::identity(3));

  // composition is a homomorphism from the monomial model
  std::mt19937 rng(5);
  const auto gens = w.generators();
  for (int trial = 0; trial < 50; ++trial) {
    auto x = MonomialMatrix::identity(4), y = MonomialMatrix::identity(4);
    for (int k = 0; k < 6; ++k) {
      x = monomial_compose(x, monomial_from_matrix(gens[rng() % 4], 2));
      y = monomial_compose(y, monomial_from_matrix(gens[rng() % 4], 2));
    }
    CHECK(affine_from_monomial(monomial_compose(x, y)) ==
          affine_compose(affine_from_monomial(x), affine_from_monomial(y)));
  }
}

TEST_CASE("affine truncations agree three ways") {
  const auto r3 = verify_affine_iso(3, 2, 4);
  CHECK(r3.ok());
  CHECK(r3.matrix_growth == std::vector<std::size_t>{1, 3, 6, 9, 12});
  CHECK(r3.words_checked == 1 + 3 + 9 + 27 + 81);

  const auto r0 = verify_affine_iso(3, 2, 0);
  CHECK(r0.matrix_growth == std::vector<std::size_t>{1});

  const auto r4 = verify_affine_iso(4, parse_scalar("1/3"), 4);
  CHECK(r4.ok());
  CHECK(r4.affine_growth == std::vector<std::size_t>{1, 4, 10, 20, 34});

  CHECK_THROWS_AS(verify_affine_iso(4, parse_scalar("zeta(4)"), 3), std::domain_error);
}

TEST_CASE("affine length matches breadth-first depth") {
  const int n = 3;
  std::vector<AffinePermutation> level{AffinePermutation::identity(n)};
  std::vector<std::vector<long>> seen{level[0].window()};
  for (int len = 1; len <= 5; ++len) {
    std::vector<AffinePermutation> next;
    for (const auto& x : level)
      for (int i = 0; i < n; ++i) {
        auto y = affine_compose(x, AffinePermutation::generator(n, i));
        if (std::find(seen.begin(), seen.end(), y.window()) != seen.end()) continue;
        seen.push_back(y.window());
        CHECK(y.length() == len);
        next.push_back(std::move(y));
      }
    level = std::move(next);
  }
}
