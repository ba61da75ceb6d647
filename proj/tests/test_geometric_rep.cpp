#include <random>

#include "doctest.h"
#include "wcg/geometric_rep.hpp"

using namespace wcg;

namespace {

RepMatrix rows(std::initializer_list<std::initializer_list<const char*>> entries) {
  RepMatrix m(static_cast<Index>(entries.size()), static_cast<Index>(entries.begin()->size()));
  Index r = 0;
  for (const auto& row : entries) {
    Index c = 0;
    for (const char* e : row) m(r, c++) = parse_scalar(e);
    ++r;
  }
  return m;
}

CoxeterGraph six_vertex() {
  CoxeterGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  return g;
}

}  // namespace

TEST_CASE("standard generators") {
  const auto a3 = standard_generators(CoxeterGraph::chain(3));
  CHECK(exactly_equal(a3[1], rows({{"1", "0", "0"}, {"1", "-1", "1"}, {"0", "0", "1"}})));

  const auto point = standard_generators(CoxeterGraph(1));
  CHECK(exactly_equal(point[0], rows({{"-1"}})));

  const auto b2 = CoxeterGraph::chain(2, Label(4));
  const auto l = EdgeCoefficients::integral(b2);
  CHECK(validate_coefficients(b2, l).empty());
  const auto s = standard_generators(b2, l);
  CHECK(s[0](0, 1) == Cyclotomic(2));
  CHECK(s[1](1, 0) == Cyclotomic(1));
  CHECK(verify_coxeter_relations(s, b2).ok());
}

TEST_CASE("the S4 chain with weights a, b") {
  const auto g = CoxeterGraph::chain(3);
  const Cyclotomic a = parse_scalar("2*zeta(5)"), b = parse_scalar("-1/3");
  WeightFunction f;
  f.set_reciprocal(0, 1, a);
  f.set_reciprocal(1, 2, b);
  const auto w = generalized_generators(g, f);
  CHECK(w[1](1, 0) == a.inverse());
  CHECK(w[1](1, 1) == Cyclotomic(-1));
  CHECK(w[1](1, 2) == b);
  CHECK(w[0](0, 1) == a);
  CHECK(w[2](2, 1) == b.inverse());
  CHECK(verify_coxeter_relations(w, g).ok());

  // potentials (1, a, ab) carry sigma_i to omega_i
  const auto j = gauge_from_potentials({1, a, a * b});
  const auto conj = gauge_conjugate(j, standard_generators(g));
  for (std::size_t i = 0; i < 3; ++i) CHECK(exactly_equal(conj[i], w[i]));

  const auto unit = generalized_generators(g, WeightFunction::unit(g));
  const auto std_gens = standard_generators(g);
  for (std::size_t i = 0; i < 3; ++i) CHECK(exactly_equal(unit[i], std_gens[i]));
}

TEST_CASE("six-vertex signed example") {
  const auto g = six_vertex();
  const auto f = WeightFunction::from_edge_weights(g, {-1, -1, 1, -1, 1, 1});
  const auto sigma = standard_generators(g);
  const auto omega = generalized_generators(g, f);
  CHECK(exactly_equal(sigma[1].row(1).eval(), rows({{"1", "-1", "1", "1", "0", "0"}}).row(0).eval()));
  CHECK(exactly_equal(omega[1].row(1).eval(), rows({{"-1", "-1", "-1", "1", "0", "0"}}).row(0).eval()));
  const auto j = gauge_from_potentials({1, -1, 1, -1, -1, -1});
  CHECK(exactly_equal(j, diagonal<Cyclotomic>({1, -1, 1, -1, -1, -1})));
  const auto conj = gauge_conjugate(j, sigma);
  for (std::size_t i = 0; i < 6; ++i) CHECK(exactly_equal(conj[i], omega[i]));
  CHECK(verify_coxeter_relations(omega, g).ok());
}

TEST_CASE("Coxeter relations across labels") {
  std::mt19937 rng(3);
  const char* pool[] = {"1", "-1", "zeta(3)", "-zeta(3)", "zeta(4)", "2", "1/2"};
  const Label labels[] = {Label(3), Label(4), Label(5), Label(6), Label::infinite()};
  for (int trial = 0; trial < 8; ++trial) {
    auto g = CoxeterGraph::cycle(3 + trial % 3, labels[trial % 5]);
    std::vector<Cyclotomic> w;
    for (std::size_t e = 0; e < g.edges().size(); ++e) w.push_back(parse_scalar(pool[rng() % 7]));
    const auto f = WeightFunction::from_edge_weights(g, w);
    const auto report = verify_coxeter_relations(generalized_generators(g, f), g, 12);
    CHECK_MESSAGE(report.ok(), (report.failures.empty() ? "" : report.failures.front()));
  }
}

TEST_CASE("an infinite edge has no finite-order product") {
  const auto g = CoxeterGraph::chain(2, Label::infinite());
  const auto s = standard_generators(g);
  CHECK(s[0](0, 1) == Cyclotomic(2));
  CHECK(verify_coxeter_relations(s, g, 20).ok());

  // a wrong label is detected
  const auto a2 = CoxeterGraph::chain(2);
  const auto report = verify_coxeter_relations(standard_generators(CoxeterGraph::chain(2, Label(4))), a2);
  CHECK_FALSE(report.ok());
}

TEST_CASE("edge coefficient validation") {
  const auto g = CoxeterGraph::chain(2, Label(5));
  auto l = EdgeCoefficients::symmetric(g);
  CHECK(validate_coefficients(g, l).empty());
  l.set(0, 1, 1);
  CHECK(validate_coefficients(g, l).size() == 1);

  const auto inf = CoxeterGraph::chain(2, Label::infinite());
  EdgeCoefficients wide;
  wide.set(0, 1, 3);
  wide.set(1, 0, 2);
  CHECK(validate_coefficients(inf, wide).empty());
  wide.set(1, 0, 1);
  CHECK_FALSE(validate_coefficients(inf, wide).empty());
  wide.set(1, 0, -2);
  CHECK_FALSE(validate_coefficients(inf, wide).empty());
}

TEST_CASE("words") {
  const auto a2 = CoxeterGraph::chain(2);
  const auto gens = standard_generators(a2);
  CHECK(is_identity(evaluate_word(gens, {})));
  CHECK(is_identity(evaluate_word(gens, {1, 1})));
  CHECK(exactly_equal(evaluate_word(gens, {0, 1, 0}), evaluate_word(gens, {1, 0, 1})));
  CHECK_THROWS(evaluate_word(gens, {2}));

  CHECK(words_equal_in_group(a2, {0, 1, 0}, {1, 0, 1}));
  CHECK_FALSE(words_equal_in_group(a2, {0}, {1}));
  CHECK(words_equal_in_group(CoxeterGraph(2), {0, 1, 0, 1}, {}));
  CHECK(words_equal_in_group(a2, {0, 1, 0, 1}, {1, 0}));
}

TEST_CASE("zero potential is rejected") { CHECK_THROWS(gauge_from_potentials({1, 0})); }
