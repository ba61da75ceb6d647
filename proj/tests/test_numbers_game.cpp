#include <random>

#include "doctest.h"
#include "wcg/numbers_game.hpp"

using namespace wcg;

namespace {

Position pos(std::initializer_list<const char*> xs) {
  Position p(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const char* x : xs) p(i++) = parse_scalar(x);
  return p;
}

}  // namespace

TEST_CASE("firing") {
  const auto a2 = NumbersGame::classical(CoxeterGraph::chain(2));
  CHECK(exactly_equal(a2.fire(pos({"1", "1"}), 0), pos({"-1", "2"})));
  CHECK(exactly_equal(a2.fire(a2.fire(pos({"1", "1"}), 0), 0), pos({"1", "1"})));
  CHECK_THROWS(a2.fire(pos({"1", "1"}), 2));

  const auto point = NumbersGame::classical(CoxeterGraph(1));
  CHECK(exactly_equal(point.fire(pos({"3/2"}), 0), pos({"-3/2"})));

  // asymmetric k: firing s adds k_{s,s'} p_s at s'
  const auto b2 = CoxeterGraph::chain(2, Label(4));
  const auto g = NumbersGame::classical(b2, EdgeCoefficients::integral(b2));
  CHECK(exactly_equal(g.fire(pos({"1", "1"}), 0), pos({"-1", "3"})));
  CHECK(exactly_equal(g.fire(pos({"1", "1"}), 1), pos({"2", "-1"})));
}

TEST_CASE("move classes") {
  CHECK(move_class(pos({"3"}), 0) == MoveClass::positive);
  CHECK(move_class(pos({"-1/2"}), 0) == MoveClass::negative);
  CHECK(move_class(pos({"0"}), 0) == MoveClass::zero);
  CHECK(move_class(pos({"zeta(4)"}), 0) == MoveClass::nonreal);
  const std::vector<Cyclotomic> pot{1, -1};
  CHECK(move_class(pos({"1", "-1"}), 1, &pot) == MoveClass::pseudo_positive);
  CHECK(move_class(pos({"1", "1"}), 1, &pot) == MoveClass::pseudo_negative);
}

TEST_CASE("plays on A2") {
  const auto a2 = NumbersGame::classical(CoxeterGraph::chain(2));
  const auto r = a2.play({0, 1, 0});
  CHECK(exactly_equal(r.final_position(), pos({"-1", "-1"})));
  CHECK(r.all_positive());

  const auto empty = a2.play({});
  CHECK(exactly_equal(empty.final_position(), a2.unit_start()));
  CHECK(empty.all_positive());

  const auto back = a2.play({0, 0});
  CHECK(exactly_equal(back.final_position(), a2.unit_start()));
  CHECK(back.moves[1].cls == MoveClass::negative);

  CHECK(a2.is_reduced({0, 1, 0}));
  CHECK_FALSE(a2.is_reduced({0, 0}));
  CHECK_FALSE(a2.is_reduced({0, 1, 0, 1}));

  CHECK(a2.descent_set({}).empty());
  CHECK(a2.descent_set({0, 1, 0}) == std::vector<Vertex>{0, 1});
  CHECK(a2.descent_set({0}) == std::vector<Vertex>{0});
}

TEST_CASE("reachable positions") {
  const auto a2 = NumbersGame::classical(CoxeterGraph::chain(2));
  const auto r2 = a2.reachable_positions(a2.unit_start(), 1000);
  CHECK(r2.positions.size() == 6);
  CHECK_FALSE(r2.exhausted);

  const auto a3 = NumbersGame::classical(CoxeterGraph::chain(3));
  CHECK(a3.reachable_positions(a3.unit_start(), 1000).positions.size() == 24);

  const auto inf = NumbersGame::classical(CoxeterGraph::chain(2, Label::infinite()));
  const auto ri = inf.reachable_positions(inf.unit_start(), 50);
  CHECK(ri.exhausted);
  CHECK(ri.positions.size() == 50);
}

TEST_CASE("generalized weight validation") {
  auto g = CoxeterGraph::cycle(4);
  g.add_edge(0, 2);
  CHECK(validate_generalized_weights(g, standard_couplings(EdgeCoefficients::symmetric(g))).ok());

  // signs on a balanced graph
  const auto signs = WeightFunction::from_edge_weights(g, {-1, -1, -1, 1, 1});
  const auto k = generalized_couplings(signs, EdgeCoefficients::symmetric(g));
  const auto check = validate_generalized_weights(g, k);
  REQUIRE(check.ok());
  CHECK(std::holds_alternative<Balanced>(check_balanced(g, *check.f)));

  const auto c4 = CoxeterGraph::cycle(4);
  WeightFunction odd;
  for (int i = 0; i < 4; ++i) odd.set_reciprocal(i, (i + 1) % 4, i == 3 ? -1 : 1);
  const auto bad = validate_generalized_weights(c4, generalized_couplings(odd, EdgeCoefficients::symmetric(c4)));
  CHECK(bad.condition1);
  CHECK(bad.condition2);
  CHECK_FALSE(bad.condition3);
  CHECK_THROWS_AS(NumbersGame::generalized(c4, odd), GeneralizedGameRefused);

  // a positive-real cycle product is fine once the split is rescaled
  const auto tri = CoxeterGraph::cycle(3, Label::infinite());
  Couplings wide;
  for (int i = 0; i < 3; ++i) {
    wide[{i, (i + 1) % 3}] = 4;
    wide[{(i + 1) % 3, i}] = 1;
  }
  const auto w = validate_generalized_weights(tri, wide);
  CHECK(w.ok());

  Couplings off = wide;
  off[{0, 1}] = parse_scalar("4*zeta(4)");
  off[{1, 0}] = parse_scalar("-zeta(4)");
  const auto wo = validate_generalized_weights(tri, off);
  CHECK(wo.condition1);
  CHECK(wo.condition2);
  // k around the triangle multiplies to 64i
  CHECK_FALSE(wo.condition3);

  Couplings wrong = standard_couplings(EdgeCoefficients::symmetric(c4));
  wrong[{0, 1}] = 2;
  const auto w1 = validate_generalized_weights(c4, wrong);
  CHECK_FALSE(w1.condition1);
}

TEST_CASE("generalized game on the six-vertex example") {
  CoxeterGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  const auto f = WeightFunction::from_edge_weights(g, {-1, -1, 1, -1, 1, 1});
  const auto gen = NumbersGame::generalized(g, f);
  const auto cls = NumbersGame::classical(g);
  CHECK(gen.is_generalized());
  CHECK(exactly_equal(gen.gauge(), diagonal<Cyclotomic>({1, -1, 1, -1, -1, -1})));
  // J^{-1} 1 is gauge-equivalent to the unit position
  CHECK(exactly_equal((gen.gauge() * gen.unit_start()).eval(), cls.unit_start()));

  const Word w{0, 1, 2, 4, 3, 5, 1};
  const auto rg = gen.play(w);
  const auto rc = cls.play(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(exactly_equal((gen.gauge() * rg.positions[i]).eval(), rc.positions[i]));
    CHECK((rg.moves[i].cls == MoveClass::pseudo_positive) == (rc.moves[i].cls == MoveClass::positive));
  }
  CHECK(gen.is_reduced(w) == cls.is_reduced(w));
  CHECK(gen.descent_set(w) == cls.descent_set(w));
}

TEST_CASE("imo pentagon") {
  CHECK(imo_pentagon_run({1, 1, 1, 1, 1}, 100).terminated);
  CHECK(imo_pentagon_run({1, 1, 1, 1, 1}, 100).record.moves.empty());

  const auto one = imo_pentagon_run({-1, 2, 2, 2, 2}, 100);
  CHECK(one.terminated);
  REQUIRE(one.record.moves.size() == 1);
  CHECK(exactly_equal(one.record.final_position(), position_from_integers({1, 1, 2, 2, 1})));

  const auto cut = imo_pentagon_run({-9, -9, 9, 9, 1}, 2);
  CHECK_FALSE(cut.terminated);
  CHECK(cut.record.moves.size() == 2);

  CHECK_THROWS(imo_pentagon_run({-1, 0, 0, 0, 1}, 10));
}

TEST_CASE("trajectory JSON") {
  const auto a2 = NumbersGame::classical(CoxeterGraph::chain(2));
  const auto j = play_to_json(a2.play({0}));
  CHECK(j["moves"][0]["vertex"] == 1);
  CHECK(j["moves"][0]["class"] == "positive");
  CHECK(j["final"][1]["exact"] == "2");
  CHECK(j["final"][1]["decimal"] == "2.000000");
}
