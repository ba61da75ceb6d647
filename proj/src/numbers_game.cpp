#include "wcg/numbers_game.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace wcg {

namespace {

std::string pair_name(Vertex i, Vertex j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool positive_real(const Cyclotomic& x) { return x.is_real() && sign_of_real(x) == Sign::positive; }

MoveClass classify_value(const Cyclotomic& x, bool pseudo) {
  if (x.is_zero()) return MoveClass::zero;
  if (!x.is_real()) return MoveClass::nonreal;
  const bool pos = sign_of_real(x) == Sign::positive;
  if (pseudo) return pos ? MoveClass::pseudo_positive : MoveClass::pseudo_negative;
  return pos ? MoveClass::positive : MoveClass::negative;
}

void check_vertex(const CoxeterGraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(g.vertex_count()));
}

}  // namespace

std::string to_string(MoveClass c) {
  switch (c) {
    case MoveClass::positive: return "positive";
    case MoveClass::negative: return "negative";
    case MoveClass::zero: return "zero";
    case MoveClass::pseudo_positive: return "pseudo-positive";
    case MoveClass::pseudo_negative: return "pseudo-negative";
    case MoveClass::nonreal: return "nonreal";
  }
  return "?";
}

Position fire(const CoxeterGraph& g, const Couplings& k, const Position& p, Vertex v) {
  check_vertex(g, v);
  if (p.size() != g.vertex_count()) throw std::invalid_argument("position length differs from vertex count");
  Position out = p;
  const Cyclotomic pv = p(v);
  out(v) = -pv;
  if (pv.is_zero()) return out;
  for (Vertex u : g.neighbors(v)) {
    auto it = k.find({v, u});
    if (it == k.end()) throw std::invalid_argument("no coupling on " + pair_name(v, u));
    out(u) += it->second * pv;
  }
  return out;
}

MoveClass move_class(const Position& p, Vertex v, const std::vector<Cyclotomic>* potentials) {
  if (v < 0 || v >= p.size()) throw std::out_of_range("vertex out of range");
  if (!potentials) return classify_value(p(v), false);
  return classify_value(p(v) / (*potentials)[static_cast<std::size_t>(v)], true);
}

bool PlayRecord::all_positive() const {
  for (const auto& m : moves)
    if (m.cls != MoveClass::positive && m.cls != MoveClass::pseudo_positive) return false;
  return true;
}

GeneralizedCheck validate_generalized_weights(const CoxeterGraph& g, const Couplings& k) {
  GeneralizedCheck c;
  EdgeCoefficients base;
  for (const auto& e : g.edges()) {
    auto fw = k.find({e.i, e.j});
    auto bw = k.find({e.j, e.i});
    if (fw == k.end() || bw == k.end() || fw->second.is_zero() || bw->second.is_zero()) {
      c.condition1 = c.condition2 = false;
      c.violations.push_back("(1)/(2): k missing or zero on edge " + pair_name(e.i, e.j));
      continue;
    }
    const Cyclotomic prod = fw->second * bw->second;
    if (e.m.is_infinite()) {
      if (!prod.is_real() || sign_of_real(prod - Cyclotomic(4)) == Sign::negative) {
        c.condition1 = false;
        c.violations.push_back("(1): k_ij k_ji is not a real >= 4 on infinite edge " + pair_name(e.i, e.j));
      }
    } else if (const Cyclotomic t = two_cos(e.m.value()); !(prod == t * t)) {
      c.condition1 = false;
      c.violations.push_back("(1): k_ij k_ji != 4cos^2(pi/" + e.m.to_string() + ") on edge " + pair_name(e.i, e.j));
    }
    if (!positive_real(prod)) {
      c.condition2 = false;
      c.violations.push_back("(2): k_ij k_ji is not a positive real on edge " + pair_name(e.i, e.j) +
                             ", so no split k = f l with l > 0 exists");
      continue;
    }
    // any positive split with the right product; finite labels use the symmetric one
    if (e.m.is_infinite()) {
      base.set(e.i, e.j, prod);
      base.set(e.j, e.i, 1);
    } else {
      base.set(e.i, e.j, two_cos(e.m.value()));
      base.set(e.j, e.i, two_cos(e.m.value()));
    }
  }
  for (const auto& [key, v] : k)
    if (!g.adjacent(key.first, key.second)) {
      c.condition2 = false;
      c.violations.push_back("k given on non-edge " + pair_name(key.first, key.second));
    }
  if (!c.condition1 || !c.condition2) {
    c.violations.push_back("(3): not checked");
    return c;
  }

  // Potentials along a breadth-first forest of f0 = k / l0. Condition (3) holds
  // for some split iff every edge then has k(i,j) pot_i / pot_j positive real.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Cyclotomic> pot(n);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    pot[static_cast<std::size_t>(s)] = 1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        pot[static_cast<std::size_t>(w)] = pot[static_cast<std::size_t>(u)] * k.at({u, w}) / base.at(u, w);
        queue.push_back(w);
      }
    }
  }
  WeightFunction f;
  EdgeCoefficients l;
  for (const auto& e : g.edges()) {
    const Cyclotomic fij = pot[static_cast<std::size_t>(e.j)] / pot[static_cast<std::size_t>(e.i)];
    const Cyclotomic lij = k.at({e.i, e.j}) / fij;
    const Cyclotomic lji = k.at({e.j, e.i}) * fij;
    if (!positive_real(lij) || !positive_real(lji)) {
      c.condition3 = false;
      c.violations.push_back("(3): the cycle closed by edge " + pair_name(e.i, e.j) +
                             " has a product of k that is not a positive real");
      continue;
    }
    f.set_reciprocal(e.i, e.j, fij);
    l.set(e.i, e.j, lij);
    l.set(e.j, e.i, lji);
  }
  if (c.condition3) {
    c.f = std::move(f);
    c.l = std::move(l);
    c.potentials = std::move(pot);
  }
  return c;
}

GeneralizedCheck validate_generalized_weights(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l) {
  GeneralizedCheck c;
  for (const auto& v : validate_legal(g, f)) {
    c.condition2 = false;
    c.violations.push_back("(2): " + v.message);
  }
  for (const auto& msg : validate_coefficients(g, l)) {
    // product failures belong to (1), everything else to (2)
    if (msg.starts_with("l_ij l_ji")) {
      c.condition1 = false;
      c.violations.push_back("(1): " + msg);
    } else {
      c.condition2 = false;
      c.violations.push_back("(2): " + msg);
    }
  }
  if (!c.condition2) {
    c.violations.push_back("(3): not checked");
    return c;
  }
  const auto cert = check_balanced(g, f);
  if (const auto* u = std::get_if<Unbalanced>(&cert)) {
    c.condition3 = false;
    std::string path;
    for (Vertex v : u->cycle) path += (path.empty() ? "" : "-") + std::to_string(v + 1);
    c.violations.push_back("(3): cycle " + path + " has weight " + u->weight.to_string());
    return c;
  }
  c.potentials = std::get<Balanced>(cert).potentials;
  c.f = f;
  c.l = l;
  return c;
}

namespace {

std::string check_summary(const GeneralizedCheck& c) {
  std::string s = "generalized numbers game refused: conditions (1)-(3) fail";
  for (const auto& v : c.violations) s += "; " + v;
  return s;
}

}  // namespace

GeneralizedGameRefused::GeneralizedGameRefused(GeneralizedCheck check)
    : std::runtime_error(check_summary(check)), check_(std::move(check)) {}

NumbersGame NumbersGame::classical(const CoxeterGraph& g, const EdgeCoefficients& l) {
  const auto problems = validate_coefficients(g, l);
  if (!problems.empty()) throw std::invalid_argument("invalid edge coefficients: " + problems.front());
  return NumbersGame(g, standard_couplings(l), std::nullopt);
}

NumbersGame NumbersGame::classical(const CoxeterGraph& g) { return classical(g, EdgeCoefficients::symmetric(g)); }

NumbersGame NumbersGame::generalized(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l) {
  auto check = validate_generalized_weights(g, f, l);
  if (!check.ok()) throw GeneralizedGameRefused(std::move(check));
  return NumbersGame(g, generalized_couplings(f, l), std::move(check.potentials));
}

NumbersGame NumbersGame::generalized(const CoxeterGraph& g, const WeightFunction& f) {
  return generalized(g, f, EdgeCoefficients::symmetric(g));
}

NumbersGame NumbersGame::generalized(const CoxeterGraph& g, const Couplings& k) {
  auto check = validate_generalized_weights(g, k);
  if (!check.ok()) throw GeneralizedGameRefused(std::move(check));
  return NumbersGame(g, k, std::move(check.potentials));
}

RepMatrix NumbersGame::gauge() const {
  if (!potentials_) return identity<Cyclotomic>(graph_.vertex_count());
  return gauge_from_potentials(*potentials_);
}

Position NumbersGame::unit_start() const {
  Position p(graph_.vertex_count());
  for (Index i = 0; i < p.size(); ++i) p(i) = potentials_ ? (*potentials_)[static_cast<std::size_t>(i)] : Cyclotomic(1);
  return p;
}

PlayRecord NumbersGame::play(const Position& start, const Word& word) const {
  PlayRecord r;
  r.start = start;
  Position p = start;
  for (Vertex v : word) {
    check_vertex(graph_, v);
    r.moves.push_back({v, move_class(p, v)});
    p = fire(p, v);
    r.positions.push_back(p);
  }
  return r;
}

std::vector<Vertex> NumbersGame::descent_set(const Word& word) const {
  const Position p = play(word).final_position();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    const MoveClass c = move_class(p, v);
    if (c == MoveClass::negative || c == MoveClass::pseudo_negative) out.push_back(v);
  }
  return out;
}

bool NumbersGame::is_reduced(const Word& word) const { return play(word).all_positive(); }

Reachable NumbersGame::reachable_positions(const Position& start, std::size_t max_count) const {
  Reachable r;
  if (max_count == 0) {
    r.exhausted = true;
    return r;
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  r.positions.push_back(start);
  index[position_hash(start)].push_back(0);
  for (std::size_t k = 0; k < r.positions.size(); ++k)
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      Position next = fire(r.positions[k], v);
      auto& bucket = index[position_hash(next)];
      bool seen = false;
      for (std::size_t b : bucket) seen = seen || exactly_equal(r.positions[b], next);
      if (seen) continue;
      if (r.positions.size() >= max_count) {
        r.exhausted = true;
        return r;
      }
      bucket.push_back(r.positions.size());
      r.positions.push_back(std::move(next));
    }
  return r;
}

Position position_from_integers(const std::vector<long>& values) {
  Position p(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) p(static_cast<Index>(i)) = Cyclotomic(values[i]);
  return p;
}

ImoRun imo_pentagon_run(const std::vector<long>& start, std::size_t max_steps) {
  if (start.size() != 5) throw std::invalid_argument("the pentagon needs 5 values");
  long sum = 0;
  for (long v : start) sum += v;
  if (sum <= 0) throw std::invalid_argument("the values must have a positive sum");
  static const NumbersGame game = NumbersGame::classical(CoxeterGraph::cycle(5));
  ImoRun run;
  run.record.start = position_from_integers(start);
  Position p = run.record.start;
  for (;;) {
    Vertex target = -1;
    for (Vertex v = 0; v < 5 && target < 0; ++v)
      if (sign_of_real(p(v)) == Sign::negative) target = v;
    if (target < 0) {
      run.terminated = true;
      break;
    }
    if (run.record.moves.size() >= max_steps) break;
    run.record.moves.push_back({target, MoveClass::negative});
    p = game.fire(p, target);
    run.record.positions.push_back(p);
  }
  return run;
}

nlohmann::json play_to_json(const PlayRecord& r) {
  auto moves = nlohmann::json::array();
  for (std::size_t k = 0; k < r.moves.size(); ++k)
    moves.push_back({{"vertex", r.moves[k].vertex + 1},
                     {"class", to_string(r.moves[k].cls)},
                     {"position", position_to_json(r.positions[k])}});
  return {{"start", position_to_json(r.start)},
          {"moves", moves},
          {"final", position_to_json(r.final_position())},
          {"all_positive", r.all_positive()}};
}

std::string format_play(const PlayRecord& r) {
  std::ostringstream os;
  os << "start " << format_position(r.start) << "\n";
  for (std::size_t k = 0; k < r.moves.size(); ++k)
    os << "fire " << r.moves[k].vertex + 1 << " [" << to_string(r.moves[k].cls) << "] -> "
       << format_position(r.positions[k]) << "\n";
  return os.str();
}

}  // namespace wcg
