#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wcg/geometric_rep.hpp"
#include "wcg/graph.hpp"

namespace wcg {

enum class MoveClass { positive, negative, zero, pseudo_positive, pseudo_negative, nonreal };

std::string to_string(MoveClass c);

/// p'_v = -p_v, p'_u = p_u + k(v,u) p_v for neighbours u: the action of the
/// transposed generator of v.
Position fire(const CoxeterGraph& g, const Couplings& k, const Position& p, Vertex v);

/// Classical class from the sign of p_v; with potentials, the class of
/// (J p)_v = p_v / pot_v, J = diag(pot)^{-1}.
MoveClass move_class(const Position& p, Vertex v, const std::vector<Cyclotomic>* potentials = nullptr);

struct Move {
  Vertex vertex;
  MoveClass cls;
};

struct PlayRecord {
  Position start;
  std::vector<Move> moves;
  std::vector<Position> positions;  // positions[k] follows moves[k]

  const Position& final_position() const { return positions.empty() ? start : positions.back(); }
  /// Every move positive (classical) or pseudo-positive (generalized).
  bool all_positive() const;
};

/// Result of checking conditions (1)-(3) for a generalized game.
struct GeneralizedCheck {
  bool condition1 = true;  // k_ij k_ji = 4cos^2(pi/m), or >= 4 for m = inf
  bool condition2 = true;  // k = f l with f f' = 1 and l, l' positive real
  bool condition3 = true;  // f multiplies to 1 around every cycle
  std::vector<std::string> violations;
  /// A witnessing decomposition when all three hold.
  std::optional<WeightFunction> f;
  std::optional<EdgeCoefficients> l;
  std::vector<Cyclotomic> potentials;

  bool ok() const { return condition1 && condition2 && condition3; }
};

GeneralizedCheck validate_generalized_weights(const CoxeterGraph& g, const Couplings& k);
GeneralizedCheck validate_generalized_weights(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l);

class GeneralizedGameRefused : public std::runtime_error {
 public:
  explicit GeneralizedGameRefused(GeneralizedCheck check);
  const GeneralizedCheck& check() const { return check_; }

 private:
  GeneralizedCheck check_;
};

struct Reachable {
  std::vector<Position> positions;
  bool exhausted = false;  // budget hit before closure
};

/// A numbers game on a fixed graph with fixed k. Classical games carry no
/// potentials; generalized games carry the balanced potentials of f.
class NumbersGame {
 public:
  static NumbersGame classical(const CoxeterGraph& g, const EdgeCoefficients& l);
  static NumbersGame classical(const CoxeterGraph& g);
  /// Throws GeneralizedGameRefused when conditions (1)-(3) fail.
  static NumbersGame generalized(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l);
  static NumbersGame generalized(const CoxeterGraph& g, const WeightFunction& f);
  static NumbersGame generalized(const CoxeterGraph& g, const Couplings& k);

  const CoxeterGraph& graph() const { return graph_; }
  const Couplings& couplings() const { return k_; }
  bool is_generalized() const { return potentials_.has_value(); }
  const std::vector<Cyclotomic>* potentials() const { return potentials_ ? &*potentials_ : nullptr; }

  /// J = diag(potentials)^{-1}; identity for classical games.
  RepMatrix gauge() const;
  /// The unit position 1, or J^{-1} 1 for generalized games.
  Position unit_start() const;

  Position fire(const Position& p, Vertex v) const { return wcg::fire(graph_, k_, p, v); }
  MoveClass move_class(const Position& p, Vertex v) const { return wcg::move_class(p, v, potentials()); }
  PlayRecord play(const Position& start, const Word& word) const;
  PlayRecord play(const Word& word) const { return play(unit_start(), word); }

  /// Vertices whose gauge-corrected coordinate after `word` is negative.
  std::vector<Vertex> descent_set(const Word& word) const;
  /// Positivity criterion from the unit-equivalent start.
  bool is_reduced(const Word& word) const;
  Reachable reachable_positions(const Position& start, std::size_t max_count) const;

 private:
  NumbersGame(CoxeterGraph g, Couplings k, std::optional<std::vector<Cyclotomic>> pot)
      : graph_(std::move(g)), k_(std::move(k)), potentials_(std::move(pot)) {}

  CoxeterGraph graph_;
  Couplings k_;
  std::optional<std::vector<Cyclotomic>> potentials_;
};

struct ImoRun {
  PlayRecord record;
  bool terminated = false;
};

/// Pentagon with k = 1; fires the lowest-index negative vertex until all
/// values are nonnegative or max_steps firings were made.
ImoRun imo_pentagon_run(const std::vector<long>& start, std::size_t max_steps);

Position position_from_integers(const std::vector<long>& values);

nlohmann::json play_to_json(const PlayRecord& r);
std::string format_play(const PlayRecord& r);

}  // namespace wcg
