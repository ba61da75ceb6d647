#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wcg/graph.hpp"
#include "wcg/matrix.hpp"

namespace wcg {

using Word = std::vector<Vertex>;

/// Positive real l_ij on directed edges; the generator entry is f(i,j) * l_ij.
class EdgeCoefficients {
 public:
  /// l_ij = l_ji = 2cos(pi/m), and 2 for m = inf.
  static EdgeCoefficients symmetric(const CoxeterGraph& g);
  /// Integer table: m = 4 gives (2, 1), m = 6 gives (3, 1) with the larger
  /// value on the lower-to-higher orientation, m = inf gives (2, 2). Other
  /// labels keep the symmetric value.
  static EdgeCoefficients integral(const CoxeterGraph& g);

  void set(Vertex i, Vertex j, Cyclotomic l) { values_[{i, j}] = std::move(l); }
  const Cyclotomic& at(Vertex i, Vertex j) const;
  const std::map<std::pair<Vertex, Vertex>, Cyclotomic>& entries() const { return values_; }

 private:
  std::map<std::pair<Vertex, Vertex>, Cyclotomic> values_;
};

/// Problems with l: missing orientations, non-positive entries, wrong products.
std::vector<std::string> validate_coefficients(const CoxeterGraph& g, const EdgeCoefficients& l);

/// k_ij on directed edges; the row i of generator i holds k_ij.
using Couplings = std::map<std::pair<Vertex, Vertex>, Cyclotomic>;

Couplings standard_couplings(const EdgeCoefficients& l);
/// k_ij = f(i,j) * l_ij.
Couplings generalized_couplings(const WeightFunction& f, const EdgeCoefficients& l);

GeneratorSet generators_from_couplings(const CoxeterGraph& g, const Couplings& k);
GeneratorSet standard_generators(const CoxeterGraph& g, const EdgeCoefficients& l);
GeneratorSet standard_generators(const CoxeterGraph& g);
GeneratorSet generalized_generators(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l);
GeneratorSet generalized_generators(const CoxeterGraph& g, const WeightFunction& f);

struct RelationReport {
  std::size_t relations_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// g_i^2 = I, (g_i g_j)^m = I for finite m, (g_i g_j)^k != I for k <= bound when m = inf.
RelationReport verify_coxeter_relations(const GeneratorSet& gens, const CoxeterGraph& g,
                                        int infinite_check_bound = 20);

RepMatrix evaluate_word(const GeneratorSet& gens, const Word& word);

/// Equality in W, decided through the (faithful) standard representation.
bool words_equal_in_group(const CoxeterGraph& g, const Word& w1, const Word& w2);

/// diag(potentials)^{-1}, so that J sigma_i J^{-1} = omega_i for f(i,j) = pot_j / pot_i.
RepMatrix gauge_from_potentials(const std::vector<Cyclotomic>& potentials);
GeneratorSet gauge_conjugate(const RepMatrix& j, const GeneratorSet& gens);

}  // namespace wcg
