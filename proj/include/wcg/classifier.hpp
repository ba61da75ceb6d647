#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "wcg/geometric_rep.hpp"
#include "wcg/graph.hpp"

namespace wcg {

/// J, t_1..t_{n-1}, A for the gathered n-cycle with weight a on (s_n, s_1):
/// J w_i = t_i J for i < n and J w_n = A J. J is invertible iff a != 1.
struct MonomialWitness {
  int n = 0;
  Cyclotomic a;
  RepMatrix j;
  GeneratorSet t;  // t_1 .. t_{n-1}
  RepMatrix big_a;
  bool j_invertible = false;

  /// t_1, ..., t_{n-1}, A in that order.
  GeneratorSet generators() const;
};

/// Builds and checks the witness; throws std::logic_error if a check fails.
MonomialWitness monomial_witness(int n, const Cyclotomic& a);

/// w_1..w_n of the n-cycle carrying weight a on (s_n, s_1) and 1 elsewhere.
GeneratorSet gathered_cycle_generators(int n, const Cyclotomic& a);

/// m^{n-1} n!
mpz_class quotient_order(int n, std::uint64_t m);

struct FaithfulBalanced {
  Balanced certificate;
  RepMatrix gauge;  // J sigma_i J^{-1} = omega_i
};

struct NotFaithful {
  VertexPath cycle;  // induced simply-laced cycle
  Cyclotomic a;      // its weight
  std::uint64_t order = 0;
  mpz_class quotient_order;
  GatheredCycle gathered;  // along `cycle`, relabelled 0..c-1
  MonomialWitness witness;
  /// c^kernel_power for the cycle's Coxeter element c = s_{cycle[0]} ... s_{cycle.back()}:
  /// omega(c)^d = I on the whole graph while c has infinite order in W.
  Word kernel_word;
  std::uint64_t kernel_power = 0;
};

struct FaithfulAffineCycle {
  VertexPath cycle;
  int n = 0;
  Cyclotomic a;
};

struct ProbedCycle {
  VertexPath cycle;
  Cyclotomic weight;
  Order order;
};

struct ProbedProduct {
  std::vector<int> exponents;  // one per fundamental cycle
  Cyclotomic weight;
  std::uint64_t order = 0;
};

struct Unknown {
  std::vector<ProbedCycle> fundamental;
  std::vector<ProbedCycle> induced;
  /// Finite-order products of fundamental cycle weights that no induced
  /// simply-laced cycle realizes.
  std::vector<ProbedProduct> finite_products;
  std::size_t products_probed = 0;
  std::string reason;
};

using Verdict = std::variant<FaithfulBalanced, NotFaithful, FaithfulAffineCycle, Unknown>;

struct ClassifyOptions {
  int probe_bound = 6;
  int probe_max_nonzero = 3;
  std::size_t cycle_limit = 10000;
};

Verdict classify(const CoxeterGraph& g, const WeightFunction& f, const ClassifyOptions& options = {});

/// Re-checks the certificate carried by a verdict against (g, f).
bool verify_verdict(const CoxeterGraph& g, const WeightFunction& f, const Verdict& v);

std::string verdict_name(const Verdict& v);
nlohmann::json verdict_to_json(const Verdict& v);
std::string format_verdict(const Verdict& v);

nlohmann::json path_to_json(const VertexPath& p);  // 1-based

}  // namespace wcg
