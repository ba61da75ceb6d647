#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wcg/cyclotomic.hpp"
#include "wcg/matrix.hpp"

namespace wcg {

/// Vertex index, zero-based internally (s_{v+1} in the usual notation).
using Vertex = int;
using VertexPath = std::vector<Vertex>;

/// Coxeter label m_ij: an integer >= 2 or infinity.
class Label {
 public:
  explicit Label(int m);
  static Label infinite() { return Label(); }
  static Label parse(std::string_view text);

  bool is_infinite() const { return m_ == 0; }
  int value() const;
  std::string to_string() const;

  friend bool operator==(Label, Label) = default;

 private:
  Label() : m_(0) {}
  int m_;
};

struct Edge {
  Vertex i;  // i < j
  Vertex j;
  Label m;
};

/// Simple graph on n vertices whose edges carry Coxeter labels m >= 3 or
/// infinity. Absent pairs commute (m = 2).
class CoxeterGraph {
 public:
  explicit CoxeterGraph(int n = 0);

  void add_edge(Vertex i, Vertex j, Label m = Label(3));

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool adjacent(Vertex i, Vertex j) const;
  Label label(Vertex i, Vertex j) const;
  bool simply_laced() const;
  std::vector<std::vector<Vertex>> components() const;

  static CoxeterGraph chain(int n, Label m = Label(3));
  static CoxeterGraph cycle(int n, Label m = Label(3));

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Weights on directed edges, f((s_i, s_j)).
class WeightFunction {
 public:
  void set(Vertex i, Vertex j, Cyclotomic w) { weights_[{i, j}] = std::move(w); }
  /// Sets f(i, j) = w and f(j, i) = w^{-1}.
  void set_reciprocal(Vertex i, Vertex j, const Cyclotomic& w);
  const Cyclotomic* find(Vertex i, Vertex j) const;
  const Cyclotomic& at(Vertex i, Vertex j) const;
  const std::map<std::pair<Vertex, Vertex>, Cyclotomic>& entries() const { return weights_; }

  static WeightFunction unit(const CoxeterGraph& g);
  /// Forward weights listed in edge order, reverse orientations inverted.
  static WeightFunction from_edge_weights(const CoxeterGraph& g, const std::vector<Cyclotomic>& forward);

 private:
  std::map<std::pair<Vertex, Vertex>, Cyclotomic> weights_;
};

struct LegalityViolation {
  enum class Kind { undefined_edge, undefined_reverse_edge, not_reciprocal, zero_weight, not_an_edge };
  Vertex i;
  Vertex j;
  Kind kind;
  std::string message;
};

/// Every violation of f((s_i,s_j)) f((s_j,s_i)) = 1 on exactly the edge set.
std::vector<LegalityViolation> validate_legal(const CoxeterGraph& g, const WeightFunction& f);

struct Balanced {
  /// f((s_i, s_j)) = potentials[j] / potentials[i]; each origin has potential 1.
  std::vector<Cyclotomic> potentials;
  std::vector<Vertex> origins;
};

struct Unbalanced {
  VertexPath cycle;  // closed: the last vertex connects back to the first
  Cyclotomic weight;
};

using BalanceCertificate = std::variant<Balanced, Unbalanced>;

BalanceCertificate check_balanced(const CoxeterGraph& g, const WeightFunction& f);
bool verify_certificate(const CoxeterGraph& g, const WeightFunction& f, const Balanced& cert);
bool verify_certificate(const CoxeterGraph& g, const WeightFunction& f, const Unbalanced& cert);

/// Product of f along consecutive vertices of `path`.
Cyclotomic path_weight(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& path);
/// Product of f around the closed walk cycle[0] -> ... -> cycle.back() -> cycle[0].
Cyclotomic cycle_weight(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& cycle);

struct GatheredCycle {
  /// Weights on the cycle relabelled 0..n-1 in traversal order: 1 everywhere
  /// except f(n-1, 0) = total.
  WeightFunction gathered;
  /// diag(1, a_1, a_1 a_2, ..., a_1 ... a_{n-1}) with J w_i(f) J^{-1} = w_i(h).
  RepMatrix gauge;
  Cyclotomic total;
};

/// Requires g to be the cycle 0 - 1 - ... - (n-1) - 0.
GatheredCycle gather_cycle(const CoxeterGraph& g, const WeightFunction& f);
/// Gathers along an arbitrary closed path of g.
GatheredCycle gather_cycle(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& cycle);

/// One cycle per non-tree edge of the breadth-first spanning forest rooted at
/// the lowest vertex of each component.
std::vector<VertexPath> fundamental_cycles(const CoxeterGraph& g);

/// Induced (chordless) cycles of length >= 3, each listed once, at most `limit`.
std::vector<VertexPath> chordless_cycles(const CoxeterGraph& g, std::size_t limit = 10000);

/// If g is a single cycle through every vertex, its traversal order from vertex 0.
std::optional<VertexPath> as_single_cycle(const CoxeterGraph& g);

/// Subgraph induced on `vertices`, relabelled in the given order.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, const VertexPath& vertices);

}  // namespace wcg
