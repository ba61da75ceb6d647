#include "wcg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace wcg {

Label::Label(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("Coxeter label must be >= 2, got " + std::to_string(m));
}

Label Label::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinite();
  int m = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || m > 100000) throw std::invalid_argument("bad Coxeter label \"" + std::string(text) + "\"");
    m = m * 10 + (c - '0');
  }
  if (text.empty()) throw std::invalid_argument("empty Coxeter label");
  return Label(m);
}

int Label::value() const {
  if (is_infinite()) throw std::domain_error("infinite label has no integer value");
  return m_;
}

std::string Label::to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

CoxeterGraph::CoxeterGraph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

void CoxeterGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(vertex_count()));
}

void CoxeterGraph::add_edge(Vertex i, Vertex j, Label m) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i + 1));
  if (!m.is_infinite() && m.value() < 3)
    throw std::invalid_argument("edge label must be >= 3 or inf (m = 2 means no edge)");
  if (adjacent(i, j))
    throw std::invalid_argument("duplicate edge {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
  if (i > j) std::swap(i, j);
  const Edge e{i, j, m};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e,
                                 [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); }),
                e);
  auto& ni = adjacency_[static_cast<std::size_t>(i)];
  auto& nj = adjacency_[static_cast<std::size_t>(j)];
  ni.insert(std::upper_bound(ni.begin(), ni.end(), j), j);
  nj.insert(std::upper_bound(nj.begin(), nj.end(), i), i);
}

const std::vector<Vertex>& CoxeterGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

bool CoxeterGraph::adjacent(Vertex i, Vertex j) const {
  const auto& n = neighbors(i);
  return std::binary_search(n.begin(), n.end(), j);
}

Label CoxeterGraph::label(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges_)
    if (e.i == i && e.j == j) return e.m;
  return Label(2);
}

bool CoxeterGraph::simply_laced() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.m == Label(3); });
}

std::vector<std::vector<Vertex>> CoxeterGraph::components() const {
  std::vector<int> seen(adjacency_.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Vertex w : neighbors(comp[k]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

CoxeterGraph CoxeterGraph::chain(int n, Label m) {
  CoxeterGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, m);
  return g;
}

CoxeterGraph CoxeterGraph::cycle(int n, Label m) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  CoxeterGraph g = chain(n, m);
  g.add_edge(n - 1, 0, m);
  return g;
}

void WeightFunction::set_reciprocal(Vertex i, Vertex j, const Cyclotomic& w) {
  set(i, j, w);
  set(j, i, w.inverse());
}

const Cyclotomic* WeightFunction::find(Vertex i, Vertex j) const {
  auto it = weights_.find({i, j});
  return it == weights_.end() ? nullptr : &it->second;
}

const Cyclotomic& WeightFunction::at(Vertex i, Vertex j) const {
  if (const auto* w = find(i, j)) return *w;
  throw std::out_of_range("weight undefined on directed edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

WeightFunction WeightFunction::unit(const CoxeterGraph& g) {
  WeightFunction f;
  for (const auto& e : g.edges()) {
    f.set(e.i, e.j, 1);
    f.set(e.j, e.i, 1);
  }
  return f;
}

WeightFunction WeightFunction::from_edge_weights(const CoxeterGraph& g, const std::vector<Cyclotomic>& forward) {
  if (forward.size() != g.edges().size()) throw std::invalid_argument("one weight per edge required");
  WeightFunction f;
  for (std::size_t k = 0; k < forward.size(); ++k) f.set_reciprocal(g.edges()[k].i, g.edges()[k].j, forward[k]);
  return f;
}

std::vector<LegalityViolation> validate_legal(const CoxeterGraph& g, const WeightFunction& f) {
  using Kind = LegalityViolation::Kind;
  std::vector<LegalityViolation> out;
  auto name = [](Vertex i, Vertex j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (const auto& e : g.edges()) {
    const auto* fw = f.find(e.i, e.j);
    const auto* bw = f.find(e.j, e.i);
    if (!fw && !bw) {
      out.push_back({e.i, e.j, Kind::undefined_edge, "no weight on edge " + name(e.i, e.j)});
      continue;
    }
    if (!fw || !bw) {
      const Vertex a = fw ? e.j : e.i, b = fw ? e.i : e.j;
      out.push_back({a, b, Kind::undefined_reverse_edge, "undefined reverse edge " + name(a, b)});
      continue;
    }
    if (fw->is_zero() || bw->is_zero()) {
      out.push_back({e.i, e.j, Kind::zero_weight, "zero weight on edge " + name(e.i, e.j)});
      continue;
    }
    if (!(*fw * *bw).is_one())
      out.push_back({e.i, e.j, Kind::not_reciprocal,
                     "f" + name(e.i, e.j) + " * f" + name(e.j, e.i) + " = " + (*fw * *bw).to_string() + " != 1"});
  }
  for (const auto& [key, w] : f.entries()) {
    const auto [i, j] = key;
    const bool in_range = i >= 0 && j >= 0 && i < g.vertex_count() && j < g.vertex_count() && i != j;
    if (!in_range || !g.adjacent(i, j))
      out.push_back({i, j, Kind::not_an_edge, "weight given on non-edge " + name(i, j)});
  }
  return out;
}

namespace {

struct Forest {
  std::vector<Vertex> parent;  // -1 at roots
  std::vector<int> depth;
  std::vector<Vertex> origins;
  std::vector<Vertex> order;  // breadth-first visiting order
};

Forest bfs_forest(const CoxeterGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Forest fo{std::vector<Vertex>(n, -1), std::vector<int>(n, -1), {}, {}};
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (fo.depth[static_cast<std::size_t>(s)] >= 0) continue;
    fo.origins.push_back(s);
    fo.depth[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      fo.order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (fo.depth[static_cast<std::size_t>(w)] >= 0) continue;
        fo.depth[static_cast<std::size_t>(w)] = fo.depth[static_cast<std::size_t>(u)] + 1;
        fo.parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  return fo;
}

bool is_tree_edge(const Forest& fo, Vertex u, Vertex v) {
  return fo.parent[static_cast<std::size_t>(u)] == v || fo.parent[static_cast<std::size_t>(v)] == u;
}

// Closed walk lca -> ... -> u -> v -> ... -> (child of lca) through the tree.
VertexPath tree_cycle(const Forest& fo, Vertex u, Vertex v) {
  VertexPath up_u{u}, up_v{v};
  Vertex a = u, b = v;
  while (fo.depth[static_cast<std::size_t>(a)] > fo.depth[static_cast<std::size_t>(b)]) up_u.push_back(a = fo.parent[static_cast<std::size_t>(a)]);
  while (fo.depth[static_cast<std::size_t>(b)] > fo.depth[static_cast<std::size_t>(a)]) up_v.push_back(b = fo.parent[static_cast<std::size_t>(b)]);
  while (a != b) {
    up_u.push_back(a = fo.parent[static_cast<std::size_t>(a)]);
    up_v.push_back(b = fo.parent[static_cast<std::size_t>(b)]);
  }
  // up_u ends at the lca; so does up_v.
  VertexPath cycle(up_u.rbegin(), up_u.rend());
  cycle.insert(cycle.end(), up_v.begin(), up_v.end() - 1);
  return cycle;
}

void require_legal(const CoxeterGraph& g, const WeightFunction& f) {
  const auto v = validate_legal(g, f);
  if (!v.empty()) throw std::invalid_argument("weight function is not legal: " + v.front().message);
}

}  // namespace

BalanceCertificate check_balanced(const CoxeterGraph& g, const WeightFunction& f) {
  require_legal(g, f);
  const Forest fo = bfs_forest(g);
  std::vector<Cyclotomic> pot(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v : fo.order) {
    const Vertex p = fo.parent[static_cast<std::size_t>(v)];
    pot[static_cast<std::size_t>(v)] = p < 0 ? Cyclotomic(1) : pot[static_cast<std::size_t>(p)] * f.at(p, v);
  }
  for (const auto& e : g.edges()) {
    if (is_tree_edge(fo, e.i, e.j)) continue;
    if (f.at(e.i, e.j) * pot[static_cast<std::size_t>(e.i)] == pot[static_cast<std::size_t>(e.j)]) continue;
    VertexPath cycle = tree_cycle(fo, e.i, e.j);
    Cyclotomic w = cycle_weight(g, f, cycle);
    return Unbalanced{std::move(cycle), std::move(w)};
  }
  return Balanced{std::move(pot), fo.origins};
}

bool verify_certificate(const CoxeterGraph& g, const WeightFunction& f, const Balanced& cert) {
  if (cert.potentials.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (const auto& p : cert.potentials)
    if (p.is_zero()) return false;
  for (Vertex o : cert.origins)
    if (o < 0 || o >= g.vertex_count() || !cert.potentials[static_cast<std::size_t>(o)].is_one()) return false;
  for (const auto& [key, w] : f.entries()) {
    const auto [i, j] = key;
    if (!(w * cert.potentials[static_cast<std::size_t>(i)] == cert.potentials[static_cast<std::size_t>(j)])) return false;
  }
  return validate_legal(g, f).empty();
}

bool verify_certificate(const CoxeterGraph& g, const WeightFunction& f, const Unbalanced& cert) {
  if (cert.cycle.size() < 3 || cert.weight.is_one()) return false;
  try {
    return cycle_weight(g, f, cert.cycle) == cert.weight;
  } catch (const std::exception&) {
    return false;
  }
}

Cyclotomic path_weight(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& path) {
  Cyclotomic w(1);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Vertex a = path[k], b = path[k + 1];
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b))
      throw std::invalid_argument("vertices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " are not adjacent");
    w *= f.at(a, b);
  }
  return w;
}

Cyclotomic cycle_weight(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& cycle) {
  if (cycle.empty()) return 1;
  VertexPath closed = cycle;
  closed.push_back(cycle.front());
  return path_weight(g, f, closed);
}

GatheredCycle gather_cycle(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& cycle) {
  const auto n = cycle.size();
  if (n < 3) throw std::invalid_argument("gathering needs a cycle of length >= 3");
  std::vector<Cyclotomic> partial{Cyclotomic(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) partial.push_back(partial.back() * path_weight(g, f, {cycle[k], cycle[k + 1]}));
  const Cyclotomic total = partial.back() * path_weight(g, f, {cycle[n - 1], cycle[0]});
  WeightFunction h;
  const auto m = static_cast<Vertex>(n);
  for (Vertex k = 0; k + 1 < m; ++k) h.set_reciprocal(k, k + 1, 1);
  h.set_reciprocal(m - 1, 0, total);
  return {std::move(h), diagonal(partial), total};
}

GatheredCycle gather_cycle(const CoxeterGraph& g, const WeightFunction& f) {
  const int n = g.vertex_count();
  bool ok = n >= 3 && static_cast<int>(g.edges().size()) == n;
  for (int i = 0; ok && i < n; ++i) ok = g.adjacent(i, (i + 1) % n);
  if (!ok) throw std::invalid_argument("graph is not the single cycle s1 - s2 - ... - sn - s1");
  VertexPath order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return gather_cycle(g, f, order);
}

std::vector<VertexPath> fundamental_cycles(const CoxeterGraph& g) {
  const Forest fo = bfs_forest(g);
  std::vector<VertexPath> out;
  for (const auto& e : g.edges())
    if (!is_tree_edge(fo, e.i, e.j)) out.push_back(tree_cycle(fo, e.i, e.j));
  return out;
}

std::vector<VertexPath> chordless_cycles(const CoxeterGraph& g, std::size_t limit) {
  std::vector<VertexPath> out;
  VertexPath path;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);

  // Every internal vertex of `path` is adjacent only to its two path neighbours.
  std::function<void()> extend = [&] {
    const Vertex s = path.front(), last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (out.size() >= limit) return;
      if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k) chord = g.adjacent(w, path[k]);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, s)) {
        if (path[1] < w) {
          out.push_back(path);
          out.back().push_back(w);
        }
        continue;
      }
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = 1;
      extend();
      on_path[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < g.vertex_count() && out.size() < limit; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    extend();
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

std::optional<VertexPath> as_single_cycle(const CoxeterGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || static_cast<int>(g.edges().size()) != n) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v).size() != 2) return std::nullopt;
  VertexPath order{0};
  Vertex prev = -1, cur = 0;
  for (;;) {
    const auto& nb = g.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, const VertexPath& vertices) {
  CoxeterGraph sub(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.adjacent(vertices[a], vertices[b]))
        sub.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b), g.label(vertices[a], vertices[b]));
  return sub;
}

}  // namespace wcg
