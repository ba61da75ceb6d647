// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any fail.
//
//   acceptance [path/to/printed_matrices.json]

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "wcg/classifier.hpp"
#include "wcg/group_enum.hpp"
#include "wcg/io.hpp"

using namespace wcg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // first few failures, printed indented

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

const std::vector<std::string> kWeightPool{"1", "-1", "zeta(3)", "-zeta(3)", "zeta(4)", "2", "1/2"};

Cyclotomic pick(std::mt19937& rng, const std::vector<std::string>& pool) {
  return parse_scalar(pool[rng() % pool.size()]);
}

// ---------------------------------------------------------------------------

Outcome coxeter_relations() {
  std::mt19937 rng(20240611);
  const std::vector<std::string> labels{"2", "3", "4", "5", "6", "inf"};
  auto random_label = [&](bool allow_two) {
    for (;;) {
      const auto& s = labels[rng() % labels.size()];
      if (s != "2" || allow_two) return s;
    }
  };
  struct Named {
    std::string kind;
    CoxeterGraph g;
  };
  std::vector<Named> graphs;
  // one chain walking through every label, then random chains (m = 2 drops the edge)
  {
    CoxeterGraph g(7);
    for (int i = 0; i < 6; ++i)
      if (labels[i] != "2") g.add_edge(i, i + 1, Label::parse(labels[i]));
    graphs.push_back({"chain", g});
  }
  for (int k = 0; k < 7; ++k) {
    const int n = 2 + k % 5;
    CoxeterGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
      if (auto s = random_label(true); s != "2") g.add_edge(i, i + 1, Label::parse(s));
    graphs.push_back({"chain", g});
  }
  for (int n = 3; n <= 8; ++n) {
    CoxeterGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, Label::parse(random_label(false)));
    graphs.push_back({"cycle", g});
  }
  for (int k = 0; k < 6; ++k) {
    const int n = 4 + k % 4;
    CoxeterGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v, Label::parse(random_label(false)));
    graphs.push_back({"tree", g});
  }
  {
    CoxeterGraph g(5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, Label::parse(random_label(false)));
    g.add_edge(0, 2, Label::parse(random_label(false)));
    graphs.push_back({"chorded cycle", g});
  }

  Outcome out;
  std::size_t relations = 0;
  std::set<std::string> seen_labels;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const auto& g = graphs[k].g;
    WeightFunction f;
    for (const auto& e : g.edges()) {
      f.set_reciprocal(e.i, e.j, pick(rng, kWeightPool));
      seen_labels.insert(e.m.to_string());
    }
    // pairs without an edge are m = 2
    if (static_cast<int>(g.edges().size()) < g.vertex_count() * (g.vertex_count() - 1) / 2) seen_labels.insert("2");
    const auto report = verify_coxeter_relations(generalized_generators(g, f), g);
    relations += report.relations_checked;
    for (const auto& failure : report.failures) out.fail(graphs[k].kind + " #" + std::to_string(k) + ": " + failure);
  }
  if (seen_labels.size() != labels.size()) out.fail("label coverage incomplete");
  out.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(relations) +
               " relations checked exactly, labels {2,3,4,5,6,inf} covered";
  return out;
}

// ---------------------------------------------------------------------------

// "-a^-1", "abc", "(abcd)^-1", "0", "-1"
Cyclotomic monomial(const std::string& text, const std::map<char, Cyclotomic>& symbols) {
  std::string s = text;
  bool negative = false, inverse = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  if (s.size() > 3 && s.ends_with("^-1")) {
    inverse = true;
    s.resize(s.size() - 3);
  }
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Cyclotomic v(1);
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) {
    v = parse_scalar(s);
  } else {
    for (char c : s) v = v * symbols.at(c);
  }
  if (inverse) v = v.inverse();
  return negative ? Cyclotomic(-v) : v;
}

RepMatrix fixture_matrix(const nlohmann::json& rows, const std::map<char, Cyclotomic>& symbols) {
  const auto n = static_cast<Index>(rows.size());
  RepMatrix m(n, static_cast<Index>(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = monomial(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], symbols);
  return m;
}

Outcome printed_matrices(const std::string& path) {
  Outcome out;
  std::ifstream in(path);
  if (!in) {
    out.fail("cannot open " + path);
    return out;
  }
  const auto fx = nlohmann::json::parse(in);
  int compared = 0;
  auto section = [&](const char* name) {
    std::map<char, Cyclotomic> sym;
    for (const auto& [k, v] : fx[name]["symbols"].items()) sym[k[0]] = parse_scalar(v.get<std::string>());
    return std::make_pair(fx[name], sym);
  };
  auto expect = [&](const std::string& what, const RepMatrix& got, const RepMatrix& want) {
    ++compared;
    if (!exactly_equal(got, want)) out.fail(what + " differs:\n" + format_matrix(got) + "expected\n" + format_matrix(want));
  };

  {
    auto [s, sym] = section("s4_chain");
    const auto g = CoxeterGraph::chain(3);
    WeightFunction f;
    f.set_reciprocal(0, 1, sym.at('a'));
    f.set_reciprocal(1, 2, sym.at('b'));
    const auto w = generalized_generators(g, f);
    for (int i = 0; i < 3; ++i) {
      const std::string key = "omega" + std::to_string(i + 1);
      expect("S4 " + key, w[static_cast<std::size_t>(i)], fixture_matrix(s[key], sym));
    }
  }
  {
    auto [s, sym] = section("six_vertex");
    const auto file = parse_graph(*preset_text("six-vertex-signed"));
    const auto sigma = standard_generators(file.graph);
    const auto omega = generalized_generators(file.graph, file.weights);
    const auto cert = check_balanced(file.graph, file.weights);
    const RepMatrix want_j = fixture_matrix(s["J"], sym);
    if (!std::holds_alternative<Balanced>(cert)) {
      out.fail("six-vertex example not balanced");
    } else {
      const RepMatrix j = gauge_from_potentials(std::get<Balanced>(cert).potentials);
      expect("six-vertex J", j, want_j);
      expect("six-vertex sigma2", sigma[1], fixture_matrix(s["sigma2"], sym));
      expect("six-vertex omega2", omega[1], fixture_matrix(s["omega2"], sym));
      expect("six-vertex J sigma2 J^-1", (want_j * fixture_matrix(s["sigma2"], sym) * inverse_exact(want_j)).eval(),
             fixture_matrix(s["omega2"], sym));
      for (std::size_t i = 0; i < 6; ++i)
        expect("six-vertex J sigma" + std::to_string(i + 1) + " J^-1", (j * sigma[i] * inverse_exact(j)).eval(), omega[i]);
    }
  }
  {
    auto [s, sym] = section("gathering");
    const auto g = CoxeterGraph::cycle(4);
    WeightFunction f;
    f.set_reciprocal(0, 1, sym.at('a'));
    f.set_reciprocal(1, 2, sym.at('b'));
    f.set_reciprocal(2, 3, sym.at('c'));
    f.set_reciprocal(3, 0, sym.at('d'));
    const auto w = generalized_generators(g, f);
    const auto gathered = gather_cycle(g, f);
    expect("gathering J", gathered.gauge, fixture_matrix(s["J"], sym));
    const auto tilde = conjugate(gathered.gauge, w);
    const auto h = generalized_generators(g, gathered.gathered);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto k = std::to_string(i + 1);
      expect("gathering omega" + k, w[i], fixture_matrix(s["omega" + k], sym));
      expect("gathering J omega" + k + " J^-1", tilde[i], fixture_matrix(s["tilde" + k], sym));
      expect("gathered-graph omega" + k, h[i], fixture_matrix(s["tilde" + k], sym));
    }
  }
  {
    auto [s, sym] = section("four_cycle");
    const Cyclotomic a = sym.at('a');
    const auto witness = monomial_witness(4, a);
    const auto omega = gathered_cycle_generators(4, a);
    expect("four-cycle J", witness.j, fixture_matrix(s["J"], sym));
    expect("four-cycle A", witness.big_a, fixture_matrix(s["A"], sym));
    const auto conj = conjugate(witness.j, omega);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto k = std::to_string(i + 1);
      expect("four-cycle omega" + k, omega[i], fixture_matrix(s["omega" + k], sym));
      if (i < 3) {
        expect("four-cycle t" + k, witness.t[i], fixture_matrix(s["t" + k], sym));
        expect("four-cycle J omega" + k + " J^-1", conj[i], fixture_matrix(s["t" + k], sym));
      } else {
        expect("four-cycle J omega4 J^-1", conj[i], fixture_matrix(s["A"], sym));
      }
    }
  }
  out.detail = std::to_string(compared) + " printed matrices and identities reproduced exactly";
  return out;
}

// ---------------------------------------------------------------------------

Outcome mainsign() {
  struct Case {
    std::string name;
    CoxeterGraph g;
  };
  std::vector<Case> cases;
  cases.push_back({"4-cycle", CoxeterGraph::cycle(4)});
  {
    auto g = CoxeterGraph::cycle(4);
    g.add_edge(0, 2);
    cases.push_back({"4-cycle with chord", g});
  }
  {
    // hubs 1 and 6 joined by the paths 1-2-6, 1-3-4-6, 1-5-6
    CoxeterGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 5);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 5);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    cases.push_back({"theta", g});
  }
  Outcome out;
  std::size_t assignments = 0, balanced = 0, witnesses = 0;
  std::map<std::size_t, std::size_t> orders;  // cycle length -> witness order seen
  for (const auto& c : cases) {
    const auto m = c.g.edges().size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      ++assignments;
      std::vector<Cyclotomic> signs;
      for (std::size_t e = 0; e < m; ++e) signs.push_back((mask >> e) & 1 ? Cyclotomic(-1) : Cyclotomic(1));
      const auto f = WeightFunction::from_edge_weights(c.g, signs);
      const auto tag = c.name + " mask " + std::to_string(mask);
      const bool is_balanced = std::holds_alternative<Balanced>(check_balanced(c.g, f));
      const auto v = classify(c.g, f);
      balanced += is_balanced;
      if (std::holds_alternative<FaithfulBalanced>(v) != is_balanced) out.fail(tag + ": verdict disagrees with balance");
      if (!verify_verdict(c.g, f, v)) out.fail(tag + ": certificate does not verify");
      if (is_balanced) continue;
      const auto* nf = std::get_if<NotFaithful>(&v);
      if (!nf) {
        out.fail(tag + ": unbalanced but no finite-quotient witness (" + verdict_name(v) + ")");
        continue;
      }
      const std::size_t len = nf->cycle.size();
      std::size_t want = 1;
      for (std::size_t k = 1; k <= len; ++k) want *= k;
      want <<= (len - 1);
      const auto r = bfs_enumerate(nf->witness.generators(), 100000);
      if (!r.closed || r.size != want)
        out.fail(tag + ": witness enumerates to " + std::to_string(r.size) + ", want " + std::to_string(want));
      if (nf->quotient_order != want) out.fail(tag + ": reported quotient order " + nf->quotient_order.get_str());
      orders[len] = r.size;
      ++witnesses;
    }
  }
  std::ostringstream os;
  os << assignments << " sign assignments, " << balanced << " balanced, " << witnesses
     << " witnesses closed at 2^(c-1) c!:";
  for (const auto& [len, order] : orders) os << " c=" << len << "->" << order;
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------

Outcome quotient_orders() {
  Outcome out;
  struct Case {
    int n;
    const char* a;
    int m;
    std::size_t order;
  };
  std::ostringstream os;
  for (const auto& c : {Case{3, "-1", 2, 24}, Case{3, "zeta(3)", 3, 54}, Case{4, "-1", 2, 192}}) {
    const auto r = bfs_enumerate(monomial_witness(c.n, parse_scalar(c.a)).generators(), 100000);
    if (!r.closed || r.size != c.order)
      out.fail("(n,m)=(" + std::to_string(c.n) + "," + std::to_string(c.m) + "): got " + std::to_string(r.size));
    if (quotient_order(c.n, static_cast<std::uint64_t>(c.m)) != c.order) out.fail("formula disagrees");
    os << " (" << c.n << "," << c.m << ")->" << r.size;
  }
  out.detail = "witness groups:" + os.str();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Word> all_words(int n, int max_len) {
  std::vector<Word> out{{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (static_cast<int>(out[k].size()) == max_len) continue;
    for (int v = 0; v < n; ++v) {
      Word w = out[k];
      w.push_back(v);
      out.push_back(std::move(w));
    }
  }
  return out;  // ordered by length
}

std::string position_key(const Position& p) {
  std::string s;
  for (Index i = 0; i < p.size(); ++i) s += p(i).to_string() + ";";
  return s;
}

Outcome numbers_game_bijection() {
  Outcome out;
  std::ostringstream os;
  for (const auto& [name, n, size] : {std::tuple{"A2", 2, std::size_t{6}}, std::tuple{"A3", 3, std::size_t{24}}}) {
    const auto g = CoxeterGraph::chain(n);
    const auto game = NumbersGame::classical(g);
    const auto reach = game.reachable_positions(game.unit_start(), 10000);
    if (reach.exhausted || reach.positions.size() != size)
      out.fail(std::string(name) + ": " + std::to_string(reach.positions.size()) + " reachable positions");

    const auto words = all_words(n, 6);
    const auto sigma = standard_generators(g);
    // brute-force oracle: shortest length of each group element
    std::map<std::string, std::size_t> shortest;
    std::vector<std::string> element(words.size()), position(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
      element[k] = canonical_key(evaluate_word(sigma, words[k]));
      shortest.emplace(element[k], words[k].size());
      position[k] = position_key(game.play(words[k]).final_position());
    }
    std::size_t reduced = 0;
    std::map<std::string, std::size_t> first_with_position;
    std::map<std::string, std::string> element_of_position, position_of_element;
    for (std::size_t k = 0; k < words.size(); ++k) {
      const bool oracle = shortest.at(element[k]) == words[k].size();
      if (game.is_reduced(words[k]) != oracle) out.fail(std::string(name) + ": is_reduced disagrees with the oracle");
      reduced += oracle;
      auto [it, fresh] = first_with_position.emplace(position[k], k);
      if (!fresh && !words_equal_in_group(g, words[it->second], words[k]))
        out.fail(std::string(name) + ": equal positions, different elements");
      // the position and element partitions must coincide
      if (auto [e, ins] = element_of_position.emplace(position[k], element[k]); !ins && e->second != element[k])
        out.fail(std::string(name) + ": position class splits an element class");
      if (auto [p, ins] = position_of_element.emplace(element[k], position[k]); !ins && p->second != position[k])
        out.fail(std::string(name) + ": element class splits a position class");
    }
    // distinct positions: pairwise different in the group
    std::vector<std::size_t> reps;
    for (const auto& [key, k] : first_with_position) reps.push_back(k);
    for (std::size_t x = 0; x < reps.size(); ++x)
      for (std::size_t y = x + 1; y < reps.size(); ++y)
        if (words_equal_in_group(g, words[reps[x]], words[reps[y]]))
          out.fail(std::string(name) + ": different positions, equal elements");
    os << " " << name << ": " << reach.positions.size() << " positions, " << words.size() << " words (" << reduced
       << " reduced), " << reps.size() << " classes;";
  }
  out.detail = os.str().substr(1);
  out.detail.pop_back();
  return out;
}

// ---------------------------------------------------------------------------

MoveClass expected_pair(MoveClass c) {
  switch (c) {
    case MoveClass::pseudo_positive: return MoveClass::positive;
    case MoveClass::pseudo_negative: return MoveClass::negative;
    default: return c;
  }
}

Outcome gauge_equivariance() {
  std::mt19937 rng(77);
  struct Case {
    std::string name;
    CoxeterGraph g;
    WeightFunction f;
  };
  std::vector<Case> cases;
  {
    const auto six = parse_graph(*preset_text("six-vertex-signed"));
    cases.push_back({"six-vertex", six.graph, six.weights});
  }
  const std::vector<std::string> labels{"3", "4", "5", "6", "inf"};
  for (int k = 0; k < 5; ++k) {
    const int n = 4 + k % 3;
    CoxeterGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v, Label::parse(labels[rng() % labels.size()]));
    for (int extra = 0; extra < 2; ++extra) {
      const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i != j && !g.adjacent(i, j)) g.add_edge(i, j, Label::parse(labels[rng() % labels.size()]));
    }
    std::vector<Cyclotomic> pot;
    for (int v = 0; v < n; ++v) pot.push_back(pick(rng, kWeightPool));
    WeightFunction f;
    for (const auto& e : g.edges()) f.set_reciprocal(e.i, e.j, pot[static_cast<std::size_t>(e.j)] / pot[static_cast<std::size_t>(e.i)]);
    cases.push_back({"random #" + std::to_string(k + 1) + " (n=" + std::to_string(n) + ", " +
                         std::to_string(g.edges().size()) + " edges)",
                     g, f});
  }
  Outcome out;
  std::map<std::string, std::size_t> classes;
  std::size_t trials = 0;
  for (const auto& c : cases) {
    std::optional<NumbersGame> gen;
    try {
      gen = NumbersGame::generalized(c.g, c.f);
    } catch (const std::exception& e) {
      out.fail(c.name + ": " + e.what());
      continue;
    }
    const auto cls = NumbersGame::classical(c.g);
    const RepMatrix j = gen->gauge();
    const RepMatrix j_inv = inverse_exact(j);
    const int n = c.g.vertex_count();
    for (int t = 0; t < 100; ++t) {
      ++trials;
      Position p(n);
      if (t % 3 == 2) {
        for (int i = 0; i < n; ++i) p(i) = pick(rng, kWeightPool) * Cyclotomic(static_cast<long>(rng() % 7) - 3);
      } else {
        Position q(n);
        for (int i = 0; i < n; ++i) q(i) = Cyclotomic(static_cast<long>(rng() % 9) - 4);
        p = j_inv * q;
      }
      const Vertex v = static_cast<Vertex>(rng() % n);
      const Position lhs = j * gen->fire(p, v);
      const Position rhs = cls.fire((j * p).eval(), v);
      if (!exactly_equal(lhs, rhs)) out.fail(c.name + ": J fire(p) != fire(J p) at vertex " + std::to_string(v + 1));
      const MoveClass g_cls = gen->move_class(p, v);
      const MoveClass c_cls = cls.move_class((j * p).eval(), v);
      if (expected_pair(g_cls) != c_cls)
        out.fail(c.name + ": " + to_string(g_cls) + " for p but " + to_string(c_cls) + " for Jp");
      ++classes[to_string(g_cls)];
    }
  }
  std::ostringstream os;
  os << cases.size() << " graphs, " << trials << " (p, v) trials; classes seen:";
  for (const auto& [k, n] : classes) os << " " << k << "=" << n;
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------

Outcome affine_truncation() {
  Outcome out;
  const std::vector<std::size_t> frozen{1, 3, 6, 9, 12, 15};
  const auto r = verify_affine_iso(3, 2, 5);
  for (const auto& f : r.failures) out.fail(f);
  if (r.matrix_growth != frozen) out.fail("matrix growth differs from the frozen oracle");
  if (r.affine_growth != frozen) out.fail("affine growth differs from the frozen oracle");
  if (r.standard_growth != frozen) out.fail("standard growth differs from the frozen oracle");
  std::ostringstream os;
  os << "n=3 a=2, " << r.words_checked << " words up to length 5, growth";
  for (auto g : r.matrix_growth) os << " " << g;
  os << " in all three models";
  out.detail = os.str();
  return out;
}

Outcome imo_pentagon() {
  Outcome out;
  std::mt19937 rng(1986);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::size_t longest = 0, total = 0;
  const std::size_t budget = 100000;
  for (int k = 0; k < 1000; ++k) {
    std::vector<long> s(5);
    long sum = 0;
    do {
      sum = 0;
      for (auto& x : s) sum += (x = dist(rng));
    } while (sum <= 0);
    const auto run = imo_pentagon_run(s, budget);
    if (!run.terminated) out.fail("start did not terminate within the budget");
    longest = std::max(longest, run.record.moves.size());
    total += run.record.moves.size();
  }
  out.detail = "1000 starts in [-9,9]^5 with positive sum, all terminated; max " + std::to_string(longest) +
               " firings, mean " + std::to_string(static_cast<double>(total) / 1000.0).substr(0, 5) + " (budget " +
               std::to_string(budget) + ")";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixtures = argc > 1 ? argv[1] : WCG_FIXTURE_DIR "/printed_matrices.json";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"coxeter-relations", coxeter_relations},
      {"printed-matrices", [&] { return printed_matrices(fixtures); }},
      {"signed-faithful-iff-balanced", mainsign},
      {"quotient-orders", quotient_orders},
      {"numbers-game-bijection", numbers_game_bijection},
      {"gauge-equivariance", gauge_equivariance},
      {"affine-truncation", affine_truncation},
      {"imo-pentagon", imo_pentagon},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << t.str() << "s]\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
