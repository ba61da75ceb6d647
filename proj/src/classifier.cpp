#include "wcg/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wcg {

namespace {

struct CheckedCycle {
  VertexPath cycle;
  Cyclotomic weight;
  Order order;
  bool simply_laced = true;
};

bool cycle_simply_laced(const CoxeterGraph& g, const VertexPath& c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!(g.label(c[k], c[(k + 1) % c.size()]) == Label(3))) return false;
  return true;
}

bool is_induced_cycle(const CoxeterGraph& g, const VertexPath& c) {
  const std::size_t n = c.size();
  if (n < 3) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b == n - 1);
      if (c[a] == c[b] || g.adjacent(c[a], c[b]) != consecutive) return false;
    }
  return true;
}

/// The restriction of f to an induced cycle, relabelled 0..c-1 in cycle order.
WeightFunction restrict_weights(const WeightFunction& f, const VertexPath& c) {
  WeightFunction r;
  const auto n = static_cast<Vertex>(c.size());
  for (Vertex k = 0; k < n; ++k) {
    const Vertex next = (k + 1) % n;
    r.set(k, next, f.at(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(next)]));
    r.set(next, k, f.at(c[static_cast<std::size_t>(next)], c[static_cast<std::size_t>(k)]));
  }
  return r;
}

bool same_generators(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!exactly_equal(a[i], b[i])) return false;
  return true;
}

bool gauge_holds(const CoxeterGraph& g, const WeightFunction& f, const RepMatrix& j) {
  return same_generators(gauge_conjugate(j, standard_generators(g)), generalized_generators(g, f));
}

/// J w = w~ J for the induced cycle and its gathered form.
bool gather_holds(const CoxeterGraph& g, const WeightFunction& f, const VertexPath& c, const GatheredCycle& gc) {
  const auto sub = induced_subgraph(g, c);
  const auto before = generalized_generators(sub, restrict_weights(f, c));
  const auto after = gathered_cycle_generators(static_cast<int>(c.size()), gc.total);
  for (std::size_t i = 0; i < before.size(); ++i)
    if (!exactly_equal((gc.gauge * before[i]).eval(), (after[i] * gc.gauge).eval())) return false;
  return true;
}

bool witness_holds(const MonomialWitness& w) {
  const auto omega = gathered_cycle_generators(w.n, w.a);
  if (w.t.size() + 1 != omega.size()) return false;
  for (std::size_t i = 0; i + 1 < omega.size(); ++i)
    if (!exactly_equal((w.j * omega[i]).eval(), (w.t[i] * w.j).eval())) return false;
  return exactly_equal((w.j * omega.back()).eval(), (w.big_a * w.j).eval());
}

nlohmann::json order_to_json(const Order& o) {
  if (o) return *o;
  return "inf";
}

}  // namespace

GeneratorSet MonomialWitness::generators() const {
  GeneratorSet g = t;
  g.push_back(big_a);
  return g;
}

GeneratorSet gathered_cycle_generators(int n, const Cyclotomic& a) {
  const auto g = CoxeterGraph::cycle(n);
  WeightFunction h;
  for (int k = 0; k + 1 < n; ++k) h.set_reciprocal(k, k + 1, 1);
  h.set_reciprocal(n - 1, 0, a);
  return generalized_generators(g, h);
}

MonomialWitness monomial_witness(int n, const Cyclotomic& a) {
  if (n < 3) throw std::invalid_argument("monomial witness needs n >= 3");
  if (a.is_zero()) throw std::invalid_argument("monomial witness needs a != 0");
  MonomialWitness w;
  w.n = n;
  w.a = a;
  const Cyclotomic a_inv = a.inverse();
  w.j = identity<Cyclotomic>(n);
  for (Index i = 0; i + 1 < n; ++i) w.j(i + 1, i) = -1;
  w.j(0, n - 1) = -a_inv;
  for (Index i = 0; i + 1 < n; ++i) {
    RepMatrix t = identity<Cyclotomic>(n);
    t(i, i) = 0;
    t(i + 1, i + 1) = 0;
    t(i, i + 1) = 1;
    t(i + 1, i) = 1;
    w.t.push_back(std::move(t));
  }
  w.big_a = identity<Cyclotomic>(n);
  w.big_a(0, 0) = 0;
  w.big_a(n - 1, n - 1) = 0;
  w.big_a(0, n - 1) = a_inv;
  w.big_a(n - 1, 0) = a;
  try {
    (void)inverse_exact(w.j);
    w.j_invertible = true;
  } catch (const std::domain_error&) {
    w.j_invertible = false;
  }
  if (!witness_holds(w)) throw std::logic_error("monomial witness failed verification");
  return w;
}

mpz_class quotient_order(int n, std::uint64_t m) {
  mpz_class power, fact;
  mpz_ui_pow_ui(power.get_mpz_t(), m, static_cast<unsigned long>(n - 1));
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return power * fact;
}

Verdict classify(const CoxeterGraph& g, const WeightFunction& f, const ClassifyOptions& options) {
  const auto violations = validate_legal(g, f);
  if (!violations.empty()) throw std::invalid_argument("weight function is not legal: " + violations.front().message);

  const auto cert = check_balanced(g, f);
  if (const auto* b = std::get_if<Balanced>(&cert)) {
    FaithfulBalanced v{*b, gauge_from_potentials(b->potentials)};
    if (!verify_certificate(g, f, v.certificate) || !gauge_holds(g, f, v.gauge))
      throw std::logic_error("balance certificate failed verification");
    return v;
  }

  std::vector<CheckedCycle> induced;
  for (auto& c : chordless_cycles(g, options.cycle_limit)) {
    Cyclotomic w = cycle_weight(g, f, c);
    Order o = order_of(w);
    const bool sl = cycle_simply_laced(g, c);
    induced.push_back({std::move(c), std::move(w), o, sl});
  }

  const CheckedCycle* best = nullptr;
  for (const auto& c : induced)
    if (c.simply_laced && c.order && *c.order > 1 && (!best || c.cycle.size() < best->cycle.size())) best = &c;
  if (best) {
    NotFaithful v;
    v.cycle = best->cycle;
    v.a = best->weight;
    v.order = *best->order;
    const int n = static_cast<int>(v.cycle.size());
    v.quotient_order = quotient_order(n, v.order);
    v.gathered = gather_cycle(g, f, v.cycle);
    if (!gather_holds(g, f, v.cycle, v.gathered)) throw std::logic_error("gathering failed verification");
    v.witness = monomial_witness(n, v.a);
    // The cycle block is finite; the columns of outside vertices move by a
    // cocycle that vanishes on a finite-index subgroup, so some power of the
    // cycle's Coxeter element is the identity on the whole space.
    const auto omega = generalized_generators(g, f);
    const RepMatrix c = evaluate_word(omega, v.cycle);
    const auto limit = v.quotient_order.fits_ulong_p() ? v.quotient_order.get_ui() : 1000000UL;
    RepMatrix p = c;
    for (std::uint64_t d = 1; d <= limit; ++d, p = (p * c).eval())
      if (is_identity(p)) {
        v.kernel_power = d;
        break;
      }
    if (v.kernel_power == 0) throw std::logic_error("no power of the cycle's Coxeter element is trivial");
    for (std::uint64_t d = 0; d < v.kernel_power; ++d) v.kernel_word.insert(v.kernel_word.end(), v.cycle.begin(), v.cycle.end());
    return v;
  }

  if (auto order = as_single_cycle(g); order && g.simply_laced()) {
    Cyclotomic a = cycle_weight(g, f, *order);
    if (!order_of(a)) return FaithfulAffineCycle{*order, g.vertex_count(), std::move(a)};
  }

  Unknown u;
  for (const auto& c : induced) u.induced.push_back({c.cycle, c.weight, c.order});
  const auto fundamental = fundamental_cycles(g);
  std::vector<Cyclotomic> weights;
  for (const auto& c : fundamental) {
    weights.push_back(cycle_weight(g, f, c));
    u.fundamental.push_back({c, weights.back(), order_of(weights.back())});
  }

  // Bounded products of fundamental cycle weights with at most
  // probe_max_nonzero nonzero exponents in [-B, B].
  const int bound = options.probe_bound;
  const std::size_t m = std::min<std::size_t>(weights.size(), 16);
  std::vector<std::vector<Cyclotomic>> powers(m);
  for (std::size_t i = 0; i < m; ++i)
    for (int e = -bound; e <= bound; ++e) powers[i].push_back(weights[i].pow(e));
  std::vector<int> exps(weights.size(), 0);
  std::function<void(std::size_t, int, const Cyclotomic&)> walk = [&](std::size_t from, int nonzero,
                                                                       const Cyclotomic& acc) {
    for (std::size_t i = from; i < m; ++i)
      for (int e = -bound; e <= bound; ++e) {
        if (e == 0) continue;
        const Cyclotomic next = acc * powers[i][static_cast<std::size_t>(e + bound)];
        exps[i] = e;
        ++u.products_probed;
        if (const Order o = order_of(next); o && *o > 1 && u.finite_products.size() < 32)
          u.finite_products.push_back({exps, next, *o});
        if (nonzero + 1 < options.probe_max_nonzero) walk(i + 1, nonzero + 1, next);
        exps[i] = 0;
      }
  };
  if (bound > 0 && options.probe_max_nonzero > 0) walk(0, 0, Cyclotomic(1));

  std::ostringstream why;
  if (as_single_cycle(g) && !g.simply_laced())
    why << "single cycle carrying labels other than 3";
  else if (std::none_of(induced.begin(), induced.end(), [](const CheckedCycle& c) { return c.simply_laced; }))
    why << "no induced simply-laced cycle";
  else
    why << "every induced simply-laced cycle weight is 1 or of infinite order";
  if (!u.finite_products.empty()) why << "; finite-order products of cycle weights exist but no induced cycle realizes them";
  u.reason = why.str();
  return u;
}

namespace {

// the kernel word is trivial under omega and nontrivial under the faithful sigma
bool kernel_holds(const CoxeterGraph& g, const WeightFunction& f, const NotFaithful& nf) {
  if (nf.kernel_power == 0 || nf.kernel_word.size() != nf.kernel_power * nf.cycle.size()) return false;
  for (std::size_t k = 0; k < nf.kernel_word.size(); ++k)
    if (nf.kernel_word[k] != nf.cycle[k % nf.cycle.size()]) return false;
  return is_identity(evaluate_word(generalized_generators(g, f), nf.kernel_word)) &&
         !is_identity(evaluate_word(standard_generators(g), nf.kernel_word));
}

}  // namespace

bool verify_verdict(const CoxeterGraph& g, const WeightFunction& f, const Verdict& v) {
  try {
    if (const auto* b = std::get_if<FaithfulBalanced>(&v))
      return verify_certificate(g, f, b->certificate) && gauge_holds(g, f, b->gauge);
    if (const auto* nf = std::get_if<NotFaithful>(&v)) {
      const int n = static_cast<int>(nf->cycle.size());
      return is_induced_cycle(g, nf->cycle) && cycle_simply_laced(g, nf->cycle) &&
             cycle_weight(g, f, nf->cycle) == nf->a && order_of(nf->a) == Order(nf->order) && nf->order > 1 &&
             nf->quotient_order == quotient_order(n, nf->order) && nf->gathered.total == nf->a &&
             gather_holds(g, f, nf->cycle, nf->gathered) && nf->witness.n == n && nf->witness.a == nf->a &&
             nf->witness.j_invertible && witness_holds(nf->witness) && kernel_holds(g, f, *nf);
    }
    if (const auto* af = std::get_if<FaithfulAffineCycle>(&v)) {
      return as_single_cycle(g) && g.simply_laced() && af->n == g.vertex_count() &&
             static_cast<int>(af->cycle.size()) == af->n && is_induced_cycle(g, af->cycle) &&
             cycle_weight(g, f, af->cycle) == af->a && !order_of(af->a);
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string verdict_name(const Verdict& v) {
  static const char* names[] = {"FaithfulBalanced", "NotFaithful", "FaithfulAffineCycle", "Unknown"};
  return names[v.index()];
}

nlohmann::json path_to_json(const VertexPath& p) {
  auto out = nlohmann::json::array();
  for (Vertex v : p) out.push_back(v + 1);
  return out;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"verdict", verdict_name(v)}};
  if (const auto* b = std::get_if<FaithfulBalanced>(&v)) {
    auto pots = nlohmann::json::array();
    for (const auto& p : b->certificate.potentials) pots.push_back(scalar_to_json(p));
    j["potentials"] = pots;
    j["origins"] = path_to_json(b->certificate.origins);
    j["gauge"] = matrix_to_json(b->gauge);
  } else if (const auto* nf = std::get_if<NotFaithful>(&v)) {
    j["cycle"] = path_to_json(nf->cycle);
    j["a"] = scalar_to_json(nf->a);
    j["order"] = nf->order;
    j["quotient_order"] = nf->quotient_order.get_str();
    j["gather_gauge"] = matrix_to_json(nf->gathered.gauge);
    auto ts = nlohmann::json::array();
    for (const auto& t : nf->witness.t) ts.push_back(matrix_to_json(t));
    j["witness"] = {{"J", matrix_to_json(nf->witness.j)}, {"t", ts}, {"A", matrix_to_json(nf->witness.big_a)}};
    j["kernel_element"] = {{"cycle_word", path_to_json(nf->cycle)}, {"power", nf->kernel_power}};
  } else if (const auto* af = std::get_if<FaithfulAffineCycle>(&v)) {
    j["cycle"] = path_to_json(af->cycle);
    j["n"] = af->n;
    j["a"] = scalar_to_json(af->a);
    j["isomorphic_to"] = "affine A_" + std::to_string(af->n - 1);
  } else {
    const auto& u = std::get<Unknown>(v);
    auto cycles = [](const std::vector<ProbedCycle>& cs) {
      auto out = nlohmann::json::array();
      for (const auto& c : cs)
        out.push_back({{"cycle", path_to_json(c.cycle)}, {"weight", scalar_to_json(c.weight)}, {"order", order_to_json(c.order)}});
      return out;
    };
    j["reason"] = u.reason;
    j["fundamental_cycles"] = cycles(u.fundamental);
    j["induced_cycles"] = cycles(u.induced);
    auto prods = nlohmann::json::array();
    for (const auto& p : u.finite_products)
      prods.push_back({{"exponents", p.exponents}, {"weight", scalar_to_json(p.weight)}, {"order", p.order}});
    j["finite_order_products"] = prods;
    j["products_probed"] = u.products_probed;
  }
  return j;
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream os;
  os << verdict_name(v) << "\n";
  auto path = [](const VertexPath& p, const char* sep = " - ") {
    std::string s;
    for (Vertex x : p) s += (s.empty() ? "" : sep) + ("s" + std::to_string(x + 1));
    return s;
  };
  if (const auto* b = std::get_if<FaithfulBalanced>(&v)) {
    os << "potentials:";
    for (std::size_t i = 0; i < b->certificate.potentials.size(); ++i)
      os << " s" << i + 1 << "=" << b->certificate.potentials[i].to_string();
    os << "\ngauge J (J sigma_i J^-1 = omega_i):\n" << format_matrix(b->gauge);
  } else if (const auto* nf = std::get_if<NotFaithful>(&v)) {
    os << "cycle: " << path(nf->cycle) << "\n"
       << "weight a = " << nf->a.to_string() << ", order " << nf->order << "\n"
       << "finite quotient of order " << nf->quotient_order.get_str() << "\n"
       << "kernel element: (" << path(nf->cycle, " ") << ")^" << nf->kernel_power
       << " acts as the identity but has infinite order in W\n"
       << "witness J:\n"
       << format_matrix(nf->witness.j) << "A:\n"
       << format_matrix(nf->witness.big_a);
  } else if (const auto* af = std::get_if<FaithfulAffineCycle>(&v)) {
    os << "cycle: " << path(af->cycle) << "\n"
       << "weight a = " << af->a.to_string() << " has infinite order; image is affine A_" << af->n - 1 << "\n";
  } else {
    const auto& u = std::get<Unknown>(v);
    os << "reason: " << u.reason << "\n";
    for (const auto& c : u.fundamental)
      os << "fundamental cycle " << path(c.cycle) << ": weight " << c.weight.to_string() << ", order "
         << (c.order ? std::to_string(*c.order) : "inf") << "\n";
    os << "products probed: " << u.products_probed << "\n";
  }
  return os.str();
}

}  // namespace wcg
