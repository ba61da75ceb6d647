#include "wcg/geometric_rep.hpp"

#include <stdexcept>

namespace wcg {

namespace {

std::string pair_name(Vertex i, Vertex j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool positive_real(const Cyclotomic& x) { return x.is_real() && sign_of_real(x) == Sign::positive; }

}  // namespace

EdgeCoefficients EdgeCoefficients::symmetric(const CoxeterGraph& g) {
  EdgeCoefficients l;
  for (const auto& e : g.edges()) {
    const Cyclotomic v = e.m.is_infinite() ? Cyclotomic(2) : two_cos(e.m.value());
    l.set(e.i, e.j, v);
    l.set(e.j, e.i, v);
  }
  return l;
}

EdgeCoefficients EdgeCoefficients::integral(const CoxeterGraph& g) {
  EdgeCoefficients l = symmetric(g);
  for (const auto& e : g.edges()) {
    if (e.m.is_infinite()) continue;
    if (e.m.value() == 4 || e.m.value() == 6) {
      l.set(e.i, e.j, e.m.value() == 4 ? 2 : 3);
      l.set(e.j, e.i, 1);
    }
  }
  return l;
}

const Cyclotomic& EdgeCoefficients::at(Vertex i, Vertex j) const {
  auto it = values_.find({i, j});
  if (it == values_.end()) throw std::out_of_range("no edge coefficient on " + pair_name(i, j));
  return it->second;
}

std::vector<std::string> validate_coefficients(const CoxeterGraph& g, const EdgeCoefficients& l) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    auto fw = l.entries().find({e.i, e.j});
    auto bw = l.entries().find({e.j, e.i});
    if (fw == l.entries().end() || bw == l.entries().end()) {
      out.push_back("missing coefficient on edge " + pair_name(e.i, e.j));
      continue;
    }
    if (!positive_real(fw->second) || !positive_real(bw->second)) {
      out.push_back("coefficient on edge " + pair_name(e.i, e.j) + " is not a positive real");
      continue;
    }
    const Cyclotomic prod = fw->second * bw->second;
    if (e.m.is_infinite()) {
      if (sign_of_real(prod - Cyclotomic(4)) == Sign::negative)
        out.push_back("l_ij l_ji < 4 on infinite edge " + pair_name(e.i, e.j));
    } else {
      const Cyclotomic c = two_cos(e.m.value());
      if (!(prod == c * c)) out.push_back("l_ij l_ji != 4cos^2(pi/" + e.m.to_string() + ") on " + pair_name(e.i, e.j));
    }
  }
  for (const auto& [key, v] : l.entries())
    if (!g.adjacent(key.first, key.second)) out.push_back("coefficient on non-edge " + pair_name(key.first, key.second));
  return out;
}

Couplings standard_couplings(const EdgeCoefficients& l) { return l.entries(); }

Couplings generalized_couplings(const WeightFunction& f, const EdgeCoefficients& l) {
  Couplings k;
  for (const auto& [key, v] : l.entries()) k[key] = f.at(key.first, key.second) * v;
  return k;
}

GeneratorSet generators_from_couplings(const CoxeterGraph& g, const Couplings& k) {
  const Index n = g.vertex_count();
  GeneratorSet gens;
  for (Vertex i = 0; i < n; ++i) {
    RepMatrix m = identity<Cyclotomic>(n);
    m(i, i) = -1;
    for (Vertex j : g.neighbors(i)) {
      auto it = k.find({i, j});
      if (it == k.end()) throw std::invalid_argument("no coupling on " + pair_name(i, j));
      m(i, j) = it->second;
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

GeneratorSet standard_generators(const CoxeterGraph& g, const EdgeCoefficients& l) {
  return generators_from_couplings(g, standard_couplings(l));
}

GeneratorSet standard_generators(const CoxeterGraph& g) { return standard_generators(g, EdgeCoefficients::symmetric(g)); }

GeneratorSet generalized_generators(const CoxeterGraph& g, const WeightFunction& f, const EdgeCoefficients& l) {
  return generators_from_couplings(g, generalized_couplings(f, l));
}

GeneratorSet generalized_generators(const CoxeterGraph& g, const WeightFunction& f) {
  return generalized_generators(g, f, EdgeCoefficients::symmetric(g));
}

RelationReport verify_coxeter_relations(const GeneratorSet& gens, const CoxeterGraph& g, int infinite_check_bound) {
  RelationReport r;
  const auto n = static_cast<Vertex>(gens.size());
  if (n != g.vertex_count()) {
    r.failures.push_back("generator count differs from vertex count");
    return r;
  }
  for (Vertex i = 0; i < n; ++i) {
    ++r.relations_checked;
    if (!is_identity((gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(i)]).eval()))
      r.failures.push_back("generator " + std::to_string(i + 1) + " is not an involution");
  }
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const RepMatrix prod = gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(j)];
      const Label m = g.label(i, j);
      ++r.relations_checked;
      if (!m.is_infinite()) {
        if (!is_identity(power(prod, static_cast<unsigned long>(m.value()))))
          r.failures.push_back("(g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + ")^" + m.to_string() + " != I");
        continue;
      }
      RepMatrix acc = prod;
      for (int k = 1; k <= infinite_check_bound; ++k) {
        if (is_identity(acc)) {
          r.failures.push_back("(g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + ")^" + std::to_string(k) +
                               " = I on an infinite edge");
          break;
        }
        acc = (acc * prod).eval();
      }
    }
  return r;
}

RepMatrix evaluate_word(const GeneratorSet& gens, const Word& word) {
  if (gens.empty()) {
    if (!word.empty()) throw std::out_of_range("word over an empty generating set");
    return RepMatrix(0, 0);
  }
  RepMatrix m = identity<Cyclotomic>(gens.front().rows());
  for (Vertex v : word) {
    if (v < 0 || static_cast<std::size_t>(v) >= gens.size())
      throw std::out_of_range("generator index " + std::to_string(v + 1) + " out of range");
    m = (m * gens[static_cast<std::size_t>(v)]).eval();
  }
  return m;
}

bool words_equal_in_group(const CoxeterGraph& g, const Word& w1, const Word& w2) {
  const auto gens = standard_generators(g);
  return exactly_equal(evaluate_word(gens, w1), evaluate_word(gens, w2));
}

RepMatrix gauge_from_potentials(const std::vector<Cyclotomic>& potentials) {
  std::vector<Cyclotomic> inv;
  for (const auto& p : potentials) {
    if (p.is_zero()) throw std::invalid_argument("zero potential");
    inv.push_back(p.inverse());
  }
  return diagonal(inv);
}

GeneratorSet gauge_conjugate(const RepMatrix& j, const GeneratorSet& gens) { return conjugate(j, gens); }

}  // namespace wcg
