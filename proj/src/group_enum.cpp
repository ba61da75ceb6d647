#include "wcg/group_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "wcg/classifier.hpp"

namespace wcg {

namespace {

// Monomial matrix over the field: row i holds vals[i] in column perm[i].
struct Mono {
  std::vector<int> perm;
  std::vector<Cyclotomic> vals;

  friend bool operator==(const Mono&, const Mono&) = default;
};

std::optional<Mono> as_mono(const RepMatrix& m) {
  const Index n = m.rows();
  Mono out{std::vector<int>(static_cast<std::size_t>(n), -1), std::vector<Cyclotomic>(static_cast<std::size_t>(n))};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      if (m(r, c).is_zero()) continue;
      if (out.perm[static_cast<std::size_t>(r)] >= 0 || used[static_cast<std::size_t>(c)]) return std::nullopt;
      out.perm[static_cast<std::size_t>(r)] = static_cast<int>(c);
      out.vals[static_cast<std::size_t>(r)] = m(r, c);
      used[static_cast<std::size_t>(c)] = 1;
    }
  for (int p : out.perm)
    if (p < 0) return std::nullopt;
  return out;
}

Mono mono_mul(const Mono& x, const Mono& y) {
  Mono out{std::vector<int>(x.perm.size()), std::vector<Cyclotomic>(x.perm.size())};
  for (std::size_t i = 0; i < x.perm.size(); ++i) {
    const auto mid = static_cast<std::size_t>(x.perm[i]);
    out.perm[i] = y.perm[mid];
    out.vals[i] = x.vals[i] * y.vals[mid];
  }
  return out;
}

std::size_t mono_hash(const Mono& m) {
  std::size_t h = m.perm.size();
  for (std::size_t i = 0; i < m.perm.size(); ++i) {
    h ^= static_cast<std::size_t>(m.perm[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= m.vals[i].hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RepMatrix mono_matrix(const Mono& m) {
  const auto n = static_cast<Index>(m.perm.size());
  RepMatrix out = RepMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) out(r, m.perm[static_cast<std::size_t>(r)]) = m.vals[static_cast<std::size_t>(r)];
  return out;
}

struct MatrixOps {
  using Element = RepMatrix;
  static Element mul(const Element& x, const Element& y) { return (x * y).eval(); }
  static std::size_t hash(const Element& x) { return matrix_hash(x); }
  static bool equal(const Element& x, const Element& y) { return exactly_equal(x, y); }
  static RepMatrix matrix(const Element& x) { return x; }
};

struct MonoOps {
  using Element = Mono;
  static Element mul(const Element& x, const Element& y) { return mono_mul(x, y); }
  static std::size_t hash(const Element& x) { return mono_hash(x); }
  static bool equal(const Element& x, const Element& y) { return x == y; }
  static RepMatrix matrix(const Element& x) { return mono_matrix(x); }
};

template <typename Ops>
EnumerationResult bfs(const std::vector<typename Ops::Element>& gens, typename Ops::Element id, std::size_t max_elements,
                      bool keep) {
  using E = typename Ops::Element;
  EnumerationResult r;
  std::vector<E> elems{std::move(id)};
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  index[Ops::hash(elems[0])].push_back(0);
  r.growth.push_back(1);

  std::size_t level_begin = 0, level_end = 1;
  bool exhausted = false;
  while (level_begin < level_end && !exhausted) {
    std::size_t added = 0;
    for (std::size_t k = level_begin; k < level_end && !exhausted; ++k)
      for (const auto& g : gens) {
        E next = Ops::mul(elems[k], g);
        // a hash hit only counts after exact comparison
        auto& bucket = index[Ops::hash(next)];
        bool seen = false;
        for (std::size_t b : bucket) seen = seen || Ops::equal(elems[b], next);
        if (seen) continue;
        if (elems.size() >= max_elements) {
          exhausted = true;
          break;
        }
        bucket.push_back(elems.size());
        elems.push_back(std::move(next));
        ++added;
      }
    if (added) r.growth.push_back(added);
    level_begin = level_end;
    level_end = elems.size();
  }
  r.closed = !exhausted;
  r.size = elems.size();
  if (keep)
    for (const auto& e : elems) r.elements.push_back(Ops::matrix(e));
  return r;
}

}  // namespace

EnumerationResult bfs_enumerate(const GeneratorSet& gens, std::size_t max_elements, bool keep_elements) {
  if (max_elements < 1) throw std::invalid_argument("max_elements must be >= 1");
  if (gens.empty()) {
    EnumerationResult r;
    r.size = 1;
    r.closed = true;
    r.growth = {1};
    return r;
  }
  const Index n = gens.front().rows();
  std::vector<Mono> monos;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generators of different sizes");
    if (auto m = as_mono(g)) monos.push_back(std::move(*m));
  }
  if (monos.size() == gens.size()) {
    auto r = bfs<MonoOps>(monos, *as_mono(identity<Cyclotomic>(n)), max_elements, keep_elements);
    r.monomial_fast_path = true;
    return r;
  }
  return bfs<MatrixOps>(gens, identity<Cyclotomic>(n), max_elements, keep_elements);
}

nlohmann::json enumeration_to_json(const EnumerationResult& r) {
  nlohmann::json j{{"closed", r.closed}, {"elements_found", r.size}, {"growth", r.growth},
                   {"monomial_fast_path", r.monomial_fast_path}};
  if (r.closed)
    j["order"] = r.size;
  else
    j["status"] = "budget exhausted";
  return j;
}

MonomialMatrix MonomialMatrix::identity(int n) {
  MonomialMatrix m;
  m.perm.resize(static_cast<std::size_t>(n));
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.exponents.assign(static_cast<std::size_t>(n), 0);
  return m;
}

long MonomialMatrix::exponent_sum() const { return std::accumulate(exponents.begin(), exponents.end(), 0L); }

RepMatrix MonomialMatrix::to_matrix(const Cyclotomic& a) const {
  const Index n = size();
  RepMatrix out = RepMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r)
    out(r, perm[static_cast<std::size_t>(r)]) = a.pow(exponents[static_cast<std::size_t>(r)]);
  return out;
}

MonomialMatrix monomial_compose(const MonomialMatrix& x, const MonomialMatrix& y) {
  if (x.size() != y.size()) throw std::invalid_argument("monomial matrices of different sizes");
  MonomialMatrix out;
  for (std::size_t i = 0; i < x.perm.size(); ++i) {
    const auto mid = static_cast<std::size_t>(x.perm[i]);
    out.perm.push_back(y.perm[mid]);
    out.exponents.push_back(x.exponents[i] + y.exponents[mid]);
  }
  return out;
}

MonomialMatrix monomial_from_matrix(const RepMatrix& m, const Cyclotomic& a, long max_exponent) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
  const auto mono = as_mono(m);
  if (!mono) throw std::invalid_argument("matrix is not monomial");
  if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
  MonomialMatrix out;
  out.perm = mono->perm;
  const Cyclotomic a_inv = a.inverse();
  for (const auto& v : mono->vals) {
    Cyclotomic up(1), down(1);
    std::optional<long> k;
    for (long e = 0; e <= max_exponent && !k; ++e) {
      if (up == v)
        k = e;
      else if (down == v)
        k = -e;
      up *= a;
      down *= a_inv;
    }
    if (!k) throw std::invalid_argument("entry " + v.to_string() + " is not a power of " + a.to_string());
    out.exponents.push_back(*k);
  }
  return out;
}

namespace {

long floor_div(long x, long n) { return x >= 0 ? x / n : -((-x + n - 1) / n); }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long> window) : window_(std::move(window)) {
  const long n = static_cast<long>(window_.size());
  if (n < 1) throw std::invalid_argument("empty window");
  if (std::accumulate(window_.begin(), window_.end(), 0L) != n * (n + 1) / 2)
    throw std::invalid_argument("window sum must be n(n+1)/2");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long v : window_) {
    const long r = v - n * floor_div(v, n);
    if (seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("window residues must be distinct mod n");
    seen[static_cast<std::size_t>(r)] = 1;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1L);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::generator(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw std::out_of_range("affine generator index out of range");
  std::vector<long> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1L);
  if (i == 0) {
    w.front() = 0;
    w.back() = n + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(std::move(w));
}

long AffinePermutation::operator()(long x) const {
  const long n = size();
  const long q = floor_div(x - 1, n);
  return window_[static_cast<std::size_t>(x - 1 - q * n)] + q * n;
}

long AffinePermutation::length() const {
  const long n = size();
  long inv = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      inv += std::abs(floor_div(window_[static_cast<std::size_t>(j)] - window_[static_cast<std::size_t>(i)], n));
  return inv;
}

AffinePermutation affine_compose(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.size() != y.size()) throw std::invalid_argument("affine permutations of different sizes");
  std::vector<long> w;
  for (long v : y.window()) w.push_back(x(v));
  return AffinePermutation(std::move(w));
}

AffinePermutation affine_from_monomial(const MonomialMatrix& m) {
  if (m.exponent_sum() != 0) throw std::invalid_argument("exponent sum must be 0");
  const long n = m.size();
  std::vector<long> w(static_cast<std::size_t>(n));
  for (long r = 0; r < n; ++r)
    w[static_cast<std::size_t>(m.perm[static_cast<std::size_t>(r)])] = (r + 1) - n * m.exponents[static_cast<std::size_t>(r)];
  return AffinePermutation(std::move(w));
}

AffineIsoReport verify_affine_iso(int n, const Cyclotomic& a, int max_length) {
  if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (max_length < 0) throw std::invalid_argument("negative word length bound");
  if (order_of(a)) throw std::domain_error("a = " + a.to_string() + " has finite order");

  const auto omega = gathered_cycle_generators(n, a);
  const auto sigma = standard_generators(CoxeterGraph::cycle(n));
  std::vector<AffinePermutation> affine;
  for (int i = 0; i < n; ++i) affine.push_back(AffinePermutation::generator(n, (i + 1) % n));

  AffineIsoReport rep;
  rep.n = n;
  rep.max_length = max_length;

  struct Node {
    RepMatrix m;
    AffinePermutation theta;
    RepMatrix s;
  };
  std::vector<Node> level{{identity<Cyclotomic>(n), AffinePermutation::identity(n), identity<Cyclotomic>(n)}};
  std::map<std::string, std::size_t> m_class, s_class;
  std::map<std::vector<long>, std::size_t> a_class;
  std::size_t word_index = 0;

  for (int len = 0; len <= max_length; ++len) {
    std::size_t new_m = 0, new_a = 0, new_s = 0;
    for (const auto& node : level) {
      const auto [im, fresh_m] = m_class.try_emplace(canonical_key(node.m), word_index);
      const auto [ia, fresh_a] = a_class.try_emplace(node.theta.window(), word_index);
      const auto [is, fresh_s] = s_class.try_emplace(canonical_key(node.s), word_index);
      new_m += fresh_m;
      new_a += fresh_a;
      new_s += fresh_s;
      if ((im->second != ia->second || ia->second != is->second) && rep.failures.size() < 10)
        rep.failures.push_back("word #" + std::to_string(word_index) + " of length " + std::to_string(len) +
                               ": representations disagree");
      ++word_index;
    }
    rep.matrix_growth.push_back(new_m);
    rep.affine_growth.push_back(new_a);
    rep.standard_growth.push_back(new_s);
    if (len == max_length) break;
    std::vector<Node> next;
    next.reserve(level.size() * static_cast<std::size_t>(n));
    for (const auto& node : level)
      for (int g = 0; g < n; ++g)
        next.push_back({(node.m * omega[static_cast<std::size_t>(g)]).eval(),
                        affine_compose(node.theta, affine[static_cast<std::size_t>(g)]),
                        (node.s * sigma[static_cast<std::size_t>(g)]).eval()});
    level = std::move(next);
  }
  rep.words_checked = word_index;
  if (rep.matrix_growth != rep.affine_growth || rep.affine_growth != rep.standard_growth)
    rep.failures.push_back("growth counts differ");
  return rep;
}

nlohmann::json affine_report_to_json(const AffineIsoReport& r) {
  return {{"n", r.n},
          {"max_length", r.max_length},
          {"words_checked", r.words_checked},
          {"matrix_growth", r.matrix_growth},
          {"affine_growth", r.affine_growth},
          {"standard_growth", r.standard_growth},
          {"agree", r.ok()},
          {"failures", r.failures}};
}

}  // namespace wcg
