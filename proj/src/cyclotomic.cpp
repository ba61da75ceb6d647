#include "wcg/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include <mpfr.h>

namespace wcg {
namespace {

// Power tables grow as N * phi(N); products of a few small conductors stay
// far below this.
constexpr unsigned kMaxConductor = 5040;

using IntPoly = std::vector<long long>;

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

struct Field {
  unsigned n = 1;
  unsigned phi = 1;
  IntPoly cyclo;                // Phi_n, low degree first, monic
  std::vector<IntPoly> powers;  // x^j mod Phi_n for 0 <= j < n
};

// Left inverse of the embedding Q(zeta_d) -> Q(zeta_n) restricted to a set of
// independent coordinate rows.
struct Projection {
  std::vector<unsigned> rows;
  std::vector<std::vector<mpq_class>> inverse;
};

std::recursive_mutex g_mutex;
std::map<unsigned, IntPoly> g_cyclo;
std::map<unsigned, std::unique_ptr<Field>> g_fields;
std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Projection>> g_projections;

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact division of a by the monic polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const long long c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = checked_sub(a[k - db + i], checked_mul(c, b[i]));
  }
  return q;
}

const IntPoly& cyclotomic_poly(unsigned n) {
  std::lock_guard lock(g_mutex);
  if (auto it = g_cyclo.find(n); it != g_cyclo.end()) return it->second;
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors(n))
    if (d < n) num = divide_exact(std::move(num), cyclotomic_poly(d));
  return g_cyclo.emplace(n, std::move(num)).first->second;
}

const Field& field(unsigned n) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  if (n > kMaxConductor) throw std::overflow_error("conductor " + std::to_string(n) + " exceeds limit");
  std::lock_guard lock(g_mutex);
  if (auto it = g_fields.find(n); it != g_fields.end()) return *it->second;

  auto f = std::make_unique<Field>();
  f->n = n;
  f->cyclo = cyclotomic_poly(n);
  f->phi = static_cast<unsigned>(f->cyclo.size() - 1);
  f->powers.reserve(n);
  IntPoly cur(f->phi, 0);
  cur[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    f->powers.push_back(cur);
    const long long carry = cur[f->phi - 1];
    for (unsigned k = f->phi - 1; k > 0; --k) cur[k] = checked_sub(cur[k - 1], checked_mul(carry, f->cyclo[k]));
    cur[0] = -checked_mul(carry, f->cyclo[0]);
  }
  return *g_fields.emplace(n, std::move(f)).first->second;
}

std::vector<mpq_class> reduce(const Field& f, const std::vector<mpq_class>& full) {
  std::vector<mpq_class> out(f.phi);
  for (unsigned j = 0; j < f.n; ++j) {
    if (sgn(full[j]) == 0) continue;
    const IntPoly& row = f.powers[j];
    for (unsigned k = 0; k < f.phi; ++k)
      if (row[k] != 0) out[k] += full[j] * mpz_class(static_cast<long>(row[k]));
  }
  return out;
}

// Gauss-Jordan inverse of a square rational matrix.
std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular rational matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class p = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class c = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= c * m[col][k];
        inv[r][k] -= c * inv[col][k];
      }
    }
  }
  return inv;
}

const Projection& projection(unsigned n, unsigned d) {
  std::lock_guard lock(g_mutex);
  const auto key = std::make_pair(n, d);
  if (auto it = g_projections.find(key); it != g_projections.end()) return *it->second;

  const Field& big = field(n);
  const Field& small = field(d);
  const unsigned step = n / d;
  // Columns of the embedding are the images of zeta_d^c = zeta_n^{step*c}.
  std::vector<std::vector<mpq_class>> cols(small.phi, std::vector<mpq_class>(big.phi));
  for (unsigned c = 0; c < small.phi; ++c)
    for (unsigned r = 0; r < big.phi; ++r) cols[c][r] = static_cast<long>(big.powers[step * c][r]);

  // Row-reduce the transposed embedding to pick independent coordinate rows.
  auto work = cols;
  auto proj = std::make_unique<Projection>();
  std::size_t rank = 0;
  for (unsigned r = 0; r < big.phi && rank < small.phi; ++r) {
    std::size_t piv = rank;
    while (piv < small.phi && sgn(work[piv][r]) == 0) ++piv;
    if (piv == small.phi) continue;
    std::swap(work[piv], work[rank]);
    for (std::size_t i = rank + 1; i < small.phi; ++i) {
      if (sgn(work[i][r]) == 0) continue;
      const mpq_class c = work[i][r] / work[rank][r];
      for (unsigned k = r; k < big.phi; ++k) work[i][k] -= c * work[rank][k];
    }
    proj->rows.push_back(r);
    ++rank;
  }
  std::vector<std::vector<mpq_class>> sub(small.phi, std::vector<mpq_class>(small.phi));
  for (unsigned i = 0; i < small.phi; ++i)
    for (unsigned c = 0; c < small.phi; ++c) sub[i][c] = cols[c][proj->rows[i]];
  proj->inverse = invert(std::move(sub));
  return *g_projections.emplace(key, std::move(proj)).first->second;
}

// Coordinates in Q(zeta_d) when v (over Q(zeta_n)) lies in that subfield.
std::optional<std::vector<mpq_class>> try_project(unsigned n, unsigned d, const std::vector<mpq_class>& v) {
  const Projection& proj = projection(n, d);
  const Field& big = field(n);
  const unsigned phi_d = static_cast<unsigned>(proj.rows.size());
  std::vector<mpq_class> g(phi_d);
  for (unsigned i = 0; i < phi_d; ++i)
    for (unsigned k = 0; k < phi_d; ++k)
      if (sgn(proj.inverse[i][k]) != 0) g[i] += proj.inverse[i][k] * v[proj.rows[k]];
  std::vector<mpq_class> full(n);
  for (unsigned c = 0; c < phi_d; ++c) full[(n / d) * c] = g[c];
  if (reduce(big, full) != v) return std::nullopt;
  return g;
}

std::string rational_literal(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

unsigned checked_lcm(unsigned a, unsigned b) {
  const unsigned long long l = std::lcm<unsigned long long>(a, b);
  if (l > kMaxConductor) throw std::overflow_error("conductor " + std::to_string(l) + " exceeds limit");
  return static_cast<unsigned>(l);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(mpq_class value) : conductor_(1), coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::from_full(unsigned n, std::vector<mpq_class> full) {
  return Cyclotomic(n, reduce(field(n), full));
}

Cyclotomic Cyclotomic::make(unsigned conductor, std::span<const long> poly, const mpq_class& scale) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<mpq_class> full(conductor);
  for (std::size_t k = 0; k < poly.size(); ++k) full[k % conductor] += mpq_class(poly[k]) * scale;
  return from_full(conductor, std::move(full));
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  const long r = ((k % static_cast<long>(n)) + n) % n;
  std::vector<mpq_class> full(n);
  full[r] = 1;
  return from_full(n, std::move(full));
}

void Cyclotomic::normalize() {
  bool rational = true;
  for (std::size_t k = 1; k < coeffs_.size() && rational; ++k) rational = sgn(coeffs_[k]) == 0;
  if (rational) {
    conductor_ = 1;
    coeffs_.resize(1);
    return;
  }
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (unsigned p : prime_factors(conductor_)) {
      const unsigned d = conductor_ / p;
      if (d <= 2) continue;  // Q(zeta_1) = Q(zeta_2) = Q, and x is not rational
      if (auto g = try_project(conductor_, d, coeffs_)) {
        conductor_ = d;
        coeffs_ = std::move(*g);
        shrunk = true;
        break;
      }
    }
  }
}

std::vector<mpq_class> Cyclotomic::embed_full(unsigned target) const {
  std::vector<mpq_class> full(target);
  const unsigned step = target / conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) full[step * j] = coeffs_[j];
  return full;
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }
bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

const mpq_class& Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic operator-(Cyclotomic x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    mpq_class q = coeffs_[0];
    *this = rhs;
    coeffs_[0] += q;
    return *this;
  }
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
  }
  const unsigned l = checked_lcm(conductor_, rhs.conductor_);
  auto full = embed_full(l);
  auto other = rhs.embed_full(l);
  for (unsigned k = 0; k < l; ++k) full[k] += other[k];
  return *this = from_full(l, std::move(full));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Cyclotomic();
  if (rhs.is_rational()) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    mpq_class q = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  const unsigned l = checked_lcm(conductor_, rhs.conductor_);
  const unsigned sa = l / conductor_;
  const unsigned sb = l / rhs.conductor_;
  std::vector<mpq_class> full(l);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      full[(sa * i + sb * j) % l] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return *this = from_full(l, std::move(full));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Cyclotomic(mpq_class(1) / coeffs_[0]);
  // Solve x * y = 1 in the power basis: column k of M holds x * zeta^k.
  const Field& f = field(conductor_);
  const unsigned phi = f.phi;
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  for (unsigned k = 0; k < phi; ++k) {
    std::vector<mpq_class> full(f.n);
    for (unsigned j = 0; j < phi; ++j) full[(j + k) % f.n] = coeffs_[j];
    auto col = reduce(f, full);
    for (unsigned r = 0; r < phi; ++r) m[r][k] = col[r];
  }
  m[0][phi] = 1;
  for (unsigned col = 0; col < phi; ++col) {
    unsigned piv = col;
    while (piv < phi && sgn(m[piv][col]) == 0) ++piv;
    if (piv == phi) throw std::domain_error("singular multiplication map");
    std::swap(m[piv], m[col]);
    const mpq_class p = m[col][col];
    for (unsigned k = col; k <= phi; ++k) m[col][k] /= p;
    for (unsigned r = 0; r < phi; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class c = m[r][col];
      for (unsigned k = col; k <= phi; ++k) m[r][k] -= c * m[col][k];
    }
  }
  std::vector<mpq_class> y(phi);
  for (unsigned r = 0; r < phi; ++r) y[r] = m[r][phi];
  return Cyclotomic(conductor_, std::move(y));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(k, static_cast<long>(conductor_)) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  if (is_rational()) return *this;
  const long n = conductor_;
  const long kk = ((k % n) + n) % n;
  std::vector<mpq_class> full(n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) full[(static_cast<long>(j) * kk) % n] += coeffs_[j];
  return from_full(conductor_, std::move(full));
}

Cyclotomic Cyclotomic::conj() const { return is_rational() ? *this : galois(static_cast<long>(conductor_) - 1); }

bool Cyclotomic::is_real() const { return is_rational() || conj() == *this; }

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    z += coeffs_[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_literal(coeffs_[0]);
  const std::string zeta = "zeta(" + std::to_string(conductor_) + ")";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpq_class& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? zeta : zeta + "^" + std::to_string(j));
    std::string term;
    const mpq_class mag = abs(c);
    if (mono.empty())
      term = rational_literal(mag);
    else if (mag == 1)
      term = mono;
    else
      term = rational_literal(mag) + "*" + mono;
    if (out.empty())
      out = sgn(c) < 0 ? "-" + term : term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::string Cyclotomic::to_decimal(int places) const {
  const auto z = to_complex();
  std::ostringstream os;
  os << std::fixed << std::setprecision(places);
  const double eps = 0.5 * std::pow(10.0, -places);
  const double re = std::abs(z.real()) < eps ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < eps ? 0.0 : z.imag();
  if (is_real() || im == 0.0) {
    os << re;
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = conductor_;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& c : coeffs_) {
    mix(std::hash<long>{}(mpz_get_si(c.get_num_mpz_t())));
    mix(static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 1));
    mix(std::hash<long>{}(mpz_get_si(c.get_den_mpz_t())));
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

Cyclotomic two_cos(int m) {
  if (m < 2) throw std::invalid_argument("two_cos requires m >= 2");
  const unsigned n = 2u * static_cast<unsigned>(m);
  return Cyclotomic::zeta(n, 1) + Cyclotomic::zeta(n, -1);
}

Order order_of(const Cyclotomic& x) {
  if (x.is_zero()) throw std::domain_error("order of zero is undefined");
  if (x.is_rational()) {
    const mpq_class& q = x.rational_value();
    if (q == 1) return 1;
    if (q == -1) return 2;
    return std::nullopt;
  }
  const unsigned bound = std::lcm(2u, x.conductor());
  if (!x.pow(bound).is_one()) return std::nullopt;
  for (unsigned d : divisors(bound))
    if (x.pow(d).is_one()) return d;
  return bound;
}

Sign sign_of_real(const Cyclotomic& x) {
  if (!x.is_real()) throw std::domain_error("sign_of_real on non-real value " + x.to_string());
  if (x.is_rational()) {
    const int s = sgn(x.rational_value());
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  const auto& c = x.coeffs();
  const unsigned n = x.conductor();
  mpq_class l1 = 0;
  for (std::size_t j = 1; j < c.size(); ++j) l1 += abs(c[j]);

  // Each cosine is within 2^(6 - prec) of the truth: three roundings for the
  // argument (|theta| < 8) plus one for the cosine itself.
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    mpfr_t theta, value;
    mpfr_inits2(prec, theta, value, static_cast<mpfr_ptr>(nullptr));
    mpq_class sum = c[0];
    mpq_class approx;
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (sgn(c[j]) == 0) continue;
      mpfr_const_pi(theta, MPFR_RNDN);
      mpfr_mul_ui(theta, theta, 2 * j, MPFR_RNDN);
      mpfr_div_ui(theta, theta, n, MPFR_RNDN);
      mpfr_cos(value, theta, MPFR_RNDN);
      mpfr_get_q(approx.get_mpq_t(), value);
      sum += c[j] * approx;
    }
    mpfr_clears(theta, value, static_cast<mpfr_ptr>(nullptr));
    mpq_class err = l1;
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(prec - 6));
    err /= scale;
    if (sum - err > 0) return Sign::positive;
    if (sum + err < 0) return Sign::negative;
  }
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar literal \"" + std::string(text_) + "\": " + msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail("floating-point literals are not accepted");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Cyclotomic expr() {
    Cyclotomic acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Cyclotomic term() {
    Cyclotomic acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Cyclotomic power() {
    Cyclotomic base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    mpz_class e = integer();
    if (paren) expect(')');
    if (!e.fits_slong_p()) fail("exponent too large");
    long k = e.get_si();
    if (negative) k = -k;
    if (k < 0 && base.is_zero()) fail("zero raised to a negative power");
    return base.pow(k);
  }

  Cyclotomic primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(mpq_class(integer()));
    if (c == '.') fail("floating-point literals are not accepted");
    if (text_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      expect('(');
      mpz_class n = integer();
      expect(')');
      if (n == 0 || !n.fits_uint_p()) fail("zeta conductor must be a positive integer");
      return Cyclotomic::zeta(static_cast<unsigned>(n.get_ui()));
    }
    if (accept('(')) {
      Cyclotomic v = expr();
      expect(')');
      return v;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace wcg
