#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wcg {

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Values are stored in the power basis zeta_N^0 .. zeta_N^{phi(N)-1} modulo
/// the N-th cyclotomic polynomial, always at the smallest conductor N whose
/// field contains the value. Two values are equal iff conductor and
/// coefficients coincide.
class Cyclotomic {
 public:
  Cyclotomic();
  template <std::integral I>
  Cyclotomic(I value) : Cyclotomic(mpq_class(static_cast<long>(value))) {}
  Cyclotomic(mpq_class value);

  /// scale * poly(zeta_conductor); poly[k] is the coefficient of zeta^k and may
  /// have any length.
  static Cyclotomic make(unsigned conductor, std::span<const long> poly,
                         const mpq_class& scale = 1);
  /// zeta_n^k, any integer k.
  static Cyclotomic zeta(unsigned n, long k = 1);

  unsigned conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  const mpq_class& rational_value() const;  // requires is_rational()

  bool is_real() const;
  Cyclotomic conj() const;
  /// Field automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long exponent) const;

  std::complex<double> to_complex() const;
  /// Exact literal, parseable by parse_scalar().
  std::string to_string() const;
  /// Decimal approximation with `places` fractional digits (display only).
  std::string to_decimal(int places = 6) const;
  std::size_t hash() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
  friend Cyclotomic operator-(Cyclotomic x);
  friend Cyclotomic operator+(const Cyclotomic& x) { return x; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Cyclotomic(unsigned conductor, std::vector<mpq_class> coeffs);
  static Cyclotomic from_full(unsigned n, std::vector<mpq_class> full);
  std::vector<mpq_class> embed_full(unsigned target) const;
  void normalize();

  unsigned conductor_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Multiplicative order; std::nullopt stands for infinite order.
using Order = std::optional<std::uint64_t>;

/// 2cos(pi/m) = zeta_{2m} + zeta_{2m}^{-1}, m >= 2.
Cyclotomic two_cos(int m);

/// Smallest d >= 1 with x^d = 1, or nullopt when x is not a root of unity.
Order order_of(const Cyclotomic& x);

/// Exact sign of a real cyclotomic number under zeta_N -> e^{2 pi i / N}.
/// Throws std::domain_error for non-real input.
Sign sign_of_real(const Cyclotomic& x);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses scalar literals such as "-1", "1/2*zeta(3)", "(1+zeta(8))^-2".
Cyclotomic parse_scalar(std::string_view text);

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace wcg

template <>
struct std::hash<wcg::Cyclotomic> {
  std::size_t operator()(const wcg::Cyclotomic& x) const noexcept { return x.hash(); }
};
