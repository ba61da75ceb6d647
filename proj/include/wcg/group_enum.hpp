#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wcg/geometric_rep.hpp"
#include "wcg/matrix.hpp"

namespace wcg {

struct EnumerationResult {
  std::size_t size = 0;
  std::vector<RepMatrix> elements;  // breadth-first order, identity first; empty unless kept
  bool closed = false;
  /// growth[l] = number of elements first reached by a word of length l.
  std::vector<std::size_t> growth;
  bool monomial_fast_path = false;

  std::optional<std::size_t> order() const {
    return closed ? std::optional<std::size_t>(size) : std::nullopt;
  }
};

/// Breadth-first closure under right multiplication by the generators, at most
/// max_elements elements. Monomial generating sets use a (permutation, entries)
/// representation; every hash hit is confirmed by exact comparison.
EnumerationResult bfs_enumerate(const GeneratorSet& gens, std::size_t max_elements, bool keep_elements = false);

nlohmann::json enumeration_to_json(const EnumerationResult& r);

/// Row i holds a^{exponents[i]} in column perm[i].
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<long> exponents;

  static MonomialMatrix identity(int n);
  int size() const { return static_cast<int>(perm.size()); }
  long exponent_sum() const;
  RepMatrix to_matrix(const Cyclotomic& a) const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Matches matrix multiplication: to_matrix(compose(x, y)) = x.to_matrix() * y.to_matrix().
MonomialMatrix monomial_compose(const MonomialMatrix& x, const MonomialMatrix& y);

/// Throws std::invalid_argument for non-monomial input or an entry that is
/// not a^k with |k| <= max_exponent. For finite-order a the exponent of least
/// magnitude is chosen.
MonomialMatrix monomial_from_matrix(const RepMatrix& m, const Cyclotomic& a, long max_exponent = 256);

/// Element of the affine symmetric group, stored as its window theta(1..n);
/// theta(i + n) = theta(i) + n.
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<long> window);
  static AffinePermutation identity(int n);
  /// The generator s_i, 0 <= i < n; s_0 swaps 0 and 1 (equivalently n and n+1).
  static AffinePermutation generator(int n, int i);

  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<long>& window() const { return window_; }
  /// theta(x) for any integer x.
  long operator()(long x) const;
  /// Coxeter length (number of affine inversions).
  long length() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<long> window_;
};

/// (x o y)(i) = x(y(i)).
AffinePermutation affine_compose(const AffinePermutation& x, const AffinePermutation& y);

/// theta(perm[r] + 1) = (r + 1) - n * exponents[r]. Requires exponent sum 0.
/// t_i maps to s_i and the witness A maps to s_0.
AffinePermutation affine_from_monomial(const MonomialMatrix& m);

struct AffineIsoReport {
  int n = 0;
  int max_length = 0;
  std::size_t words_checked = 0;
  std::vector<std::size_t> matrix_growth;
  std::vector<std::size_t> affine_growth;
  std::vector<std::size_t> standard_growth;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every word of length <= L over omega_1..omega_n (weight a on (s_n, s_1)):
/// matrix equality, affine-permutation equality and equality under the
/// standard representation of affine A_{n-1} must coincide. Throws
/// std::domain_error when a has finite order.
AffineIsoReport verify_affine_iso(int n, const Cyclotomic& a, int max_length);

nlohmann::json affine_report_to_json(const AffineIsoReport& r);

}  // namespace wcg
