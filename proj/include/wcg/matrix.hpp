#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include "json.hpp"

#include "wcg/cyclotomic.hpp"

namespace Eigen {

template <>
struct NumTraits<wcg::Cyclotomic> : GenericNumTraits<wcg::Cyclotomic> {
  typedef wcg::Cyclotomic Real;
  typedef wcg::Cyclotomic NonInteger;
  typedef wcg::Cyclotomic Nested;
  typedef wcg::Cyclotomic Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace wcg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RepMatrix = Matrix<Cyclotomic>;
using Position = Vector<Cyclotomic>;
using GeneratorSet = std::vector<RepMatrix>;
using Index = Eigen::Index;

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? Scalar(1) : Scalar(0)))) return false;
  return true;
}

template <typename Derived>
bool exactly_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

/// m^k for k >= 0 by repeated squaring.
template <typename Scalar>
Matrix<Scalar> power(const Matrix<Scalar>& m, unsigned long k) {
  Matrix<Scalar> result = identity<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (k > 0) {
    if (k & 1) result = (result * base).eval();
    k >>= 1;
    if (k) base = (base * base).eval();
  }
  return result;
}

/// Exact Gauss-Jordan inverse. Throws std::domain_error if m is singular.
template <typename Scalar>
Matrix<Scalar> inverse_exact(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Index n = m.rows();
  Matrix<Scalar> inv = identity<Scalar>(n);
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && m(piv, col) == Scalar(0)) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const Scalar p_inv = Scalar(1) / m(col, col);
    m.row(col) *= p_inv;
    inv.row(col) *= p_inv;
    for (Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Scalar(0)) continue;
      const Scalar c = m(r, col);
      m.row(r) -= c * m.row(col);
      inv.row(r) -= c * inv.row(col);
    }
  }
  return inv;
}

/// Diagonal matrix with the given entries.
template <typename Scalar>
Matrix<Scalar> diagonal(const std::vector<Scalar>& entries) {
  const Index n = static_cast<Index>(entries.size());
  Matrix<Scalar> d = Matrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

/// g -> J g J^{-1} for every generator.
GeneratorSet conjugate(const RepMatrix& j, const GeneratorSet& gens);

/// Row-major key built from canonical scalar literals; equal iff the matrices are.
std::string canonical_key(const RepMatrix& m);
std::size_t matrix_hash(const RepMatrix& m);
std::size_t position_hash(const Position& p);

/// Pretty printer with exact literals, columns aligned.
std::string format_matrix(const RepMatrix& m);
nlohmann::json matrix_to_json(const RepMatrix& m);
RepMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Cyclotomic& x);
nlohmann::json position_to_json(const Position& p);
std::string format_position(const Position& p);

}  // namespace wcg
