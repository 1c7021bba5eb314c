#pragma once

// Dense Eigen aliases over the exact scalars, plus the handful of exact
// linear-algebra helpers the lattice code needs (fraction-free enough at the
// sizes we care about; everything is plain Gaussian elimination over Q).

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "toricmld/scalar.hpp"

namespace toricmld {

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RationalMatrix to_rational(const IntegerMatrix& m) { return m.cast<Rational>(); }
inline RationalVector to_rational(const IntegerVector& v) { return v.cast<Rational>(); }

// Least common multiple of the denominators; 1 for the empty vector.
inline Integer common_denominator(const RationalVector& v) {
  Integer d(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) d = lcm(d, v(i).den());
  return d;
}

// v = num / den with num integral; den = common denominator.
inline std::pair<IntegerVector, Integer> clear_denominators(const RationalVector& v) {
  Integer d = common_denominator(v);
  IntegerVector num(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num(i) = divexact(v(i).num() * d, v(i).den());
  return {num, d};
}

// Divide an integer vector by the gcd of its entries (zero vector unchanged).
inline IntegerVector primitive_part(const IntegerVector& v) {
  Integer g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g.is_zero() || g.is_one()) return v;
  IntegerVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = divexact(v(i), g);
  return out;
}

template <typename Scalar>
bool lex_less(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a,
              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

inline Eigen::Index rank_exact(RationalMatrix m) {
  Eigen::Index rank = 0;
  Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(rank, col);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

inline Rational determinant_exact(RationalMatrix m) {
  if (m.rows() != m.cols()) fail(Errc::InvalidInput, "determinant of non-square matrix");
  Rational det(1);
  Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) { m.row(col).swap(m.row(pivot)); det = -det; }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

// Solve A x = b exactly. Requires full column rank; returns nullopt when the
// system is inconsistent (b outside the column span).
inline std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b) {
  Eigen::Index rows = a.rows(), cols = a.cols();
  if (b.size() != rows) fail(Errc::InvalidInput, "solve: shape mismatch");
  RationalMatrix m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) fail(Errc::InvalidInput, "solve: matrix does not have full column rank");
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(rank, col);
      m.row(r) -= f * m.row(rank);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < cols) fail(Errc::InvalidInput, "solve: matrix does not have full column rank");
  for (Eigen::Index r = rank; r < rows; ++r)
    if (!m(r, cols).is_zero()) return std::nullopt;
  RationalVector x(cols);
  for (Eigen::Index i = 0; i < cols; ++i) x(pivot_col[i]) = m(i, cols) / m(i, pivot_col[i]);
  return x;
}

// One-dimensional kernel of the row span: the primitive integer normal of the
// hyperplane spanned by the rows. Returns nullopt unless the nullity is
// exactly 1. The sign of the result is unspecified; callers orient it.
inline std::optional<IntegerVector> hyperplane_normal(const RationalMatrix& rows_in) {
  Eigen::Index dim = rows_in.cols();
  RationalMatrix m = rows_in;
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(dim, false);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < dim && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(rank, col);
      m.row(r) -= f * m.row(rank);
    }
    pivot_col.push_back(col);
    is_pivot[static_cast<size_t>(col)] = true;
    ++rank;
  }
  if (dim - rank != 1) return std::nullopt;
  Eigen::Index free_col = -1;
  for (Eigen::Index c = 0; c < dim; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) { free_col = c; break; }
  RationalVector kernel = RationalVector::Zero(dim);
  kernel(free_col) = Rational(1);
  for (Eigen::Index i = 0; i < rank; ++i)
    kernel(pivot_col[static_cast<size_t>(i)]) = -m(i, free_col) / m(i, pivot_col[static_cast<size_t>(i)]);
  auto [num, den] = clear_denominators(kernel);
  (void)den;
  return primitive_part(num);
}

}  // namespace toricmld
