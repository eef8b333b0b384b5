#pragma once

// Exact integer and rational linear algebra on Eigen containers.
//
// Scalars are arbitrary precision (GMP through Boost.Multiprecision). Every
// routine here is exact; none of them ever rounds. Matrices follow the
// row convention: a matrix is a list of row vectors sharing one length.

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "mockfan/error.hpp"

namespace mockfan {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LatticeVector = VectorX<Integer>;
using RationalVector = VectorX<Rational>;
using IntMatrix = MatrixX<Integer>;

namespace detail {

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Integer lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

// Exact quotient for the fraction-free eliminations below.
inline Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace detail

/// Builds a lattice vector from a brace list, e.g. `vec({1, -2, 3})`.
inline LatticeVector vec(std::initializer_list<long long> coords) {
  LatticeVector v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (long long c : coords) v(i++) = c;
  return v;
}

inline LatticeVector zero_vector(Index rank) {
  return LatticeVector::Constant(rank, Integer(0));
}

inline LatticeVector unit_vector(Index rank, Index k) {
  LatticeVector v = zero_vector(rank);
  v(k) = 1;
  return v;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

/// gcd of the absolute values of the coordinates; 0 for the zero vector.
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) g = detail::gcd(g, Integer(v(i)));
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content in place; leaves the zero vector untouched.
inline void make_primitive(LatticeVector& v) {
  Integer g = content(v);
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) = detail::exact_div(v(i), g);
}

/// The unique primitive lattice vector on the ray through v.
inline LatticeVector primitive(const LatticeVector& v) {
  if (is_zero(v)) throw InvalidInput("zero vector has no primitive representative", "E_ZERO_VECTOR");
  LatticeVector p = v;
  make_primitive(p);
  return p;
}

/// Clears denominators of a rational vector and returns the primitive
/// lattice vector on the same ray (zero stays zero).
inline LatticeVector primitive_from_rational(const RationalVector& v) {
  Integer den = 1;
  for (Index i = 0; i < v.size(); ++i)
    den = detail::lcm(den, boost::multiprecision::denominator(v(i)));
  LatticeVector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = boost::multiprecision::numerator(v(i)) *
             detail::exact_div(den, boost::multiprecision::denominator(v(i)));
  make_primitive(out);
  return out;
}

template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

template <typename Scalar>
bool lex_less(const std::vector<VectorX<Scalar>>& a, const std::vector<VectorX<Scalar>>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const VectorX<Scalar>& x, const VectorX<Scalar>& y) { return lex_less(x, y); });
}

/// Exact inner product; mixes integer and rational operands.
template <typename A, typename B>
auto pair(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  using S = std::conditional_t<std::is_same_v<typename A::Scalar, Rational> ||
                                   std::is_same_v<typename B::Scalar, Rational>,
                               Rational, Integer>;
  S acc = 0;
  for (Index i = 0; i < x.size(); ++i) acc += S(x(i)) * S(y(i));
  return acc;
}

inline IntMatrix rows_to_matrix(const std::vector<LatticeVector>& rows, Index cols) {
  IntMatrix m(static_cast<Index>(rows.size()), cols);
  for (Index r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length does not match the matrix rank");
    m.row(r) = rows[r].transpose();
  }
  return m;
}

inline std::vector<LatticeVector> matrix_to_rows(const IntMatrix& m) {
  std::vector<LatticeVector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).transpose());
  return rows;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = input;
  const Index rows = a.rows(), cols = a.cols();
  Scalar prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        a(i, j) = detail::exact_div(Scalar(a(r, c) * a(i, j) - a(i, c) * a(r, j)), prev);
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline Index rank(const std::vector<LatticeVector>& rows, Index cols) {
  if (rows.empty()) return 0;
  return rank(rows_to_matrix(rows, cols));
}

/// Canonical basis of the row space: the reduced row echelon form with every
/// row scaled to a primitive integer vector with positive pivot. Two matrices
/// have the same row space iff their echelon bases are equal.
struct EchelonBasis {
  std::vector<LatticeVector> rows;
  std::vector<Index> pivots;  // pivot column of each row, increasing

  Index size() const { return static_cast<Index>(rows.size()); }

  /// Representative of v modulo the row space with every pivot coordinate
  /// cleared, rescaled by a positive factor to be primitive.
  LatticeVector reduce(const LatticeVector& v) const {
    LatticeVector out = v;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Index p = pivots[k];
      if (out(p) == 0) continue;
      Integer a = rows[k](p);
      Integer b = out(p);
      Integer g = detail::gcd(a, b);
      a = detail::exact_div(a, g);
      b = detail::exact_div(b, g);
      out = (a * out - b * rows[k]).eval();
    }
    make_primitive(out);
    return out;
  }

  bool contains(const LatticeVector& v) const { return is_zero(reduce(v)); }
};

inline EchelonBasis echelon_basis(const std::vector<LatticeVector>& input, Index cols) {
  std::vector<LatticeVector> rows;
  for (const auto& v : input) {
    if (v.size() != cols) throw InvalidInput("vector rank mismatch");
    if (!is_zero(v)) rows.push_back(v);
  }
  EchelonBasis basis;
  Index r = 0;
  for (Index c = 0; c < cols && r < static_cast<Index>(rows.size()); ++c) {
    Index piv = r;
    while (piv < static_cast<Index>(rows.size()) && rows[piv](c) == 0) ++piv;
    if (piv == static_cast<Index>(rows.size())) continue;
    std::swap(rows[piv], rows[r]);
    if (rows[r](c) < 0) rows[r] = (-rows[r]).eval();
    make_primitive(rows[r]);
    for (Index i = 0; i < static_cast<Index>(rows.size()); ++i) {
      if (i == r || rows[i](c) == 0) continue;
      Integer a = rows[r](c);
      Integer b = rows[i](c);
      Integer g = detail::gcd(a, b);
      a = detail::exact_div(a, g);
      b = detail::exact_div(b, g);
      rows[i] = (a * rows[i] - b * rows[r]).eval();
      make_primitive(rows[i]);
    }
    basis.pivots.push_back(c);
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  basis.rows = std::move(rows);
  return basis;
}

/// Canonical integer basis (echelon form) of {x : <row, x> = 0 for all rows}.
inline EchelonBasis kernel_basis(const std::vector<LatticeVector>& rows, Index cols) {
  EchelonBasis e = echelon_basis(rows, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  std::vector<LatticeVector> kernel;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // x_f = L, x_{p_k} = -L * row_k(f) / row_k(p_k), with L clearing denominators.
    Integer L = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (e.rows[k](f) != 0) L = detail::lcm(L, Integer(e.rows[k](e.pivots[k])));
    LatticeVector x = zero_vector(cols);
    x(f) = L;
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (e.rows[k](f) != 0)
        x(e.pivots[k]) = -detail::exact_div(Integer(L * e.rows[k](f)), Integer(e.rows[k](e.pivots[k])));
    kernel.push_back(std::move(x));
  }
  return echelon_basis(kernel, cols);
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form,
/// computed with unimodular integer row and column operations.
inline std::vector<Integer> smith_invariants(IntMatrix a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Integer> diag;
  Index t = 0;
  while (t < rows && t < cols) {
    // Pivot: entry of least absolute value in the trailing block.
    Index pr = -1, pc = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    a.row(pr).swap(a.row(t));
    a.col(pc).swap(a.col(t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {
          a.row(i).swap(a.row(t));
          clean = false;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      for (Index i = t + 1; i < rows && clean; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

/// True iff the (linearly independent) rows extend to a basis of the ambient
/// lattice, i.e. all Smith invariants equal 1.
inline bool lattice_basis_extension_test(const std::vector<LatticeVector>& generators, Index cols) {
  if (rank(generators, cols) != static_cast<Index>(generators.size()))
    throw InvalidInput("generators are linearly dependent");
  if (generators.empty()) return true;
  for (const Integer& d : smith_invariants(rows_to_matrix(generators, cols)))
    if (d != 1) return false;
  return true;
}

}  // namespace mockfan
