#pragma once

// Exact linear algebra over Q(x). Dense work goes through Eigen matrices with
// a custom scalar; the Nichols engine uses the sparse echelon basis below.

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopflift/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<hopflift::Scalar> : GenericNumTraits<hopflift::Scalar> {
  using Real = hopflift::Scalar;
  using NonInteger = hopflift::Scalar;
  using Nested = hopflift::Scalar;
  using Literal = hopflift::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hopflift {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<Index> rref_inplace(Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    T inv = T(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!(m(row, j) == T(0))) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == T(0)) continue;
      T f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!(m(row, j) == T(0))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> m = a;
  return static_cast<Index>(rref_inplace(m).size());
}

/// Columns form a basis of {x : a x = 0}.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> m = a;
  auto piv = rref_inplace(m);
  std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
  for (Index c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> basis(m.cols(),
                                                         m.cols() - static_cast<Index>(piv.size()));
  basis.setZero();
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -m(static_cast<Index>(r), free);
    ++k;
  }
  return basis;
}

/// Some x with a x = b, if the system is consistent.
template <class DA, class DB>
std::optional<Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, 1>> solve(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using T = typename DA::Scalar;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto piv = rref_inplace(aug);
  Eigen::Matrix<T, Eigen::Dynamic, 1> x(a.cols());
  x.setZero();
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == a.cols()) return std::nullopt;
    x(piv[r]) = aug(static_cast<Index>(r), a.cols());
  }
  return x;
}

template <class Derived>
std::optional<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>> inverse(
    const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  const Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n).setIdentity();
  auto piv = rref_inplace(aug);
  if (static_cast<Index>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>(aug.rightCols(n));
}

template <class DA, class DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using T = typename DA::Scalar;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setZero();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

/// Exact matrix product that skips zero entries; Eigen's kernel is correct
/// but allocates temporaries for every GMP operation.
Mat matmul(const Mat& a, const Mat& b);

/// Characteristic polynomial det(t I - a), coefficients from degree 0 upwards.
std::vector<Scalar> charpoly(const Mat& a);

/// Roots (with multiplicity collapsed) of a polynomial over Q(x) that lie in
/// Q(x). `complete` is cleared when the search could not be finished.
std::vector<Scalar> roots_in_field(std::vector<Scalar> coeffs, bool& complete);

// ---------------------------------------------------------------------------
// Sparse vectors and an incremental echelon basis.

struct SparseVec {
  std::vector<std::pair<std::size_t, Scalar>> entries;  // strictly increasing index

  bool empty() const { return entries.empty(); }
  static SparseVec from_map(const std::map<std::size_t, Scalar>& m);
  /// this += f * other
  void axpy(const Scalar& f, const SparseVec& other);
};

class EchelonBasis {
 public:
  /// Reduces v against the basis and inserts the remainder if nonzero.
  /// Returns true when v was independent.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(SparseVec& v) const;
  std::map<std::size_t, SparseVec> rows_;  // pivot -> row with leading coefficient 1
};

}  // namespace hopflift
