#pragma once

// Dense symmetric-matrix kernel. Everything here is templated on the scalar
// type; the rest of the library instantiates it with double.

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "etfkit/error.hpp"

namespace etfkit {

template <typename Scalar>
using RectMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RectMatrixd = RectMatrix<double>;
using Vectord = Vector<double>;

/// Square matrix whose storage is exactly symmetric: entry (i,j) and (j,i)
/// are bitwise equal. Construction rejects anything else, so products that
/// are only symmetric up to rounding must go through from_upper().
template <typename Scalar>
class SymMatrix {
 public:
  using Dense = RectMatrix<Scalar>;

  explicit SymMatrix(Dense entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
      throw Error(Errc::NotSymmetric, "expected a non-empty square matrix, got " +
                                          std::to_string(entries_.rows()) + "x" +
                                          std::to_string(entries_.cols()));
    }
    for (Eigen::Index j = 0; j < size(); ++j) {
      for (Eigen::Index i = j + 1; i < size(); ++i) {
        if (entries_(i, j) != entries_(j, i)) {
          throw Error(Errc::NotSymmetric, "entries (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") and (" +
                                              std::to_string(j + 1) + "," +
                                              std::to_string(i + 1) + ") differ",
                      Error::Witness{i, j});
        }
      }
    }
  }

  /// Mirrors the upper triangle (diagonal included) onto the lower one.
  template <typename Derived>
  static SymMatrix from_upper(const Eigen::MatrixBase<Derived>& m) {
    Dense sym = m.template selfadjointView<Eigen::Upper>();
    return SymMatrix(std::move(sym));
  }

  static SymMatrix identity(Eigen::Index n) { return SymMatrix(Dense::Identity(n, n)); }
  static SymMatrix ones(Eigen::Index n) { return SymMatrix(Dense::Ones(n, n)); }
  static SymMatrix diagonal(const Vector<Scalar>& d) { return SymMatrix(Dense(d.asDiagonal())); }

  Eigen::Index size() const noexcept { return entries_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const Dense& dense() const noexcept { return entries_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.size() == b.size() && a.entries_ == b.entries_;
  }

 private:
  Dense entries_;
};

using SymMatrixd = SymMatrix<double>;

/// Spectral decomposition S = V diag(values) V^T with values descending.
template <typename Scalar>
struct EigenPair {
  Vector<Scalar> values;
  RectMatrix<Scalar> vectors;
};

/// Gram matrix X^T X of the columns of x, exactly symmetric.
template <typename Derived>
SymMatrix<typename Derived::Scalar> gram(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.cols();
  RectMatrix<Scalar> g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) g(i, j) = x.col(i).dot(x.col(j));
  }
  return SymMatrix<Scalar>::from_upper(g);
}

/// X X^T, exactly symmetric.
template <typename Derived>
SymMatrix<typename Derived::Scalar> outer_gram(const Eigen::MatrixBase<Derived>& x) {
  return gram(x.transpose());
}

template <typename Scalar>
Scalar frobenius_distance(const SymMatrix<Scalar>& a, const SymMatrix<Scalar>& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::SizeMismatch, "sizes " + std::to_string(a.size()) + " and " +
                                        std::to_string(b.size()) + " differ");
  }
  return (a.dense() - b.dense()).norm();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar max_abs_difference(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Cyclic Jacobi eigensolver. Sweeps over every (p,q) pair in row order and
/// annihilates the pair with a plane rotation, stopping once the off-diagonal
/// Frobenius norm drops to 1e-12 of the input's.
template <typename Scalar>
EigenPair<Scalar> sym_eigen(const SymMatrix<Scalar>& s) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = s.size();
  RectMatrix<Scalar> a = s.dense();
  RectMatrix<Scalar> v = RectMatrix<Scalar>::Identity(n, n);

  const Scalar threshold = Scalar(1e-12) * a.norm();
  auto off_norm = [&] {
    Scalar sum(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) sum += a(i, j) * a(i, j);
    return sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

  EigenPair<Scalar> out{Vector<Scalar>(n), RectMatrix<Scalar>(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

}  // namespace etfkit
