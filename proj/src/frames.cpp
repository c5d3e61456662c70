#include "etfkit/frames.hpp"

#include <cmath>
#include <string>

namespace etfkit {

namespace {

void require_unit_columns(const RectMatrixd& phi) {
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    const double norm = phi.col(j).norm();
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
      throw Error(Errc::NonUnitColumns,
                  "column " + std::to_string(j + 1) + " has norm " + std::to_string(norm));
    }
  }
}

std::size_t count_above(const Vectord& values, double threshold) {
  return static_cast<std::size_t>((values.array() > threshold).count());
}

}  // namespace

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw Error(Errc::InvalidArgument, "sign pattern entry " + std::to_string(i + 1) +
                                             " is " + std::to_string(signs_[i]));
    }
  }
}

double welch_bound(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) {
    throw Error(Errc::InvalidArgument, "welch bound needs 1 <= m <= n, got m=" +
                                           std::to_string(m) + ", n=" + std::to_string(n));
  }
  if (m == n) return 0.0;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return std::sqrt((nd - md) / (md * (nd - 1.0)));
}

double coherence(const RectMatrixd& phi) {
  require_unit_columns(phi);
  const SymMatrixd g = gram(phi);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < g.size(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) worst = std::max(worst, std::abs(g(i, j)));
  return worst;
}

double tightness_defect(const RectMatrixd& phi) {
  require_unit_columns(phi);
  const double ratio = static_cast<double>(phi.cols()) / static_cast<double>(phi.rows());
  const SymMatrixd frame_op = outer_gram(phi);
  return frobenius_distance(frame_op, SymMatrixd(ratio * RectMatrixd::Identity(phi.rows(), phi.rows())));
}

GramSummary verify_etf_gram(const SymMatrixd& g, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const Eigen::Index n = g.size();

  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(g(i, i) - 1.0) > tol) {
      throw Error(Errc::DiagonalNotUnit,
                  "diagonal entry " + std::to_string(i + 1) + " is " + std::to_string(g(i, i)),
                  Error::Witness{i, i});
    }
  }

  double beta = 0.0;
  if (n > 1) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < j; ++i) total += std::abs(g(i, j));
    beta = total / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(std::abs(g(i, j)) - beta) > tol) {
          throw Error(Errc::OffDiagonalNotEquimodular,
                      "|G(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")| = " + std::to_string(std::abs(g(i, j))) +
                          " differs from the mean modulus " + std::to_string(beta),
                      Error::Witness{i, j});
        }
      }
    }
  }

  // Spectrum is {alpha, 0}: classify against half the top eigenvalue, then
  // refine with alpha = n / rank.
  const EigenPair<double> eig = sym_eigen(g);
  std::size_t rank = count_above(eig.values, 0.5 * eig.values(0));
  double alpha = static_cast<double>(n) / static_cast<double>(rank);
  rank = count_above(eig.values, 0.5 * alpha);
  if (rank == 0) throw Error(Errc::NotIdempotentScaled, "matrix has no positive spectrum");
  alpha = static_cast<double>(n) / static_cast<double>(rank);

  const RectMatrixd residual = g.dense() * g.dense() - alpha * g.dense();
  const double worst = residual.cwiseAbs().maxCoeff();
  if (worst > tol) {
    throw Error(Errc::NotIdempotentScaled,
                "max |G^2 - alpha G| = " + std::to_string(worst) + " with alpha = " +
                    std::to_string(alpha));
  }

  return GramSummary{static_cast<std::size_t>(n), rank, alpha, beta};
}

RectMatrixd synthesize_from_gram(const SymMatrixd& g, double tol) {
  const GramSummary summary = verify_etf_gram(g, tol);
  const EigenPair<double> eig = sym_eigen(g);
  const auto m = static_cast<Eigen::Index>(summary.m);
  return std::sqrt(summary.alpha) * eig.vectors.leftCols(m).transpose();
}

SymMatrixd naimark_complement_gram(const SymMatrixd& g, const GramSummary& summary) {
  if (summary.m >= summary.n) {
    throw Error(Errc::NoComplement, "an orthonormal basis (m = n) has no Naimark complement");
  }
  if (static_cast<std::size_t>(g.size()) != summary.n) {
    throw Error(Errc::SizeMismatch, "summary does not describe this Gram matrix");
  }
  const double n = static_cast<double>(summary.n);
  const double m = static_cast<double>(summary.m);
  const auto size = g.size();
  RectMatrixd out = (n * RectMatrixd::Identity(size, size) - m * g.dense()) / (n - m);
  return SymMatrixd(std::move(out));
}

RectMatrixd switch_frame(const RectMatrixd& phi, const SignPattern& s) {
  if (static_cast<Eigen::Index>(s.size()) != phi.cols()) {
    throw Error(Errc::LengthMismatch, "sign pattern has " + std::to_string(s.size()) +
                                          " entries for " + std::to_string(phi.cols()) +
                                          " columns");
  }
  RectMatrixd out = phi;
  for (Eigen::Index j = 0; j < out.cols(); ++j)
    if (s[static_cast<std::size_t>(j)] < 0) out.col(j) = -out.col(j);
  return out;
}

SymMatrixd switch_gram(const SymMatrixd& g, const SignPattern& s) {
  if (static_cast<Eigen::Index>(s.size()) != g.size()) {
    throw Error(Errc::LengthMismatch, "sign pattern has " + std::to_string(s.size()) +
                                          " entries for size " + std::to_string(g.size()));
  }
  RectMatrixd out = g.dense();
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      if (s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] < 0) out(i, j) = -out(i, j);
    }
  }
  return SymMatrixd(std::move(out));
}

std::pair<SymMatrixd, SignPattern> sign_normalize(const SymMatrixd& g,
                                                  const GramSummary& summary) {
  if (summary.beta <= 0.0) {
    throw Error(Errc::BetaZero, "sign normalization needs a nonzero off-diagonal modulus");
  }
  std::vector<int> signs(static_cast<std::size_t>(g.size()), 1);
  for (Eigen::Index i = 1; i < g.size(); ++i) signs[static_cast<std::size_t>(i)] = g(0, i) < 0.0 ? -1 : 1;
  SignPattern pattern(std::move(signs));
  return {switch_gram(g, pattern), std::move(pattern)};
}

}  // namespace etfkit
