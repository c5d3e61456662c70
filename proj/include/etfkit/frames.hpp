#pragma once

// Frame-side operations: Welch bound, coherence, tightness, Gram-matrix
// characterization of equiangular tight frames, synthesis from a Gram
// matrix, Naimark complements and switching.

#include <cstddef>
#include <utility>
#include <vector>

#include "etfkit/linalg.hpp"

namespace etfkit {

inline constexpr double kDefaultEtfTolerance = 1e-8;
inline constexpr double kUnitNormTolerance = 1e-9;

/// Metadata of a verified ETF Gram matrix.
struct GramSummary {
  std::size_t n = 0;   // vector count
  std::size_t m = 0;   // rank, i.e. the ambient dimension
  double alpha = 0.0;  // tight-frame constant n/m
  double beta = 0.0;   // common off-diagonal modulus
};

/// Vector of +1/-1 entries, one per frame vector.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int> signs);
  static SignPattern all_positive(std::size_t n) { return SignPattern(std::vector<int>(n, 1)); }

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> signs_;
};

/// sqrt((n-m) / (m(n-1))); zero when m == n.
double welch_bound(std::size_t m, std::size_t n);

/// Largest |<phi_i, phi_j>| over distinct columns. Columns must be unit norm.
double coherence(const RectMatrixd& phi);

/// ||Phi Phi^T - (n/m) I||_F for unit-norm columns.
double tightness_defect(const RectMatrixd& phi);

/// Checks the three Gram-matrix conditions for an ETF: unit diagonal,
/// equimodular off-diagonal, and G^2 = alpha G. The entrywise conditions are
/// checked first, so a matrix violating several reports the entrywise one.
GramSummary verify_etf_gram(const SymMatrixd& g, double tol = kDefaultEtfTolerance);

/// An m x n synthesis operator Phi with Phi^T Phi = G, built as
/// sqrt(alpha) times the transposed top-m eigenvectors.
RectMatrixd synthesize_from_gram(const SymMatrixd& g, double tol = kDefaultEtfTolerance);

/// Gram of the canonical Naimark complement, (nI - mG)/(n-m).
SymMatrixd naimark_complement_gram(const SymMatrixd& g, const GramSummary& summary);

/// Multiplies column i of phi by s[i].
RectMatrixd switch_frame(const RectMatrixd& phi, const SignPattern& s);

/// D G D with D = diag(s).
SymMatrixd switch_gram(const SymMatrixd& g, const SignPattern& s);

/// Switches G so that every off-diagonal entry of the first row is +beta.
std::pair<SymMatrixd, SignPattern> sign_normalize(const SymMatrixd& g,
                                                  const GramSummary& summary);

}  // namespace etfkit
