#pragma once

// Strongly regular graphs: exact verification of A^2 = (l-m)A + (k-m)I + mJ,
// parameter arithmetic, closed-form spectra and complements.

#include <cstdint>
#include <Eigen/Dense>

#include "etfkit/linalg.hpp"

namespace etfkit {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Symmetric 0/1 matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(IntMatrix entries);
  static AdjacencyMatrix empty(Eigen::Index v) { return AdjacencyMatrix(IntMatrix::Zero(v, v)); }

  Eigen::Index vertex_count() const noexcept { return entries_.rows(); }
  bool adjacent(Eigen::Index i, Eigen::Index j) const { return entries_(i, j) != 0; }
  std::int64_t operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }

  template <typename Scalar = double>
  SymMatrix<Scalar> as_sym() const {
    return SymMatrix<Scalar>(entries_.cast<Scalar>());
  }

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.vertex_count() == b.vertex_count() && a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
};

/// (v, k, lambda, mu). A vacuous flag marks a constant that no vertex pair
/// constrains (no adjacent pairs for lambda, no non-adjacent pairs for mu);
/// its stored value is 0.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool lambda_vacuous = false;
  bool mu_vacuous = false;

  std::int64_t deviation() const noexcept { return v - 2 * k - 1; }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct SrgSpectrum {
  double degree_eigenvalue = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  std::int64_t mult_plus = 0;
  std::int64_t mult_minus = 0;
};

inline constexpr double kIntegralityTolerance = 1e-6;

/// Exact integer check of the SRG identity; throws NotRegular or
/// NotStronglyRegular with the first offending vertex pair as witness.
SrgParams verify_srg(const AdjacencyMatrix& a);

/// k(k - lambda - 1) == (v - k - 1) mu over the integers.
bool check_parameter_relation(const SrgParams& p);

SrgSpectrum spectrum(const SrgParams& p);

/// J - A - I.
AdjacencyMatrix complement(const AdjacencyMatrix& a);

/// (v, v-k-1, v-2k+mu-2, v-2k+lambda) with vacuous flags swapped.
SrgParams complement_params(const SrgParams& p);

inline std::int64_t deviation(const SrgParams& p) noexcept { return p.deviation(); }

}  // namespace etfkit
