#include "etfkit/correspondence.hpp"

#include <cmath>
#include <string>

namespace etfkit {

namespace {

std::int64_t round_integral(double x, Errc code, const std::string& what) {
  const double r = std::round(x);
  if (!std::isfinite(x) || std::abs(x - r) > kIntegralityTolerance) {
    throw Error(code, what + " = " + std::to_string(x) + " is not an integer");
  }
  return static_cast<std::int64_t>(r);
}

enum class Root { Plus, Minus };

std::pair<SymMatrixd, ConversionReport> srg_to_etf_gram_impl(const AdjacencyMatrix& b, Root root,
                                                             double tol) {
  SrgParams params;
  try {
    params = verify_srg(b);
  } catch (const Error& e) {
    throw Error(Errc::NotAnSrg, e.what(), e.witness());
  }
  if (!is_etf_eligible(params)) {
    throw Error(Errc::NotEligible, "mu = " + std::to_string(params.mu) + " is not k/2 = " +
                                       std::to_string(params.k) + "/2");
  }

  const std::int64_t v = params.v;
  const std::int64_t n = v + 1;
  const double beta = root == Root::Plus ? beta_plus(v, params.k) : beta_minus(v, params.k);
  const double alpha = static_cast<double>(v) * beta * beta + 1.0;

  std::int64_t m = static_cast<std::int64_t>(srg_params_to_etf_params(v, params.k).m);
  if (root == Root::Minus) {
    const double d = static_cast<double>(params.deviation());
    const double real_m = 0.5 * static_cast<double>(n) *
                          (1.0 - d / std::sqrt(d * d + 4.0 * static_cast<double>(v)));
    m = round_integral(real_m, Errc::NonIntegralDimension, "dimension m'");
  }

  RectMatrixd g(n, n);
  g(0, 0) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) g(0, i) = g(i, 0) = beta;
  for (Eigen::Index i = 0; i < v; ++i) {
    for (Eigen::Index j = 0; j < v; ++j) {
      g(i + 1, j + 1) = i == j ? 1.0 : (b.adjacent(i, j) ? beta : -beta);
    }
  }
  SymMatrixd gram_matrix(std::move(g));

  GramSummary summary;
  try {
    summary = verify_etf_gram(gram_matrix, tol);
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("assembled Gram matrix: ") + e.what());
  }
  if (static_cast<std::int64_t>(summary.m) != m) {
    throw Error(Errc::InternalInconsistency, "assembled Gram matrix has rank " +
                                                 std::to_string(summary.m) + ", expected " +
                                                 std::to_string(m));
  }
  if (root == Root::Plus &&
      std::abs(beta - welch_bound(static_cast<std::size_t>(m), static_cast<std::size_t>(n))) > 1e-9) {
    throw Error(Errc::InternalInconsistency, "positive root differs from the Welch bound");
  }

  ConversionReport report;
  report.shape = EtfShape(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  report.params = params;
  report.beta = beta;
  report.alpha = alpha;
  report.signs = SignPattern::all_positive(static_cast<std::size_t>(n));
  return {std::move(gram_matrix), std::move(report)};
}

}  // namespace

EtfShape::EtfShape(std::size_t m_, std::size_t n_) : m(m_), n(n_) {
  if (m < 1 || m >= n) {
    throw Error(Errc::InvalidShape,
                "need 1 <= m < n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
}

double srg_degree_for_shape(double m, double n) {
  return 0.5 * n - 1.0 + (0.5 * n / m - 1.0) * std::sqrt(m * (n - 1.0) / (n - m));
}

double etf_dimension_for_graph(double v, double k) {
  const double d = v - 2.0 * k - 1.0;
  return 0.5 * (v + 1.0) * (1.0 + d / std::sqrt(d * d + 4.0 * v));
}

SrgParams etf_params_to_srg_params(const EtfShape& shape) {
  const double real_k = srg_degree_for_shape(static_cast<double>(shape.m), static_cast<double>(shape.n));
  SrgParams p;
  p.v = static_cast<std::int64_t>(shape.n) - 1;
  p.k = round_integral(real_k, Errc::NonIntegralDegree, "degree k");
  if (p.k % 2 != 0) {
    throw Error(Errc::OddDegree, "degree k = " + std::to_string(p.k) + " is odd, so mu = k/2 fails");
  }
  const std::int64_t twice_lambda = 3 * p.k - p.v - 1;
  p.lambda_vacuous = p.k == 0;
  p.mu_vacuous = p.k == p.v - 1;
  p.mu = p.mu_vacuous ? 0 : p.k / 2;
  if (p.lambda_vacuous) {
    p.lambda = 0;
  } else {
    if (twice_lambda % 2 != 0) {
      throw Error(Errc::NonIntegralDegree,
                  "lambda = (3k-v-1)/2 = " + std::to_string(twice_lambda) + "/2 is not an integer");
    }
    p.lambda = twice_lambda / 2;
    if (p.lambda < 0) {
      throw Error(Errc::NegativeParameter, "lambda = " + std::to_string(p.lambda) + " is negative");
    }
  }
  return p;
}

EtfShape srg_params_to_etf_params(std::int64_t v, std::int64_t k) {
  if (v < 1 || k < 0 || k > v - 1) {
    throw Error(Errc::InvalidArgument,
                "need v >= 1 and 0 <= k <= v-1, got v=" + std::to_string(v) + ", k=" + std::to_string(k));
  }
  const double real_m = etf_dimension_for_graph(static_cast<double>(v), static_cast<double>(k));
  const std::int64_t m = round_integral(real_m, Errc::NonIntegralDimension, "dimension m");
  return EtfShape(static_cast<std::size_t>(m), static_cast<std::size_t>(v + 1));
}

bool is_etf_eligible(const SrgParams& p) {
  if (p.mu_vacuous) return p.k == 0;
  return 2 * p.mu == p.k;
}

double beta_plus(std::int64_t v, std::int64_t k) {
  const double vd = static_cast<double>(v);
  const double d = static_cast<double>(v - 2 * k - 1);
  const double s = std::sqrt(d * d + 4.0 * vd);
  return d >= 0.0 ? 2.0 / (d + s) : (s - d) / (2.0 * vd);
}

double beta_minus(std::int64_t v, std::int64_t k) {
  const double vd = static_cast<double>(v);
  const double d = static_cast<double>(v - 2 * k - 1);
  const double s = std::sqrt(d * d + 4.0 * vd);
  return d >= 0.0 ? -(d + s) / (2.0 * vd) : -2.0 / (s - d);
}

std::pair<AdjacencyMatrix, ConversionReport> etf_gram_to_srg(const SymMatrixd& g, double tol) {
  GramSummary summary;
  try {
    summary = verify_etf_gram(g, tol);
  } catch (const Error& e) {
    throw Error(Errc::NotAnEtf, e.what(), e.witness());
  }
  if (summary.m == summary.n) {
    throw Error(Errc::BetaZero, "an orthonormal basis (beta = 0) has no associated graph");
  }
  const EtfShape shape(summary.m, summary.n);
  const SrgParams expected = etf_params_to_srg_params(shape);

  auto [normalized, signs] = sign_normalize(g, summary);
  const double beta = summary.beta;
  const Eigen::Index n = g.size();

  // A = G/(2 beta) - (beta+1)/(2 beta) I + J/2, rounded to 0/1.
  IntMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = normalized(i, j) / (2.0 * beta) - (i == j ? (beta + 1.0) / (2.0 * beta) : 0.0) + 0.5;
      const double r = std::round(x);
      if (std::abs(x - r) > kIntegralityTolerance || (r != 0.0 && r != 1.0)) {
        throw Error(Errc::InternalInconsistency,
                    "converted entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") = " + std::to_string(x) + " is not 0 or 1",
                    Error::Witness{i, j});
      }
      a(i, j) = static_cast<std::int64_t>(r);
    }
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    if (a(0, i) != 1) throw Error(Errc::InternalInconsistency, "first row is not all ones after switching");
  }

  AdjacencyMatrix b(a.bottomRightCorner(n - 1, n - 1));
  SrgParams params;
  try {
    params = verify_srg(b);
  } catch (const Error& e) {
    throw Error(Errc::InternalInconsistency, std::string("derived graph: ") + e.what(), e.witness());
  }
  if (!(params == expected)) {
    throw Error(Errc::InternalInconsistency,
                "derived graph has parameters (" + std::to_string(params.v) + "," +
                    std::to_string(params.k) + "," + std::to_string(params.lambda) + "," +
                    std::to_string(params.mu) + "), expected (" + std::to_string(expected.v) + "," +
                    std::to_string(expected.k) + "," + std::to_string(expected.lambda) + "," +
                    std::to_string(expected.mu) + ")");
  }

  ConversionReport report;
  report.shape = shape;
  report.params = params;
  report.beta = beta;
  report.alpha = summary.alpha;
  report.signs = std::move(signs);
  return {std::move(b), std::move(report)};
}

std::pair<AdjacencyMatrix, ConversionReport> etf_to_srg(const RectMatrixd& phi, double tol) {
  return etf_gram_to_srg(gram(phi), tol);
}

std::pair<SymMatrixd, ConversionReport> srg_to_etf_gram(const AdjacencyMatrix& b, double tol) {
  return srg_to_etf_gram_impl(b, Root::Plus, tol);
}

std::pair<SymMatrixd, ConversionReport> srg_to_etf_gram_minus(const AdjacencyMatrix& b, double tol) {
  return srg_to_etf_gram_impl(b, Root::Minus, tol);
}

}  // namespace etfkit
