#include "etfkit/graphs.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace etfkit {

namespace {

std::string pair_text(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::int64_t round_integral(double x, Errc code, const char* what) {
  const double r = std::round(x);
  if (!std::isfinite(x) || std::abs(x - r) > kIntegralityTolerance) {
    throw Error(code, std::string(what) + " " + std::to_string(x) + " is not an integer");
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw Error(Errc::NotAdjacency, "adjacency matrix must be square and non-empty");
  }
  const Eigen::Index v = entries_.rows();
  for (Eigen::Index i = 0; i < v; ++i) {
    if (entries_(i, i) != 0) {
      throw Error(Errc::NotAdjacency, "nonzero diagonal at vertex " + std::to_string(i + 1),
                  Error::Witness{i, i});
    }
    for (Eigen::Index j = i + 1; j < v; ++j) {
      const auto x = entries_(i, j);
      if ((x != 0 && x != 1) || x != entries_(j, i)) {
        throw Error(Errc::NotAdjacency, "entry " + pair_text(i, j) + " is not a symmetric 0/1 value",
                    Error::Witness{i, j});
      }
    }
  }
}

SrgParams verify_srg(const AdjacencyMatrix& a) {
  const IntMatrix& adj = a.entries();
  const Eigen::Index v = adj.rows();
  const IntMatrix sq = adj * adj;

  SrgParams p;
  p.v = v;
  p.k = sq(0, 0);
  for (Eigen::Index i = 1; i < v; ++i) {
    if (sq(i, i) != p.k) {
      throw Error(Errc::NotRegular,
                  "vertex 1 has degree " + std::to_string(p.k) + " but vertex " +
                      std::to_string(i + 1) + " has degree " + std::to_string(sq(i, i)),
                  Error::Witness{0, i});
    }
  }

  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  for (Eigen::Index i = 0; i < v; ++i) {
    for (Eigen::Index j = i + 1; j < v; ++j) {
      auto& slot = a.adjacent(i, j) ? lambda : mu;
      if (!slot) {
        slot = sq(i, j);
      } else if (*slot != sq(i, j)) {
        throw Error(Errc::NotStronglyRegular,
                    std::string(a.adjacent(i, j) ? "adjacent" : "non-adjacent") + " pair " +
                        pair_text(i, j) + " has " + std::to_string(sq(i, j)) +
                        " common neighbours, expected " + std::to_string(*slot),
                    Error::Witness{i, j});
      }
    }
  }
  p.lambda = lambda.value_or(0);
  p.mu = mu.value_or(0);
  p.lambda_vacuous = !lambda.has_value();
  p.mu_vacuous = !mu.has_value();
  return p;
}

bool check_parameter_relation(const SrgParams& p) {
  return p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu;
}

SrgSpectrum spectrum(const SrgParams& p) {
  const double diff = static_cast<double>(p.lambda - p.mu);
  const double disc = diff * diff + 4.0 * static_cast<double>(p.k - p.mu);
  if (!(disc > 0.0)) {
    throw Error(Errc::DegenerateDiscriminant,
                "(lambda-mu)^2 + 4(k-mu) = " + std::to_string(disc) + " is not positive");
  }
  const double root = std::sqrt(disc);
  const double v1 = static_cast<double>(p.v - 1);
  const double skew = (2.0 * static_cast<double>(p.k) + v1 * diff) / root;

  SrgSpectrum s;
  s.degree_eigenvalue = static_cast<double>(p.k);
  s.gamma_plus = 0.5 * (diff + root);
  s.gamma_minus = 0.5 * (diff - root);
  s.mult_plus = round_integral(0.5 * (v1 - skew), Errc::NonIntegralMultiplicity, "multiplicity m+ =");
  s.mult_minus = round_integral(0.5 * (v1 + skew), Errc::NonIntegralMultiplicity, "multiplicity m- =");
  if (s.mult_plus < 0 || s.mult_minus < 0) {
    throw Error(Errc::NonIntegralMultiplicity, "negative multiplicity");
  }
  return s;
}

AdjacencyMatrix complement(const AdjacencyMatrix& a) {
  const Eigen::Index v = a.vertex_count();
  return AdjacencyMatrix(IntMatrix::Ones(v, v) - a.entries() - IntMatrix::Identity(v, v));
}

SrgParams complement_params(const SrgParams& p) {
  SrgParams c;
  c.v = p.v;
  c.k = p.v - p.k - 1;
  c.lambda_vacuous = p.mu_vacuous;
  c.mu_vacuous = p.lambda_vacuous;
  c.lambda = c.lambda_vacuous ? 0 : p.v - 2 * p.k + p.mu - 2;
  c.mu = c.mu_vacuous ? 0 : p.v - 2 * p.k + p.lambda;
  if (c.k < 0 || c.lambda < 0 || c.mu < 0) {
    throw Error(Errc::NegativeParameter,
                "complement parameters (" + std::to_string(c.v) + "," + std::to_string(c.k) + "," +
                    std::to_string(c.lambda) + "," + std::to_string(c.mu) + ") are negative");
  }
  return c;
}

}  // namespace etfkit
