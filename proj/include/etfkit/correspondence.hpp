#pragma once

// Real ETFs with n vectors <-> strongly regular graphs on n-1 vertices with
// mu = k/2.
//
// Frame to graph: switch the frame so that <phi_1, phi_i> = +beta for all i,
// map the Gram matrix entrywise (+beta -> 1, -beta -> 0, diagonal -> 0) and
// delete vertex 1. Graph to frame: for an eligible SRG B and a root beta of
// v beta^2 + (v-2k-1) beta - 1 = 0, the matrix
//
//     G = [ 1        beta 1^T                      ]
//         [ beta 1   2 beta B + (beta+1) I - beta J ]
//
// satisfies G^2 = (v beta^2 + 1) G and is an ETF Gram matrix. The positive
// root gives the canonical dimension
//
//     m = (v+1)/2 * (1 + d / sqrt(d^2 + 4v)),   d = v - 2k - 1,
//
// and the negative root gives its Naimark partner n - m.

#include <cstddef>
#include <utility>

#include "etfkit/frames.hpp"
#include "etfkit/graphs.hpp"

namespace etfkit {

/// Dimensions of an m x n frame with 1 <= m < n.
struct EtfShape {
  std::size_t m = 0;
  std::size_t n = 0;

  EtfShape() = default;
  EtfShape(std::size_t m_, std::size_t n_);

  friend bool operator==(const EtfShape&, const EtfShape&) = default;
};

struct ConversionReport {
  EtfShape shape;
  SrgParams params;
  double beta = 0.0;   // signed root actually used
  double alpha = 0.0;  // v beta^2 + 1
  SignPattern signs = SignPattern::all_positive(0);
};

/// Real-valued forms of the two changes of variables. They are mutually
/// inverse for n > max(m, 1) and v > 0.
double srg_degree_for_shape(double m, double n);
double etf_dimension_for_graph(double v, double k);

/// Graph parameters forced by an m x n real ETF. Graphs with k = 0 or
/// k = v - 1 carry the corresponding vacuous flag.
SrgParams etf_params_to_srg_params(const EtfShape& shape);

/// The unique ETF shape an SRG on v vertices with degree k can produce.
EtfShape srg_params_to_etf_params(std::int64_t v, std::int64_t k);

/// 2 mu == k. A graph with vacuous mu only qualifies when k == 0.
bool is_etf_eligible(const SrgParams& p);

/// Positive ("+") and negative ("-") roots of v b^2 + (v-2k-1) b - 1 = 0.
double beta_plus(std::int64_t v, std::int64_t k);
double beta_minus(std::int64_t v, std::int64_t k);

/// Frame to graph, starting from a Gram matrix or from a synthesis operator.
std::pair<AdjacencyMatrix, ConversionReport> etf_gram_to_srg(const SymMatrixd& g,
                                                             double tol = kDefaultEtfTolerance);
std::pair<AdjacencyMatrix, ConversionReport> etf_to_srg(const RectMatrixd& phi,
                                                        double tol = kDefaultEtfTolerance);

/// Graph to frame Gram matrix with the positive (canonical) root.
std::pair<SymMatrixd, ConversionReport> srg_to_etf_gram(const AdjacencyMatrix& b,
                                                        double tol = kDefaultEtfTolerance);

/// Same with the negative root; the result is the Naimark partner.
std::pair<SymMatrixd, ConversionReport> srg_to_etf_gram_minus(const AdjacencyMatrix& b,
                                                              double tol = kDefaultEtfTolerance);

}  // namespace etfkit
