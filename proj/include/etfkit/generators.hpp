#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "etfkit/graphs.hpp"
#include "etfkit/linalg.hpp"

namespace etfkit {

/// 2-design with every pair of points in exactly one block. Points are
/// 0-based; blocks are sorted point lists.
struct BlockDesign {
  int points = 0;
  std::vector<std::vector<int>> blocks;
  int replication = 0;
  int block_size = 0;
};

/// Checks the pair-coverage and replication invariants and fills in the
/// replication number and block size. Throws InvalidDesign.
BlockDesign make_block_design(int points, std::vector<std::vector<int>> blocks);

BlockDesign fano_plane();
BlockDesign pairs_design(int points);

class HadamardMatrix {
 public:
  explicit HadamardMatrix(IntMatrix entries);
  Eigen::Index order() const noexcept { return entries_.rows(); }
  const IntMatrix& entries() const noexcept { return entries_; }

 private:
  IntMatrix entries_;
};

HadamardMatrix sylvester_hadamard(int t);

/// Integer numerators of the 6x16 Steiner ETF; the frame is these over sqrt(3).
const std::array<std::array<int, 16>, 6>& fixture_6x16_numerators();
RectMatrixd fixture_6x16();

/// b x (points * (r+1)) Steiner ETF: the columns belonging to a point carry the
/// non-constant rows of a Sylvester-Hadamard matrix of order r+1, placed on the
/// rows of the blocks through that point, scaled by 1/sqrt(r).
RectMatrixd steiner_etf(const BlockDesign& design);

bool is_prime(std::int64_t q);

/// Paley graph on Z_q: i ~ j iff i - j is a nonzero square mod q.
AdjacencyMatrix paley(std::int64_t q);

}  // namespace etfkit
