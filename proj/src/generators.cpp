#include "etfkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace etfkit {

BlockDesign make_block_design(int points, std::vector<std::vector<int>> blocks) {
  if (points < 2) throw Error(Errc::InvalidDesign, "a design needs at least two points");
  if (blocks.empty()) throw Error(Errc::InvalidDesign, "a design needs at least one block");

  IntMatrix pair_count = IntMatrix::Zero(points, points);
  std::vector<int> replication(static_cast<std::size_t>(points), 0);
  const auto block_size = static_cast<int>(blocks.front().size());
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (static_cast<int>(block.size()) != block_size) {
      throw Error(Errc::InvalidDesign, "blocks have different sizes");
    }
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw Error(Errc::InvalidDesign, "block repeats a point");
    }
    for (int p : block) {
      if (p < 0 || p >= points) throw Error(Errc::InvalidDesign, "point " + std::to_string(p) + " out of range");
      ++replication[static_cast<std::size_t>(p)];
    }
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) ++pair_count(block[i], block[j]);
  }
  for (int i = 0; i < points; ++i) {
    for (int j = i + 1; j < points; ++j) {
      if (pair_count(i, j) != 1) {
        throw Error(Errc::InvalidDesign, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                             " share " + std::to_string(pair_count(i, j)) + " blocks",
                    Error::Witness{static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
      }
    }
  }
  if (std::adjacent_find(replication.begin(), replication.end(), std::not_equal_to<>()) != replication.end()) {
    throw Error(Errc::InvalidDesign, "points lie in different numbers of blocks");
  }
  return BlockDesign{points, std::move(blocks), replication.front(), block_size};
}

BlockDesign fano_plane() {
  return make_block_design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

BlockDesign pairs_design(int points) {
  if (points < 2) throw Error(Errc::InvalidArgument, "pairs design needs p >= 2");
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) blocks.push_back({i, j});
  return make_block_design(points, std::move(blocks));
}

HadamardMatrix::HadamardMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const Eigen::Index n = entries_.rows();
  if (n < 1 || n != entries_.cols() || (entries_.array().abs() != 1).any()) {
    throw Error(Errc::InvalidArgument, "Hadamard entries must form a square +-1 matrix");
  }
  if (entries_ * entries_.transpose() != n * IntMatrix::Identity(n, n)) {
    throw Error(Errc::InvalidArgument, "rows are not orthogonal");
  }
}

HadamardMatrix sylvester_hadamard(int t) {
  if (t < 0 || t > 20) throw Error(Errc::InvalidArgument, "Sylvester order 2^t needs 0 <= t <= 20");
  IntMatrix h = IntMatrix::Ones(1, 1);
  for (int step = 0; step < t; ++step) {
    const Eigen::Index s = h.rows();
    IntMatrix next(2 * s, 2 * s);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return HadamardMatrix(std::move(h));
}

const std::array<std::array<int, 16>, 6>& fixture_6x16_numerators() {
  static const std::array<std::array<int, 16>, 6> rows{{
      {1, -1, 1, -1, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 1, -1, 1, -1},
      {1, 1, -1, -1, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 1, 1, -1, -1},
      {1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1},
      {0, 0, 0, 0, 1, -1, -1, 1, 1, -1, -1, 1, 0, 0, 0, 0},
  }};
  return rows;
}

RectMatrixd fixture_6x16() {
  const auto& rows = fixture_6x16_numerators();
  RectMatrixd phi(6, 16);
  const double scale = 1.0 / std::sqrt(3.0);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) phi(i, j) = rows[i][j] * scale;
  return phi;
}

RectMatrixd steiner_etf(const BlockDesign& design) {
  const int r = design.replication;
  const int order = r + 1;
  if (order < 2 || (order & (order - 1)) != 0) {
    throw Error(Errc::UnsupportedHadamardOrder,
                "no Sylvester-Hadamard matrix of order r+1 = " + std::to_string(order));
  }
  int t = 0;
  while ((1 << t) < order) ++t;
  const IntMatrix h = sylvester_hadamard(t).entries();

  const auto b = static_cast<Eigen::Index>(design.blocks.size());
  RectMatrixd phi = RectMatrixd::Zero(b, design.points * order);
  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  for (int point = 0; point < design.points; ++point) {
    // Row 0 of a Sylvester matrix is all ones; rows 1..r are used.
    int h_row = 1;
    for (Eigen::Index block = 0; block < b; ++block) {
      const auto& members = design.blocks[static_cast<std::size_t>(block)];
      if (!std::binary_search(members.begin(), members.end(), point)) continue;
      for (int c = 0; c < order; ++c) phi(block, point * order + c) = scale * static_cast<double>(h(h_row, c));
      ++h_row;
    }
  }
  return phi;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

AdjacencyMatrix paley(std::int64_t q) {
  if (q > 1000000 || !is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime <= 10^6");
  if (q % 4 != 1) {
    throw Error(Errc::WrongResidueClass, std::to_string(q) + " is not 1 mod 4, so the relation is not symmetric");
  }
  std::vector<char> square(static_cast<std::size_t>(q), 0);
  for (std::int64_t x = 1; x < q; ++x) square[static_cast<std::size_t>(x * x % q)] = 1;
  IntMatrix a = IntMatrix::Zero(q, q);
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j)
      if (i != j && square[static_cast<std::size_t>(((i - j) % q + q) % q)]) a(i, j) = 1;
  return AdjacencyMatrix(std::move(a));
}

}  // namespace etfkit
