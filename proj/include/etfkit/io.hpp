#pragma once

// Text formats.
//
// Matrix file:  "rows cols" header, then rows of whitespace-separated decimals.
// Graph file:   "v" header, then one "i j" edge per line, 1-based, i < j.
// Params record: "key = value" lines in the fixed order
//               v, k, lambda, mu, deviation, eligible, m, n, alpha, beta.
//
// Decimals are written in the shortest form that parses back to the same
// double (at most 17 significant digits), so files round-trip exactly.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "etfkit/graphs.hpp"
#include "etfkit/linalg.hpp"

namespace etfkit::io {

std::string format_double(double x);

RectMatrixd read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const RectMatrixd& m);

AdjacencyMatrix read_graph(std::istream& in);
void write_graph(std::ostream& out, const AdjacencyMatrix& a);

RectMatrixd read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const RectMatrixd& m);
AdjacencyMatrix read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const AdjacencyMatrix& a);

/// Ordered key/value record. Values are pre-formatted: integers, booleans,
/// shortest-round-trip decimals, or the word "vacuous".
class Record {
 public:
  using Value = std::variant<std::int64_t, double, bool, std::string>;

  Record& add(std::string key, Value value);
  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

  void write_text(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace etfkit::io
