#include "etfkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace etfkit::io {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": " + what);
  }
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

template <typename T>
bool parse_number(const std::string& tok, T& out) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::int64_t parse_positive(const LineReader& r, const std::string& tok, const char* what) {
  std::int64_t x = 0;
  if (!parse_number(tok, x) || x < 1) r.fail(std::string("bad ") + what + " '" + tok + "'");
  return x;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

RectMatrixd read_matrix(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing 'rows cols' header");
  const auto header = split(line);
  if (header.size() != 2) r.fail("header must be 'rows cols', got '" + line + "'");
  const auto rows = parse_positive(r, header[0], "row count");
  const auto cols = parse_positive(r, header[1], "column count");

  RectMatrixd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!r.next(line)) r.fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    const auto tokens = split(line);
    if (static_cast<Eigen::Index>(tokens.size()) != cols) {
      r.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      double x = 0.0;
      if (!parse_number(tokens[static_cast<std::size_t>(j)], x)) {
        r.fail("bad entry '" + tokens[static_cast<std::size_t>(j)] + "'");
      }
      m(i, j) = x;
    }
  }
  if (r.next(line)) r.fail("unexpected trailing content '" + line + "'");
  return m;
}

void write_matrix(std::ostream& out, const RectMatrixd& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

AdjacencyMatrix read_graph(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("missing vertex-count header");
  const auto header = split(line);
  if (header.size() != 1) r.fail("header must be a single vertex count, got '" + line + "'");
  const auto v = parse_positive(r, header[0], "vertex count");

  IntMatrix a = IntMatrix::Zero(v, v);
  while (r.next(line)) {
    const auto tokens = split(line);
    if (tokens.size() != 2) r.fail("edge must be 'i j', got '" + line + "'");
    std::int64_t i = 0;
    std::int64_t j = 0;
    if (!parse_number(tokens[0], i)) r.fail("bad vertex '" + tokens[0] + "'");
    if (!parse_number(tokens[1], j)) r.fail("bad vertex '" + tokens[1] + "'");
    if (i < 1 || i > v) r.fail("vertex " + tokens[0] + " outside [1, " + std::to_string(v) + "]");
    if (j < 1 || j > v) r.fail("vertex " + tokens[1] + " outside [1, " + std::to_string(v) + "]");
    if (i >= j) r.fail("edge '" + line + "' must satisfy i < j");
    if (a(i - 1, j - 1)) r.fail("duplicate edge '" + line + "'");
    a(i - 1, j - 1) = a(j - 1, i - 1) = 1;
  }
  return AdjacencyMatrix(std::move(a));
}

void write_graph(std::ostream& out, const AdjacencyMatrix& a) {
  const Eigen::Index v = a.vertex_count();
  out << v << '\n';
  for (Eigen::Index i = 0; i < v; ++i)
    for (Eigen::Index j = i + 1; j < v; ++j)
      if (a.adjacent(i, j)) out << i + 1 << ' ' << j + 1 << '\n';
}

RectMatrixd read_matrix_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_matrix(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_matrix_file(const std::filesystem::path& path, const RectMatrixd& m) {
  auto out = open_out(path);
  write_matrix(out, m);
  if (!out.flush()) throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

AdjacencyMatrix read_graph_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_graph(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_graph_file(const std::filesystem::path& path, const AdjacencyMatrix& a) {
  auto out = open_out(path);
  write_graph(out, a);
  if (!out.flush()) throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

Record& Record::add(std::string key, Value value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

void Record::write_text(std::ostream& out) const {
  for (const auto& [key, value] : fields_) {
    out << key << " = ";
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>) {
            out << format_double(x);
          } else if constexpr (std::is_same_v<T, bool>) {
            out << (x ? "true" : "false");
          } else {
            out << x;
          }
        },
        value);
    out << '\n';
  }
}

void Record::write_json(std::ostream& out) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields_) {
    std::visit([&](const auto& x) { j[key] = x; }, value);
  }
  out << j.dump(2) << '\n';
}

}  // namespace etfkit::io
