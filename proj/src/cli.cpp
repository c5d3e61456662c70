#include "etfkit/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "etfkit/correspondence.hpp"
#include "etfkit/frames.hpp"
#include "etfkit/generators.hpp"
#include "etfkit/graphs.hpp"
#include "etfkit/io.hpp"

namespace etfkit::cli {

namespace {

double tolerance_from_env() {
  const char* raw = std::getenv("ETFKIT_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultEtfTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (*end != '\0' || !(tol > 0.0)) {
    throw Error(Errc::Usage, std::string("ETFKIT_TOL='") + raw + "' is not a positive number");
  }
  return tol;
}

enum class MatrixKind { Auto, Frame, Gram };

// A square, exactly symmetric matrix with unit diagonal is read as a Gram
// matrix. The only frame with those properties and orthonormal rows is the
// identity, whose Gram matrix is itself, so the guess cannot change a verdict
// on a genuine ETF.
bool looks_like_gram(const RectMatrixd& x, double tol) {
  if (x.rows() != x.cols()) return false;
  if (x != x.transpose()) return false;
  return (x.diagonal().array() - 1.0).abs().maxCoeff() <= tol;
}

struct LoadedEtf {
  SymMatrixd gram;
  bool was_frame;
};

LoadedEtf load_etf(const std::string& path, MatrixKind kind, double tol) {
  const RectMatrixd x = io::read_matrix_file(path);
  const bool as_gram = kind == MatrixKind::Gram || (kind == MatrixKind::Auto && looks_like_gram(x, tol));
  if (as_gram) {
    try {
      return {SymMatrixd(x), false};
    } catch (const Error& e) {
      throw Error(Errc::NotAnEtf, path + ": " + e.detail());
    }
  }
  return {gram(x), true};
}

GramSummary verify_or_not_etf(const SymMatrixd& g, double tol) {
  try {
    return verify_etf_gram(g, tol);
  } catch (const Error& e) {
    throw Error(Errc::NotAnEtf, e.what(), e.witness());
  }
}

SrgParams verify_or_not_srg(const AdjacencyMatrix& a) {
  try {
    return verify_srg(a);
  } catch (const Error& e) {
    throw Error(Errc::NotAnSrg, e.what(), e.witness());
  }
}

io::Record::Value constrained(std::int64_t value, bool vacuous) {
  if (vacuous) return std::string("vacuous");
  return value;
}

void add_graph_fields(io::Record& r, const SrgParams& p) {
  r.add("v", p.v)
      .add("k", p.k)
      .add("lambda", constrained(p.lambda, p.lambda_vacuous))
      .add("mu", constrained(p.mu, p.mu_vacuous))
      .add("deviation", p.deviation())
      .add("eligible", is_etf_eligible(p));
}

void add_frame_fields(io::Record& r, const EtfShape& shape) {
  r.add("m", static_cast<std::int64_t>(shape.m))
      .add("n", static_cast<std::int64_t>(shape.n))
      .add("alpha", static_cast<double>(shape.n) / static_cast<double>(shape.m))
      .add("beta", welch_bound(shape.m, shape.n));
}

io::Record report_record(const ConversionReport& report) {
  io::Record r;
  add_graph_fields(r, report.params);
  r.add("m", static_cast<std::int64_t>(report.shape.m))
      .add("n", static_cast<std::int64_t>(report.shape.n))
      .add("alpha", report.alpha)
      .add("beta", report.beta);
  return r;
}

io::Record graph_record(const SrgParams& p) {
  io::Record r;
  add_graph_fields(r, p);
  if (is_etf_eligible(p)) add_frame_fields(r, srg_params_to_etf_params(p.v, p.k));
  return r;
}

// Parameters (v, k, (3k-v-1)/2, k/2) for `params srg`; lambda and mu are
// printed as decimals when they are not integers.
io::Record degree_record(std::int64_t v, std::int64_t k) {
  const EtfShape shape = srg_params_to_etf_params(v, k);
  io::Record r;
  try {
    const SrgParams p = etf_params_to_srg_params(shape);
    if (p.v != v || p.k != k) throw Error(Errc::InternalInconsistency, "parameter round trip failed");
    add_graph_fields(r, p);
  } catch (const Error& e) {
    if (e.code() == Errc::InternalInconsistency) throw;
    const auto half = [](std::int64_t twice) -> io::Record::Value {
      if (twice % 2 == 0) return twice / 2;
      return static_cast<double>(twice) / 2.0;
    };
    r.add("v", v)
        .add("k", k)
        .add("lambda", half(3 * k - v - 1))
        .add("mu", half(k))
        .add("deviation", v - 2 * k - 1)
        .add("eligible", false);
  }
  add_frame_fields(r, shape);
  return r;
}

struct Emitter {
  std::ostream& out;
  bool json = false;
  void operator()(const io::Record& r) const {
    if (json) {
      r.write_json(out);
    } else {
      r.write_text(out);
    }
  }
};

std::size_t positive_size(std::int64_t x, const char* name) {
  if (x < 1) throw Error(Errc::Usage, std::string(name) + " must be positive, got " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equiangular tight frames and strongly regular graphs", "etfkit"};
  app.require_subcommand(1);

  bool json = false;
  std::string input;
  std::string output;
  bool minus = false;
  bool gram_only = false;
  MatrixKind kind = MatrixKind::Auto;
  const std::map<std::string, MatrixKind> kinds{
      {"auto", MatrixKind::Auto}, {"frame", MatrixKind::Frame}, {"gram", MatrixKind::Gram}};
  std::int64_t first = 0;
  std::int64_t second = 0;
  std::string params_side;
  std::vector<std::string> generate_args;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "Emit the record as JSON"); };
  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--as", kind, "Read the matrix as a frame, a Gram matrix, or guess (default)")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  };
  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Output file")->required(); };

  auto* verify_etf_cmd = app.add_subcommand("verify-etf", "Check that a frame or Gram matrix is an ETF");
  verify_etf_cmd->add_option("matrix", input, "Matrix file")->required();
  add_kind(verify_etf_cmd);
  add_json(verify_etf_cmd);

  auto* verify_srg_cmd = app.add_subcommand("verify-srg", "Check that a graph is strongly regular");
  verify_srg_cmd->add_option("graph", input, "Graph file")->required();
  add_json(verify_srg_cmd);

  auto* etf_to_srg_cmd = app.add_subcommand("etf-to-srg", "Convert a real ETF into its SRG on n-1 vertices");
  etf_to_srg_cmd->add_option("matrix", input, "Matrix file")->required();
  add_output(etf_to_srg_cmd);
  add_kind(etf_to_srg_cmd);
  add_json(etf_to_srg_cmd);

  auto* srg_to_etf_cmd = app.add_subcommand("srg-to-etf", "Convert an SRG with mu = k/2 into a real ETF");
  srg_to_etf_cmd->add_option("graph", input, "Graph file")->required();
  add_output(srg_to_etf_cmd);
  srg_to_etf_cmd->add_flag("--minus", minus, "Use the negative root (Naimark partner)");
  srg_to_etf_cmd->add_flag("--gram-only", gram_only, "Write the Gram matrix instead of a frame");
  add_json(srg_to_etf_cmd);

  auto* params_cmd = app.add_subcommand("params", "Convert parameters: 'etf m n' or 'srg v k'");
  params_cmd->add_option("side", params_side, "etf or srg")->required()->check(CLI::IsMember({"etf", "srg"}));
  params_cmd->add_option("a", first, "m (etf) or v (srg)")->required();
  params_cmd->add_option("b", second, "n (etf) or k (srg)")->required();
  add_json(params_cmd);

  auto* naimark_cmd = app.add_subcommand("naimark", "Naimark complement of an ETF");
  naimark_cmd->add_option("matrix", input, "Matrix file")->required();
  add_output(naimark_cmd);
  add_kind(naimark_cmd);

  auto* complement_cmd = app.add_subcommand("complement", "Graph complement J - A - I");
  complement_cmd->add_option("graph", input, "Graph file")->required();
  add_output(complement_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Closed-form spectrum of an SRG");
  spectrum_cmd->add_option("graph", input, "Graph file")->required();
  add_json(spectrum_cmd);

  auto* generate_cmd = app.add_subcommand(
      "generate", "Write an instance: fixture6x16 | steiner-fano | steiner-pairs4 | paley <q>");
  generate_cmd->add_option("what", generate_args, "Instance name (and q for paley)")->required()->expected(1, 2);
  add_output(generate_cmd);

  auto* welch_cmd = app.add_subcommand("welch", "Welch bound for n unit vectors in dimension m");
  welch_cmd->add_option("m", first, "Dimension")->required();
  welch_cmd->add_option("n", second, "Vector count")->required();

  std::vector<const char*> argv{"etfkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Emitter emit{out, json};
  try {
    const double tol = tolerance_from_env();

    if (verify_etf_cmd->parsed()) {
      const LoadedEtf etf = load_etf(input, kind, tol);
      const GramSummary s = verify_or_not_etf(etf.gram, tol);
      io::Record r;
      r.add("m", static_cast<std::int64_t>(s.m))
          .add("n", static_cast<std::int64_t>(s.n))
          .add("alpha", s.alpha)
          .add("beta", s.beta)
          .add("welch", welch_bound(s.m, s.n));
      emit(r);
    } else if (verify_srg_cmd->parsed()) {
      emit(graph_record(verify_or_not_srg(io::read_graph_file(input))));
    } else if (etf_to_srg_cmd->parsed()) {
      const LoadedEtf etf = load_etf(input, kind, tol);
      auto [graph, report] = etf_gram_to_srg(etf.gram, tol);
      io::write_graph_file(output, graph);
      emit(report_record(report));
    } else if (srg_to_etf_cmd->parsed()) {
      const AdjacencyMatrix graph = io::read_graph_file(input);
      auto [g, report] = minus ? srg_to_etf_gram_minus(graph, tol) : srg_to_etf_gram(graph, tol);
      io::write_matrix_file(output, gram_only ? g.dense() : synthesize_from_gram(g, tol));
      emit(report_record(report));
    } else if (params_cmd->parsed()) {
      if (params_side == "etf") {
        const EtfShape shape(positive_size(first, "m"), positive_size(second, "n"));
        io::Record r;
        add_graph_fields(r, etf_params_to_srg_params(shape));
        add_frame_fields(r, shape);
        emit(r);
      } else {
        emit(degree_record(first, second));
      }
    } else if (naimark_cmd->parsed()) {
      const LoadedEtf etf = load_etf(input, kind, tol);
      const GramSummary s = verify_or_not_etf(etf.gram, tol);
      const SymMatrixd complement_gram = naimark_complement_gram(etf.gram, s);
      io::write_matrix_file(output, etf.was_frame ? synthesize_from_gram(complement_gram, tol)
                                                  : complement_gram.dense());
    } else if (complement_cmd->parsed()) {
      io::write_graph_file(output, complement(io::read_graph_file(input)));
    } else if (spectrum_cmd->parsed()) {
      const SrgParams p = verify_or_not_srg(io::read_graph_file(input));
      const SrgSpectrum s = spectrum(p);
      io::Record r;
      r.add("v", p.v)
          .add("k", p.k)
          .add("lambda", constrained(p.lambda, p.lambda_vacuous))
          .add("mu", constrained(p.mu, p.mu_vacuous))
          .add("gamma_plus", s.gamma_plus)
          .add("gamma_minus", s.gamma_minus)
          .add("mult_plus", s.mult_plus)
          .add("mult_minus", s.mult_minus);
      emit(r);
    } else if (generate_cmd->parsed()) {
      const std::string& what = generate_args.front();
      const bool is_paley = what == "paley";
      if (generate_args.size() != (is_paley ? 2u : 1u)) {
        throw Error(Errc::Usage, is_paley ? "paley needs a prime q" : "'" + what + "' takes no argument");
      }
      if (what == "fixture6x16") {
        io::write_matrix_file(output, fixture_6x16());
      } else if (what == "steiner-fano") {
        io::write_matrix_file(output, steiner_etf(fano_plane()));
      } else if (what == "steiner-pairs4") {
        io::write_matrix_file(output, steiner_etf(pairs_design(4)));
      } else if (is_paley) {
        std::int64_t q = 0;
        try {
          std::size_t used = 0;
          q = std::stoll(generate_args[1], &used);
          if (used != generate_args[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(Errc::Usage, "bad paley order '" + generate_args[1] + "'");
        }
        io::write_graph_file(output, paley(q));
      } else {
        throw Error(Errc::Usage, "unknown instance '" + what + "'");
      }
    } else if (welch_cmd->parsed()) {
      out << io::format_double(welch_bound(positive_size(first, "m"), positive_size(second, "n"))) << '\n';
    }
  } catch (const Error& e) {
    err << "etfkit: error: " << e.what() << '\n';
    const bool usage_like = is_io_or_usage(e.code()) || e.code() == Errc::InvalidArgument ||
                            e.code() == Errc::InvalidShape;
    return usage_like ? 2 : 1;
  } catch (const std::exception& e) {
    err << "etfkit: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace etfkit::cli
