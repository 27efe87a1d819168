#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgq/quantization.hpp"
#include "pgq/symbol_parser.hpp"
#include "pgq/verify.hpp"

namespace pgq::cli {

namespace {

using Json = nlohmann::ordered_json;

double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json complex_json(Complex c) { return Json::array({clean(c.real()), clean(c.imag())}); }

Json complex_rows(const MatrixC& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", clean(x));
  return buf;
}

Json header(const RunConfig& config, const WeightSeq& w) {
  Json j;
  j["l"] = w.order();
  j["q"] = complex_json(config.q);
  j["weights"] = w.values();
  return j;
}

void write_complex_csv(std::ostream& os, const MatrixC& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << num(m(r, c).real()) << ',' << num(m(r, c).imag());
    }
    os << '\n';
  }
}

/// Options shared by every subcommand.
void add_common(CLI::App& sub, RunConfig& config, bool with_format = true) {
  sub.add_option("--l", config.order, "Order l of the algebra (l >= 2)");
  sub.add_option("--q", config.q_text, "Deformation parameter, e.g. 2, -0.5, 0+1i")->capture_default_str();
  sub.add_option("--weights", config.weights_text,
                 "Comma list of positive weights or a preset: ones, factorial, qfactorial, rand1..rand3")
      ->capture_default_str();
  sub.add_option("--tol", config.tolerance, "Relative tolerance")->capture_default_str();
  if (with_format) {
    sub.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }
  sub.add_option("--output,-o", config.output_path, "Write to this file instead of standard output");
}

bool is_preset(const std::string& text) {
  return text == "ones" || text == "factorial" || text == "qfactorial" || text == "rand1" ||
         text == "rand2" || text == "rand3";
}

/// Resolves q and the optional seed override; throws ConfigError.
void finalize(RunConfig& config) {
  try {
    config.q = parse_complex(config.q_text);
  } catch (const ParseError& e) {
    throw ConfigError("invalid --q value\n" + e.render(config.q_text));
  }
  if (config.q == Complex(0.0)) throw ConfigError("q must be nonzero");
  if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (const char* env = std::getenv("PG_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("PG_SEED is not an unsigned integer: ") + env);
    }
  }
}

int order_of(const RunConfig& config, const WeightSeq& w) {
  if (config.order && *config.order != w.order()) {
    throw ConfigError("weights length must equal l");
  }
  return w.order();
}

struct Emitter {
  std::ostream& out;
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + path + "'");
    file << text;
  }
};

// -- matrix -----------------------------------------------------------------

struct MatrixArgs {
  std::string which;
  std::string symbol = "1";
  std::string basis = "monomial";
};

std::string cmd_matrix(RunConfig& config, const MatrixArgs& args) {
  const WeightSeq w = resolve_weights(config.weights_text, config.order, config.q);
  const int l = order_of(config, w);
  const AlgebraCtx ctx(l, config.q);

  PGElement g(l);
  try {
    g = from_free_expr(parse(args.symbol), ctx);
  } catch (const ParseError& e) {
    throw ConfigError("invalid --symbol\n" + e.render(args.symbol));
  }

  MatrixC m;
  std::string basis;
  if (args.which == "toeplitz") {
    const OperatorBH t = toeplitz(g, w, ctx);
    if (args.basis == "orthonormal") {
      m = t.to_orthonormal(w).matrix;
      basis = "orthonormal";
    } else {
      m = t.matrix;
      basis = "monomial";
    }
  } else if (args.which == "toeplitz-on") {
    m = toeplitz_orthonormal(g, w, ctx).matrix;
    basis = "orthonormal";
  } else if (args.which == "coherent") {
    m = coherent_quantization(g, w, ctx);
    basis = "orthonormal";
  } else if (args.which == "flat") {
    m = toeplitz_flat(g, w, ctx);
    basis = "orthonormal";
  } else if (args.which == "pk") {
    m = pk_operator(w).matrix;
    basis = "aw";
  } else if (args.which == "mult-left") {
    m = mult_operator(g, Side::Left, ctx).matrix;
    basis = "aw";
  } else {
    m = mult_operator(g, Side::Right, ctx).matrix;
    basis = "aw";
  }

  if (config.format == "csv") {
    std::ostringstream os;
    write_complex_csv(os, m);
    return os.str();
  }
  Json j = header(config, w);
  j["basis"] = basis;
  j["rows"] = complex_rows(m);
  return j.dump() + "\n";
}

// -- spectrum ---------------------------------------------------------------

std::string cmd_spectrum(RunConfig& config) {
  const WeightSeq w = resolve_weights(config.weights_text, config.order, config.q);
  const int l = order_of(config, w);
  const AlgebraCtx ctx(l, config.q);
  const LadderSet ladder = ladder_set(w, ctx);
  const std::vector<double> eigenvalues = number_spectrum(ladder);
  const double norm = operator_norm_bh(ladder.creation, w);
  double bound = 0.0;
  for (int a = 0; a < l; ++a) bound = std::max(bound, w.at(a + 1) / w.at(a));
  const int wick_rank = numerical_rank(wick_operator_set(ladder), config.tolerance);

  if (config.format == "csv") {
    std::ostringstream os;
    os << "quantity,index,value\n";
    for (int a = 0; a < l; ++a) os << "deformed_integer," << a << ',' << num(ladder.deformed_ints[a]) << '\n';
    for (int a = 0; a < l; ++a)
      os << "deformed_factorial," << a << ',' << num(ladder.deformed_factorials[a]) << '\n';
    for (int a = 0; a < l; ++a) os << "number_eigenvalue," << a << ',' << num(eigenvalues[a]) << '\n';
    os << "creation_norm,," << num(norm) << '\n';
    os << "creation_norm_squared_lower_bound,," << num(bound) << '\n';
    os << "wick_rank_probe,," << wick_rank << '\n';
    return os.str();
  }
  auto cleaned = [](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(clean(x));
    return a;
  };
  Json j = header(config, w);
  j["deformed_integers"] = cleaned(ladder.deformed_ints);
  j["deformed_factorials"] = cleaned(ladder.deformed_factorials);
  j["number_eigenvalues"] = cleaned(eigenvalues);
  j["creation_norm"] = norm;
  j["creation_norm_squared_lower_bound"] = bound;
  j["wick_rank_probe"] = {{"rank", wick_rank}, {"full_rank", wick_rank == l * l}, {"status", "informational"}};
  return j.dump() + "\n";
}

// -- gram -------------------------------------------------------------------

std::string cmd_gram(RunConfig& config) {
  const WeightSeq w = resolve_weights(config.weights_text, config.order, config.q);
  order_of(config, w);
  const GramMatrix g(w);
  if (config.format == "csv") {
    std::ostringstream os;
    const MatrixR& m = g.matrix();
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << num(m(r, c));
      os << '\n';
    }
    os << "determinant," << num(g.determinant()) << '\n';
    return os.str();
  }
  Json j = header(config, w);
  j["basis"] = "aw";
  Json rows = Json::array();
  for (int r = 0; r < g.matrix().rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.matrix().cols(); ++c) row.push_back(clean(g.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  j["determinant"] = clean(g.determinant());
  return j.dump() + "\n";
}

// -- verify -----------------------------------------------------------------

/// The default grid with each axis narrowed by --l, --q and --weights.
std::vector<GridPoint> verify_grid(const RunConfig& config, bool q_given, bool weights_given) {
  std::vector<int> orders;
  if (config.order) {
    orders.push_back(*config.order);
  } else if (weights_given && !is_preset(config.weights_text)) {
    orders.push_back(resolve_weights(config.weights_text, std::nullopt, config.q).order());
  } else {
    for (int l = 2; l <= 6; ++l) orders.push_back(l);
  }
  std::vector<QValue> qs = q_given ? std::vector<QValue>{{config.q, config.q_text}} : default_q_axis();
  std::vector<std::string> weight_ids =
      weights_given ? std::vector<std::string>{config.weights_text} : default_weight_ids();

  std::vector<GridPoint> grid;
  for (int l : orders)
    for (const auto& q : qs)
      for (const auto& id : weight_ids) {
        WeightSeq w = resolve_weights(id, l, q.value);
        grid.push_back(GridPoint{l, q.value, q.label, id, std::move(w)});
      }
  return grid;
}

std::string status_of(const CheckResult& r) {
  if (r.informational) return "info";
  if (r.expected_violation) return r.passed ? "expected-fail" : "FAIL";
  return r.passed ? "pass" : "FAIL";
}

std::string render_verify(const VerifyReport& report, const std::string& format) {
  if (format == "json") {
    Json records = Json::array();
    for (const auto& r : report.records) {
      Json rec;
      rec["check"] = r.name;
      rec["grid"] = r.grid_key;
      rec["residual"] = r.residual;
      rec["threshold"] = r.threshold;
      rec["status"] = status_of(r);
      if (!r.note.empty()) rec["note"] = r.note;
      records.push_back(std::move(rec));
    }
    Json j;
    j["records"] = records;
    j["summary"] = {{"total", report.records.size()}, {"passed", report.passed()}, {"failed", report.failed()}};
    j["exit_status"] = report.exit_status();
    return j.dump() + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "check,grid,residual,threshold,status\n";
    for (const auto& r : report.records) {
      os << r.name << ",\"" << r.grid_key << "\"," << num(r.residual) << ',' << num(r.threshold) << ','
         << status_of(r) << '\n';
    }
    return os.str();
  }

  // Text: one line per check with its worst residual over the grid, then
  // every failing grid point.
  std::ostringstream os;
  for (const auto& name : check_names()) {
    int points = 0;
    int failures = 0;
    int expected = 0;
    bool informational = false;
    double worst = 0.0;
    for (const auto& r : report.records) {
      if (r.name != name) continue;
      ++points;
      informational = informational || r.informational;
      if (r.expected_violation) {
        ++expected;
        if (!r.passed) ++failures;
        continue;
      }
      worst = std::max(worst, r.residual);
      if (!r.passed && !r.informational) ++failures;
    }
    if (points == 0) continue;
    char line[256];
    const char* status = informational ? "info" : failures ? "FAIL" : "pass";
    std::snprintf(line, sizeof line, "%-4s  %-36s points=%-4d max_residual=%.3e", status, name.c_str(), points,
                  worst);
    os << line;
    if (expected) os << "  expected-fail (q not real) at " << expected << " point(s)";
    os << '\n';
  }
  for (const auto& r : report.records) {
    if (r.passed || r.informational) continue;
    char line[256];
    std::snprintf(line, sizeof line, "FAIL  %s at [%s] residual=%.3e threshold=%.1e", r.name.c_str(),
                  r.grid_key.c_str(), r.residual, r.threshold);
    os << line;
    if (!r.note.empty()) os << " (" << r.note << ')';
    os << '\n';
  }
  os << "summary: " << report.passed() << " passed, " << report.failed() << " failed, "
     << report.records.size() << " total\n";
  return os.str();
}

}  // namespace

WeightSeq resolve_weights(const std::string& text, std::optional<int> order, Complex q) {
  try {
    if (is_preset(text)) {
      if (!order) throw ConfigError("--l is required with a weight preset");
      if (*order < 2) throw ConfigError("l must be at least 2");
      if (text == "ones") return WeightSeq::ones(*order);
      if (text == "factorial") return WeightSeq::factorial(*order);
      if (text == "qfactorial") return WeightSeq::q_factorial(*order, q);
      return grid_weights(text, *order);
    }
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
        throw ConfigError("invalid weight '" + item + "'");
      }
      values.push_back(v);
    }
    if (order && static_cast<int>(values.size()) != *order) {
      throw ConfigError("weights length must equal l");
    }
    return WeightSeq(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pgq: paragrassmann algebra operators, Toeplitz quantization and verification"};
  app.require_subcommand(1);

  RunConfig config;
  MatrixArgs matrix_args;
  std::string verify_format = "text";
  std::string grid_name;

  auto* matrix = app.add_subcommand("matrix", "Emit an operator matrix for a symbol");
  add_common(*matrix, config);
  matrix->add_option("--which", matrix_args.which, "Operator to build")
      ->required()
      ->check(CLI::IsMember({"toeplitz", "toeplitz-on", "coherent", "flat", "pk", "mult-left", "mult-right"}));
  matrix->add_option("--symbol", matrix_args.symbol, "Symbol expression, e.g. \"th*thb - q*thb*th\"")
      ->capture_default_str();
  matrix->add_option("--basis", matrix_args.basis, "Basis for --which toeplitz")
      ->check(CLI::IsMember({"monomial", "orthonormal"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every identity check over a parameter grid");
  add_common(*verify, config, false);
  verify->add_option("--format", verify_format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--grid", grid_name, "Named grid")->check(CLI::IsMember({"default"}));
  verify->add_option("--seed", config.seed, "Seed for random elements (PG_SEED overrides)")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Deformed integers, number-operator spectrum and norms");
  add_common(*spectrum, config);

  auto* gram = app.add_subcommand("gram", "Gram matrix of the sesquilinear form and its determinant");
  add_common(*gram, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    finalize(config);
    Emitter emitter{out, config.output_path};
    if (*matrix) {
      emitter.emit(cmd_matrix(config, matrix_args));
    } else if (*spectrum) {
      emitter.emit(cmd_spectrum(config));
    } else if (*gram) {
      emitter.emit(cmd_gram(config));
    } else {
      VerifyOptions options;
      options.tol.relative = config.tolerance;
      options.seed = config.seed;
      const bool q_given = verify->count("--q") > 0;
      const bool weights_given = verify->count("--weights") > 0;
      const auto grid = verify_grid(config, q_given, weights_given);
      const VerifyReport report = run_verification(grid, options);
      emitter.emit(render_verify(report, verify_format));
      return report.exit_status() == 0 ? kSuccess : kVerificationFailure;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace pgq::cli
