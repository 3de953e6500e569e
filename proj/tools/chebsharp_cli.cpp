// chebsharp: command-line front end for the Chebyshev inequality checks.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chebsharp/cheb_core.hpp"
#include "chebsharp/hermite_cert.hpp"
#include "chebsharp/inequalities.hpp"
#include "chebsharp/parallel.hpp"
#include "chebsharp/report_io.hpp"
#include "chebsharp/ultraspherical.hpp"

namespace {

using chebsharp::Degree;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NRange {
  int first;
  int last;
};

NRange parse_n(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("bad degree: " + s);
      return {v, v};
    }
    const std::string a = s.substr(0, dots);
    const std::string b = s.substr(dots + 2);
    std::size_t ua = 0;
    std::size_t ub = 0;
    const int lo = std::stoi(a, &ua);
    const int hi = std::stoi(b, &ub);
    if (ua != a.size() || ub != b.size() || lo > hi) throw UsageError("bad degree range: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad degree: " + s);
  }
}

struct Output {
  std::string format = "human";
  std::string path;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file) {
      file = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file) throw std::runtime_error("cannot open output file: " + path);
    }
    return *file;
  }

  std::unique_ptr<std::ofstream> file;
};

std::string fmt(double v) { return chebsharp::format_double(v); }

// Labels each found point as predicted or unexpected and lists predicted
// points that were not found.
json classify(const std::vector<double>& found, const std::vector<double>& expected) {
  json out = json::array();
  for (double x : found) {
    bool predicted = false;
    for (double e : expected) predicted = predicted || std::abs(x - e) <= 1e-6;
    out.push_back({{"x", x}, {"classification", predicted ? "predicted" : "unexpected"}});
  }
  for (double e : expected) {
    bool seen = false;
    for (double x : found) seen = seen || std::abs(x - e) <= 1e-6;
    if (!seen) out.push_back({{"x", e}, {"classification", "missing"}});
  }
  return out;
}

void print_report_human(std::ostream& os, const chebsharp::VerificationReport& r, const json& classes) {
  os << r.subject << " on [" << fmt(r.lo) << ", " << fmt(r.hi) << "], " << r.grid_points
     << " points per grid\n";
  os << "  min value " << fmt(r.min_value) << " at x = " << fmt(r.argmin) << "\n";
  for (const auto& c : classes) {
    os << "  equality point x = " << fmt(c["x"].get<double>()) << " ("
       << c["classification"].get<std::string>() << ")\n";
  }
  for (const auto& [x, v] : r.violations) os << "  VIOLATION at x = " << fmt(x) << ": " << fmt(v) << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  os << "  " << (r.passed ? "PASSED" : "FAILED") << "\n";
}

void print_report_csv(chebsharp::CsvWriter& w, const chebsharp::VerificationReport& r, const json& classes) {
  for (const auto& c : classes) {
    w.field(r.subject).field(c["x"].get<double>()).field(std::string("equality"));
    w.field(c["classification"].get<std::string>()).end_row();
  }
  for (const auto& [x, v] : r.violations) {
    w.field(r.subject).field(x).field(std::string("violation")).field(fmt(v)).end_row();
  }
}

struct VerifyArgs {
  std::string target;
  std::string n;
  std::optional<double> a;
  int grid = 0;
  double tol = chebsharp::kDefaultVerifyTol;
};

int cmd_verify(const VerifyArgs& args, Output& out) {
  const auto range = parse_n(args.n);
  if (args.grid != 0 && args.grid < 2) throw UsageError("--grid must be >= 2");
  if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");

  json reports = json::array();
  bool all_passed = true;
  std::unique_ptr<chebsharp::CsvWriter> csv;
  if (out.format == "csv") {
    csv = std::make_unique<chebsharp::CsvWriter>(
        out.stream(), std::vector<std::string>{"subject", "x", "kind", "detail"});
  }
  for (int nv = range.first; nv <= range.last; ++nv) {
    const Degree n(nv);
    std::optional<chebsharp::InequalityFn> fn;
    double lo = -1.0;
    std::vector<double> expected;
    if (args.target == "theorem1") {
      n.require_at_least(2, "verify theorem1");
      const double a = args.a.value_or(chebsharp::sharp_constant_closed(n).value);
      fn = chebsharp::InequalityFn::g(n, a);
      if (nv >= 4 && !args.a) expected = chebsharp::theorem1_equality_points(n);
    } else if (args.target == "theorem2") {
      n.require_at_least(3, "verify theorem2");
      fn = chebsharp::InequalityFn::phi(n);
      lo = 0.0;
      expected = chebsharp::theorem2_equality_points(n);
    } else if (args.target == "askey-gasper") {
      n.require_at_least(2, "verify askey-gasper");
      fn = chebsharp::InequalityFn::f2(n);
      expected = chebsharp::askey_gasper_equality_points(n);
    } else if (args.target == "robertson") {
      n.require_at_least(2, "verify robertson");
      fn = chebsharp::InequalityFn::f1(n);
      expected = chebsharp::askey_gasper_equality_points(n);
    } else {
      throw UsageError("unknown verify target: " + args.target);
    }
    if (args.a && args.target != "theorem1") throw UsageError("--a only applies to theorem1");

    const int grid = args.grid != 0 ? args.grid : chebsharp::default_grid(n);
    const auto rep = chebsharp::verify_nonneg(*fn, lo, 1.0, grid, args.tol);
    const auto classes = classify(rep.equality_points, expected);
    all_passed = all_passed && rep.passed;
    if (out.format == "json") {
      json j = rep;
      j["classified_points"] = classes;
      reports.push_back(j);
    } else if (csv) {
      print_report_csv(*csv, rep, classes);
    } else {
      print_report_human(out.stream(), rep, classes);
    }
  }
  if (out.format == "json") out.stream() << chebsharp::envelope("verify", reports).dump(2) << "\n";
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_sharp_constant(const std::string& n_arg, bool numeric, Output& out) {
  const auto range = parse_n(n_arg);
  if (range.first < 2) throw UsageError("sharp-constant needs n >= 2");
  if (numeric && range.first < 4) throw UsageError("--numeric needs n >= 4");

  json rows = json::array();
  std::unique_ptr<chebsharp::CsvWriter> csv;
  if (out.format == "csv") {
    std::vector<std::string> header{"n", "a_closed"};
    if (numeric) header.insert(header.end(), {"a_numeric", "diff"});
    csv = std::make_unique<chebsharp::CsvWriter>(out.stream(), header);
  }
  for (int nv = range.first; nv <= range.last; ++nv) {
    const Degree n(nv);
    const auto closed = chebsharp::sharp_constant_closed(n);
    json row = {{"n", nv}, {"a_closed", closed.value}};
    std::optional<double> num;
    if (numeric) {
      num = chebsharp::sharp_constant_numeric(n).value;
      row["a_numeric"] = *num;
      row["diff"] = *num - closed.value;
    }
    if (csv) {
      csv->field(nv).field(closed.value);
      if (num) csv->field(*num).field(*num - closed.value);
      csv->end_row();
    } else if (out.format == "json") {
      rows.push_back(row);
    } else {
      auto& os = out.stream();
      os << "n = " << nv << "  a(n) = " << fmt(closed.value);
      if (num) os << "  numeric = " << fmt(*num) << "  diff = " << fmt(*num - closed.value);
      if (closed.branch == chebsharp::SharpBranch::trivial) os << "  (trivial case)";
      os << "\n";
    }
  }
  if (out.format == "json") out.stream() << chebsharp::envelope("sharp-constant", rows).dump(2) << "\n";
  return kExitOk;
}

int cmd_certificate(int nv, std::optional<double> a_arg, int grid, Output& out) {
  const Degree n(nv);
  n.require_at_least(4, "certificate");
  if (grid < 2) throw UsageError("--grid must be >= 2");
  const double a = a_arg.value_or(chebsharp::theorem3_constant(n));
  const auto cert = chebsharp::build_certificate(n, a);
  const auto record = chebsharp::to_record(cert);

  std::optional<chebsharp::CertificateReport> rep;
  std::string failure;
  try {
    rep = chebsharp::verify_certificate(cert, grid);
  } catch (const chebsharp::CertificateError& e) {
    failure = e.what();
  }
  const bool passed = rep && rep->passed;

  if (out.format == "json") {
    json j = {{"certificate", record}};
    j["verification"] = rep ? json(*rep) : json({{"error", failure}, {"passed", false}});
    out.stream() << chebsharp::envelope("certificate", j).dump(2) << "\n";
  } else if (out.format == "csv") {
    chebsharp::CsvWriter w(out.stream(), {"k", "parity", "node", "constant", "slope", "vanishing", "sign_ok"});
    for (const auto& t : record.terms) {
      bool ok = true;
      if (rep) ok = rep->term_checks[static_cast<std::size_t>(t.k - 1)].passed;
      w.field(t.k).field(t.parity).field(t.node).field(t.constant).field(t.slope);
      w.field(std::string(t.vanishing ? "true" : "false")).field(std::string(ok ? "true" : "false")).end_row();
    }
  } else {
    auto& os = out.stream();
    os << "certificate for F_a, n = " << nv << ", a = " << fmt(a) << "\n";
    os << "  boundary coefficient " << fmt(record.boundary_coefficient) << "\n";
    for (const auto& t : record.terms) {
      os << "  k = " << std::setw(3) << t.k << " " << std::setw(4) << t.parity << "  L_k = " << fmt(t.constant)
         << " + " << fmt(t.slope) << " x";
      if (t.vanishing) os << "  [vanishing]";
      if (rep && !rep->term_checks[static_cast<std::size_t>(t.k - 1)].passed) {
        const auto& c = rep->term_checks[static_cast<std::size_t>(t.k - 1)];
        os << "  SIGN CHECK FAILED (" << fmt(c.worst_value) << " at x = " << fmt(c.worst_x) << ")";
      }
      os << "\n";
    }
    if (rep) {
      os << "  reconstruction error " << fmt(rep->reconstruction_error) << " on " << grid << " points\n";
      os << "  witness k = " << rep->witness_k << ", x = " << fmt(rep->witness_x)
         << ": F_a = " << fmt(rep->witness_direct) << ", a + x = " << fmt(rep->witness_expected)
         << ", via certificate " << fmt(rep->witness_via_certificate) << "\n";
      if (rep->witness_expected < 0.0) os << "  negative witness: a + x_witness < 0\n";
    } else {
      os << "  " << failure << "\n";
    }
    os << "  " << (passed ? "PASSED" : "FAILED") << "\n";
  }
  return passed ? kExitOk : kExitFailed;
}

int cmd_figure(int nv, int points, Output& out) {
  const Degree n(nv);
  n.require_at_least(4, "figure");
  if (points < 2) throw UsageError("--points must be >= 2");
  const auto fn = chebsharp::InequalityFn::g(n, chebsharp::sharp_constant_closed(n).value);
  const auto xs = chebsharp::uniform_x_grid(-1.0, 1.0, points);
  const auto values = chebsharp::sample_parallel([fn](double x) { return chebsharp::eval_ineq(fn, x); }, xs);
  if (out.format == "json") {
    json pts = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], values[i]});
    out.stream() << chebsharp::envelope("figure", {{"n", nv}, {"points", pts}}).dump() << "\n";
  } else {
    chebsharp::CsvWriter w(out.stream(), {"x", "value"});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      w.field(xs[i]).field(values[i]);
      w.end_row();
    }
  }
  return kExitOk;
}

struct UltraArgs {
  std::optional<double> lambda;
  bool chebyshev_t = false;
  std::string n;
  int n_max = 0;
  int grid = 0;
};

int cmd_ultra(const UltraArgs& args, Output& out) {
  if (args.chebyshev_t == args.lambda.has_value()) {
    throw UsageError("give exactly one of --lambda and --chebyshev-t");
  }
  const auto param = args.chebyshev_t ? chebsharp::UltraParam::chebyshev_t()
                                      : chebsharp::UltraParam::gegenbauer(*args.lambda);
  const bool claimed = !param.is_chebyshev_t() && param.lambda() >= 1.0;

  if (!claimed) {
    int n_max = args.n_max;
    if (n_max == 0 && !args.n.empty()) n_max = parse_n(args.n).last;
    if (n_max < 2) throw UsageError("counterexample search needs --n-max >= 2");
    const auto search = chebsharp::find_counterexample(param, Degree(n_max));
    if (out.format == "json") {
      json j = search;
      j["parameter"] = param.label();
      out.stream() << chebsharp::envelope("ultra-counterexample", j).dump(2) << "\n";
    } else if (out.format == "csv") {
      chebsharp::CsvWriter w(out.stream(), {"parameter", "n", "x", "value"});
      if (search.hit) w.field(param.label()).field(search.hit->n).field(search.hit->x).field(search.hit->value).end_row();
    } else {
      auto& os = out.stream();
      os << "counterexample search, " << param.label() << ", n = " << search.n_min << ".." << search.n_max
         << ", " << search.grid_points << " points on [0, 1]\n";
      if (search.hit) {
        os << "  counterexample n = " << search.hit->n << ", x = " << fmt(search.hit->x)
           << ", D = " << fmt(search.hit->value) << "\n";
      } else {
        os << "  no counterexample found in the scanned range\n";
      }
    }
    return search.hit ? kExitFailed : kExitOk;
  }

  if (args.n.empty()) throw UsageError("--n is required for lambda >= 1");
  const auto range = parse_n(args.n);
  json reports = json::array();
  bool all_passed = true;
  std::unique_ptr<chebsharp::CsvWriter> csv;
  if (out.format == "csv") {
    csv = std::make_unique<chebsharp::CsvWriter>(out.stream(),
                                                 std::vector<std::string>{"subject", "min_value", "argmin", "passed"});
  }
  for (int nv = range.first; nv <= range.last; ++nv) {
    const Degree n(nv);
    const int grid = args.grid != 0 ? args.grid : std::max(chebsharp::default_grid(n), 201);
    const auto rep = chebsharp::corollary1_check(param, n, grid);
    all_passed = all_passed && rep.passed;
    if (out.format == "json") {
      reports.push_back(rep);
    } else if (csv) {
      csv->field(rep.subject).field(rep.min_value).field(rep.argmin);
      csv->field(std::string(rep.passed ? "true" : "false")).end_row();
    } else {
      print_report_human(out.stream(), rep, classify(rep.equality_points, rep.equality_points));
    }
  }
  if (out.format == "json") out.stream() << chebsharp::envelope("ultra", reports).dump(2) << "\n";
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of sharp Chebyshev polynomial inequalities"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "Write output to this file instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Grid-verify one of the inequalities");
  verify_cmd->add_option("target", verify.target, "theorem1 | theorem2 | askey-gasper | robertson")->required();
  verify_cmd->add_option("--n", verify.n, "Degree or range lo..hi")->required();
  verify_cmd->add_option("--a", verify.a, "Override the constant a (theorem1 only)");
  verify_cmd->add_option("--grid", verify.grid, "Points per parametrization (default 20n+1)");
  verify_cmd->add_option("--tol", verify.tol, "Violation tolerance")->capture_default_str();

  std::string sharp_n;
  bool sharp_numeric = false;
  auto* sharp_cmd = app.add_subcommand("sharp-constant", "Sharp constant a(n)");
  sharp_cmd->add_option("--n", sharp_n, "Degree or range lo..hi")->required();
  sharp_cmd->add_flag("--numeric", sharp_numeric, "Also compute a(n) by ratio minimization");

  int cert_n = 0;
  std::optional<double> cert_a;
  int cert_grid = 10001;
  auto* cert_cmd = app.add_subcommand("certificate", "Emit and verify the positivity certificate of F_a");
  cert_cmd->add_option("--n", cert_n, "Degree (>= 4)")->required();
  cert_cmd->add_option("--a", cert_a, "Constant a (default cos(pi/n) or cos(2pi/n))");
  cert_cmd->add_option("--grid", cert_grid, "Reconstruction grid size")->capture_default_str();

  int fig_n = 0;
  int fig_points = 2001;
  auto* fig_cmd = app.add_subcommand("figure", "Emit x, G(a(n); x) samples on [-1, 1]");
  fig_cmd->add_option("--n", fig_n, "Degree (>= 4)")->required();
  fig_cmd->add_option("--points", fig_points, "Number of samples")->capture_default_str();

  UltraArgs ultra;
  auto* ultra_cmd = app.add_subcommand("ultra", "Finite-increment inequality for Gegenbauer polynomials");
  ultra_cmd->add_option("--lambda", ultra.lambda, "Gegenbauer parameter");
  ultra_cmd->add_flag("--chebyshev-t", ultra.chebyshev_t, "Use the Chebyshev-T (lambda = 0) case");
  ultra_cmd->add_option("--n", ultra.n, "Degree or range lo..hi");
  ultra_cmd->add_option("--n-max", ultra.n_max, "Largest degree for the counterexample search");
  ultra_cmd->add_option("--grid", ultra.grid, "Points per parametrization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*sharp_cmd) return cmd_sharp_constant(sharp_n, sharp_numeric, out);
    if (*cert_cmd) return cmd_certificate(cert_n, cert_a, cert_grid, out);
    if (*fig_cmd) return cmd_figure(fig_n, fig_points, out);
    if (*ultra_cmd) return cmd_ultra(ultra, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // DegreeError, ParameterError and argument checks in the library.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
