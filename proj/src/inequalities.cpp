#include "chebsharp/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace chebsharp {

namespace {

const char* kind_name(FnKind k) {
  switch (k) {
    case FnKind::F1: return "F1";
    case FnKind::F2: return "F2";
    case FnKind::F3: return "F3";
    case FnKind::G: return "G";
    case FnKind::PHI: return "PHI";
    case FnKind::PSI: return "PSI";
    case FnKind::FA: return "FA";
  }
  return "?";
}

double f1_from(double x, double n2, const ChebValues& v) { return v.t + 2.0 - (x + 2.0) / n2 * v.t1; }

double f3_from(double x, double n2, const ChebValues& v) { return (1.0 - x) * (n2 - v.t1) / n2; }

}  // namespace

std::string describe(const InequalityFn& fn) {
  std::ostringstream os;
  os.precision(17);
  os << kind_name(fn.kind);
  if (fn.kind == FnKind::G || fn.kind == FnKind::FA) os << "(a=" << fn.a << ")";
  os << " n=" << fn.n.value();
  return os.str();
}

double eval_ineq(const InequalityFn& fn, double x) {
  fn.n.require_at_least(1, "eval_ineq");
  const auto v = eval_cheb(fn.n, x);
  const double n2 = fn.n.squared();
  switch (fn.kind) {
    case FnKind::F1: return f1_from(x, n2, v);
    case FnKind::F2: return v.t + 0.5 * (x + 3.0) - 1.5 * (x + 1.0) / n2 * v.t1;
    case FnKind::F3: return f3_from(x, n2, v);
    case FnKind::G: return f1_from(x, n2, v) - fn.a * f3_from(x, n2, v);
    case FnKind::PHI: return v.t + x + 1.0 - (2.0 * x + 1.0) / n2 * v.t1;
    case FnKind::PSI: return n2 - v.t1 - (1.0 - x) * v.t2;
    case FnKind::FA: return (1.0 + fn.a) * f1_from(x, n2, v) - f3_from(x, n2, v);
  }
  throw std::logic_error("eval_ineq: unknown kind");
}

double phi_at_zero(Degree n) {
  n.require_at_least(1, "phi_at_zero");
  const double nd = n.value();
  switch (n.mod4()) {
    case 0: return 2.0;
    case 1: return 1.0 - 1.0 / nd;
    case 2: return 0.0;
    default: return 1.0 + 1.0 / nd;
  }
}

SharpConstant sharp_constant_closed(Degree n) {
  n.require_at_least(2, "sharp_constant_closed");
  if (n.value() == 2) return {n, 1.0, SharpBranch::trivial};
  if (n.value() == 3) return {n, 2.0, SharpBranch::trivial};
  const double nd = n.value();
  if (n.is_even()) return {n, 1.0 / (1.0 + std::cos(std::numbers::pi / nd)), SharpBranch::even};
  return {n, 1.0 / (1.0 + std::cos(2.0 * std::numbers::pi / nd)), SharpBranch::odd};
}

GoldenResult golden_section_min(const ScalarFn& f, double a, double b, double x_tol) {
  constexpr double inv_phi = 0.6180339887498949;
  GoldenResult best{a, f(a)};
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};

  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

namespace {

// Indices of discrete local minima (endpoints compare with their one neighbor).
std::vector<std::size_t> local_minima(const std::vector<double>& v, double below) {
  std::vector<std::size_t> out;
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!(v[i] < below)) continue;
    const bool left_ok = i == 0 || v[i] <= v[i - 1];
    const bool right_ok = i + 1 == m || v[i] <= v[i + 1];
    if (left_ok && right_ok) out.push_back(i);
  }
  return out;
}

GoldenResult refine_at(const ScalarFn& f, const std::vector<double>& xs, std::size_t i) {
  const double a = xs[i == 0 ? 0 : i - 1];
  const double b = xs[i + 1 == xs.size() ? i : i + 1];
  return golden_section_min(f, a, b);
}

}  // namespace

NumericSharpConstant sharp_constant_numeric(Degree n) { return sharp_constant_numeric(n, default_grid(n)); }

NumericSharpConstant sharp_constant_numeric(Degree n, int grid) {
  n.require_at_least(4, "sharp_constant_numeric");
  const auto f1 = InequalityFn::f1(n);
  const auto f3 = InequalityFn::f3(n);
  const ScalarFn ratio = [f1, f3](double x) {
    const double den = eval_ineq(f3, x);
    if (den < 1e-14) return std::numeric_limits<double>::infinity();
    return eval_ineq(f1, x) / den;
  };
  const double hi = 1.0 - kRatioEndWindow;
  NumericSharpConstant best{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& xs : {uniform_x_grid(-1.0, hi, grid), uniform_theta_grid(-1.0, hi, grid)}) {
    const auto values = sample_parallel(ratio, xs);
    for (std::size_t i : local_minima(values, std::numeric_limits<double>::infinity())) {
      const auto r = refine_at(ratio, xs, i);
      if (r.value < best.value || (r.value == best.value && r.x < best.argmin)) best = {r.value, r.x};
    }
  }
  return best;
}

int default_grid(Degree n) { return 20 * n.value() + 1; }

VerificationReport scan_nonneg(const ScalarFn& f, std::string subject, double lo, double hi,
                               int grid, double tol, double equality_tol) {
  if (!(lo >= -1.0 && hi <= 1.0 && lo < hi)) {
    throw std::invalid_argument("scan_nonneg: need -1 <= lo < hi <= 1");
  }
  if (grid < 2) throw std::invalid_argument("scan_nonneg: grid must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("scan_nonneg: tol must be positive");

  VerificationReport rep;
  rep.subject = std::move(subject);
  rep.lo = lo;
  rep.hi = hi;
  rep.grid_points = grid;

  const std::vector<double> grids[2] = {uniform_x_grid(lo, hi, grid), uniform_theta_grid(lo, hi, grid)};
  std::vector<double> values[2];
  std::size_t near_zero = 0;
  GridMin global{0.0, std::numeric_limits<double>::infinity(), 0};
  for (int g = 0; g < 2; ++g) {
    values[g] = sample_parallel(f, grids[g]);
    const auto m = argmin_parallel(grids[g], values[g]);
    if (m.value < global.value || (m.value == global.value && m.x < global.x)) global = m;
    near_zero += static_cast<std::size_t>(std::count_if(
        values[g].begin(), values[g].end(), [&](double v) { return std::abs(v) <= equality_tol; }));
  }
  rep.min_value = global.value;
  rep.argmin = global.x;
  rep.identically_zero = 2 * near_zero > grids[0].size() + grids[1].size();

  std::vector<GoldenResult> refined;
  if (!rep.identically_zero) {
    for (int g = 0; g < 2; ++g) {
      for (std::size_t i : local_minima(values[g], kEqualityCandidate)) {
        refined.push_back(refine_at(f, grids[g], i));
      }
    }
  }
  std::sort(refined.begin(), refined.end(),
            [](const GoldenResult& a, const GoldenResult& b) { return a.x < b.x; });

  // Cluster refined minima that landed on the same point.
  constexpr double merge_radius = 1e-5;
  std::vector<GoldenResult> clusters;
  for (const auto& r : refined) {
    if (!clusters.empty() && r.x - clusters.back().x <= merge_radius) {
      auto& c = clusters.back();
      if (r.value < c.value) c = r;
    } else {
      clusters.push_back(r);
    }
  }
  for (const auto& c : clusters) {
    if (c.value < rep.min_value || (c.value == rep.min_value && c.x < rep.argmin)) {
      rep.min_value = c.value;
      rep.argmin = c.x;
    }
    if (c.value < -tol) rep.violations.emplace_back(c.x, c.value);
    if (std::abs(c.value) <= equality_tol) rep.equality_points.push_back(c.x);
  }
  if (rep.identically_zero) rep.notes.emplace_back("identically zero");
  rep.passed = rep.min_value >= -tol;
  return rep;
}

VerificationReport verify_nonneg(const InequalityFn& fn, double lo, double hi, int grid, double tol) {
  auto rep = scan_nonneg([fn](double x) { return eval_ineq(fn, x); }, describe(fn), lo, hi, grid, tol);
  if (fn.kind == FnKind::G && fn.n.value() <= 3) rep.notes.emplace_back("trivial case");
  return rep;
}

bool same_point_set(const std::vector<double>& found, const std::vector<double>& expected, double radius) {
  if (found.size() != expected.size()) return false;
  return std::all_of(expected.begin(), expected.end(), [&](double e) {
    return std::any_of(found.begin(), found.end(), [&](double f) { return std::abs(f - e) <= radius; });
  });
}

std::vector<double> theorem1_equality_points(Degree n) {
  n.require_at_least(4, "theorem1_equality_points");
  const double nd = n.value();
  if (n.is_even()) return {-std::cos(std::numbers::pi / nd), 1.0};
  return {-1.0, -std::cos(2.0 * std::numbers::pi / nd), 1.0};
}

std::vector<double> theorem2_equality_points(Degree n) {
  n.require_at_least(3, "theorem2_equality_points");
  if (n.mod4() == 2) return {0.0, 1.0};
  return {1.0};
}

std::vector<double> askey_gasper_equality_points(Degree n) {
  n.require_at_least(2, "askey_gasper_equality_points");
  if (n.is_even()) return {1.0};
  return {-1.0, 1.0};
}

SharpnessWitness falsify_sharpness(Degree n, double delta) {
  n.require_at_least(4, "falsify_sharpness");
  if (!(delta > 0.0)) throw std::invalid_argument("falsify_sharpness: delta must be positive");
  const NodeSystem nodes(n);
  const int k = n.is_even() ? n.value() - 1 : n.value() - 2;
  const double x = nodes[k];
  const double a = sharp_constant_closed(n).value + delta;
  return {x, eval_ineq(InequalityFn::g(n, a), x), -delta * (1.0 - x)};
}

}  // namespace chebsharp
