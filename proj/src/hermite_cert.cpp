#include "chebsharp/hermite_cert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebsharp/inequalities.hpp"
#include "chebsharp/parallel.hpp"

namespace chebsharp {

namespace {

constexpr double kNodeWindow = 1e-9;

bool is_odd(int k) { return k % 2 != 0; }

}  // namespace

HermiteScheme::HermiteScheme(Degree n) : nodes_(n) {
  const int nv = n.value();
  denominators_.resize(static_cast<std::size_t>(nv - 1));
  for (int k = 1; k < nv; ++k) {
    const double xk = nodes_[k];
    denominators_[static_cast<std::size_t>(k - 1)] =
        alt_sign(k + 1) * n.squared() / ((1.0 - xk) * (1.0 + xk));
  }
}

void HermiteScheme::check_index(int k) const {
  if (k < 1 || k >= degree().value()) {
    throw std::out_of_range("HermiteScheme: node index must be in 1..n-1, got " + std::to_string(k));
  }
}

double HermiteScheme::basis_denominator(int k) const {
  check_index(k);
  return denominators_[static_cast<std::size_t>(k - 1)];
}

double HermiteScheme::lagrange_basis(int k, double x) const {
  check_index(k);
  const int nv = degree().value();
  double prod = nv;
  for (int j = 1; j < nv; ++j) {
    if (j != k) prod *= 2.0 * (x - nodes_[j]);
  }
  // The k-th factor 2 (x - x_k) cancels against the division by (x - x_k).
  return 2.0 * prod / denominators_[static_cast<std::size_t>(k - 1)];
}

void HermiteScheme::lagrange_basis_all(double x, std::span<double> out) const {
  const int nv = degree().value();
  if (out.size() != static_cast<std::size_t>(nv - 1)) {
    throw std::invalid_argument("lagrange_basis_all: output must hold n-1 values");
  }
  int near = 0;
  double full = nv;
  for (int j = 1; j < nv; ++j) {
    const double d = x - nodes_[j];
    if (std::abs(d) < kNodeWindow && near == 0) near = j;
    full *= 2.0 * d;
  }
  if (near != 0) {
    for (int k = 1; k < nv; ++k) out[static_cast<std::size_t>(k - 1)] = lagrange_basis(k, x);
    return;
  }
  for (int k = 1; k < nv; ++k) {
    out[static_cast<std::size_t>(k - 1)] =
        full / ((x - nodes_[k]) * denominators_[static_cast<std::size_t>(k - 1)]);
  }
}

double HermiteScheme::weight(int k, double x) const {
  const double l = lagrange_basis(k, x);
  const double xk = nodes_[k];
  const double w = (1.0 - xk) * (1.0 + xk);
  return l * l / (w * w);
}

double HermiteScheme::l_functional(int k, double fval, double fderiv, double x) const {
  check_index(k);
  const double xk = nodes_[k];
  return (1.0 - xk * x) * fval + (1.0 - xk) * (1.0 + xk) * (x - xk) * fderiv;
}

double HermiteScheme::interpolate(std::span<const double> values, std::span<const double> derivs,
                                  double x) const {
  const int nv = degree().value();
  if (values.size() != static_cast<std::size_t>(nv + 1) ||
      derivs.size() != static_cast<std::size_t>(nv - 1)) {
    throw std::invalid_argument("hermite interpolate: need n+1 values and n-1 derivatives");
  }
  const double t1 = eval_cheb(degree(), x).t1;
  const double n4 = degree().squared() * degree().squared();
  double sum = 0.0;
  std::vector<double> basis(static_cast<std::size_t>(nv - 1));
  lagrange_basis_all(x, basis);
  for (int k = 1; k < nv; ++k) {
    const double xk = nodes_[k];
    const double w = (1.0 - xk) * (1.0 + xk);
    const double l = basis[static_cast<std::size_t>(k - 1)];
    const auto u = static_cast<std::size_t>(k);
    sum += l * l / (w * w) * l_functional(k, values[u], derivs[u - 1], x);
  }
  return t1 * t1 / (2.0 * n4) * ((1.0 + x) * values.front() + (1.0 - x) * values.back()) +
         (1.0 - x) * (1.0 + x) * sum;
}

double l_f1_closed(int k, double xk, double x) {
  if (is_odd(k)) return (1.0 + xk) * (1.0 + xk - 2.0 * x);
  return (1.0 - xk) * (3.0 + 2.0 * x + xk);
}

double l_f3_closed(int k, double xk, double x) {
  if (is_odd(k)) return (1.0 - xk) * (1.0 + xk) * (1.0 + xk - 2.0 * x);
  return (1.0 - xk) * (1.0 + xk * xk - 2.0 * xk * x);
}

double l_fa_closed(int k, double xk, double a, double x) {
  if (is_odd(k)) return (a + xk) * (1.0 + xk) * (1.0 + xk - 2.0 * x);
  return (1.0 - xk) * (2.0 * (1.0 + x) * (1.0 + a + xk) + (a - xk) * (1.0 + xk));
}

double f1_at_node(Degree n, int k, double xk) {
  const int nv = n.value();
  if (k == 0) return 0.0;
  if (k == nv) return 2.0 * (1.0 + alt_sign(nv));
  (void)xk;
  return 2.0 + alt_sign(k);
}

double f3_at_node(Degree n, int k, double xk) {
  const int nv = n.value();
  if (k == 0) return 0.0;
  if (k == nv) return 2.0 * (1.0 + alt_sign(nv));
  return 1.0 - xk;
}

NodeDerivatives derivs_at_nodes(Degree n) {
  n.require_at_least(4, "derivs_at_nodes");
  const NodeSystem nodes(n);
  const int nv = n.value();
  const auto f1 = InequalityFn::f1(n);
  const auto f3 = InequalityFn::f3(n);
  NodeDerivatives out;
  for (int k = 1; k < nv; ++k) {
    const double xk = nodes[k];
    const double w = (1.0 - xk) * (1.0 + xk);
    out.f1_prime.push_back(alt_sign(k) * (xk + 2.0) / w);
    out.f3_prime.push_back(alt_sign(k) / (1.0 + xk) - 1.0);
    // Five-point central difference in theta (x = cos theta), where f varies
    // on the scale 1/n uniformly; df/dx = -(df/dtheta) / sin(theta).
    const double th = std::acos(xk);
    const double h = 2e-3 / nv;
    const auto d_theta = [&](const InequalityFn& f) {
      const auto at = [&](double t) { return eval_ineq(f, std::cos(t)); };
      return (at(th - 2 * h) - 8 * at(th - h) + 8 * at(th + h) - at(th + 2 * h)) / (12 * h);
    };
    out.f1_prime_fd.push_back(-d_theta(f1) / std::sqrt(w));
    out.f3_prime_fd.push_back(-d_theta(f3) / std::sqrt(w));
    out.max_fd_gap = std::max({out.max_fd_gap, std::abs(out.f1_prime.back() - out.f1_prime_fd.back()),
                               std::abs(out.f3_prime.back() - out.f3_prime_fd.back())});
  }
  return out;
}

double theorem3_constant(Degree n) {
  n.require_at_least(4, "theorem3_constant");
  const NodeSystem nodes(n);
  return n.is_even() ? nodes[1] : nodes[2];
}

Certificate::Certificate(Degree n, double a)
    : scheme_((n.require_at_least(4, "build_certificate"), n)),
      a_(a),
      boundary_coefficient_(a * (1.0 + alt_sign(n.value())) /
                            (n.squared() * n.squared())) {
  if (!std::isfinite(a)) throw std::invalid_argument("build_certificate: a must be finite");
  const int nv = n.value();
  constexpr double zero_tol = 4.0 * std::numeric_limits<double>::epsilon();
  for (int k = 1; k < nv; ++k) {
    const double xk = scheme_.node(k);
    CertificateTerm t{};
    t.k = k;
    t.parity = is_odd(k) ? Parity::odd : Parity::even;
    t.node = xk;
    if (is_odd(k)) {
      t.constant = (a + xk) * (1.0 + xk) * (1.0 + xk);
      t.slope = -2.0 * (a + xk) * (1.0 + xk);
      t.vanishing = std::abs(a + xk) <= zero_tol;
      if (t.vanishing) {
        t.constant = 0.0;
        t.slope = 0.0;
        t.claimed = {SignRegion::Kind::identically_zero, -1.0, 1.0, false, false};
      } else {
        t.claimed = {SignRegion::Kind::left_half, -1.0, 0.0, true, false};
      }
    } else {
      t.constant = (1.0 - xk) * (2.0 * (1.0 + a + xk) + (a - xk) * (1.0 + xk));
      t.slope = 2.0 * (1.0 - xk) * (1.0 + a + xk);
      t.vanishing = false;
      // At a = x_k the term is 2(1+x)(1-x_k)(1+a+x_k), zero at x = -1.
      const bool touches = std::abs(a - xk) <= zero_tol;
      t.claimed = {SignRegion::Kind::whole_interval, -1.0, 1.0, touches, false};
    }
    // Positive part of the affine form on [-1, 1].
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double at_lo = t.constant - t.slope;
    const double at_hi = t.constant + t.slope;
    if (t.vanishing || (at_lo <= 0.0 && at_hi <= 0.0)) {
      t.positive_lo = t.positive_hi = nan;
    } else if (at_lo > 0.0 && at_hi > 0.0) {
      t.positive_lo = -1.0;
      t.positive_hi = 1.0;
    } else {
      const double root = -t.constant / t.slope;
      t.positive_lo = at_lo > 0.0 ? -1.0 : root;
      t.positive_hi = at_lo > 0.0 ? root : 1.0;
    }
    terms_.push_back(t);
  }
}

int Certificate::witness_index() const noexcept {
  const int nv = degree().value();
  return degree().is_even() ? nv - 1 : nv - 2;
}

double Certificate::boundary_term(double x) const {
  if (boundary_coefficient_ == 0.0) return 0.0;
  const double t1 = eval_cheb(degree(), x).t1;
  return boundary_coefficient_ * (1.0 - x) * t1 * t1;
}

double Certificate::term_value(int k, double x) const {
  const auto& t = term(k);
  if (t.vanishing) return 0.0;
  return l_fa_closed(k, t.node, a_, x);
}

double Certificate::contribution(int k, double x) const {
  return (1.0 - x) * (1.0 + x) * scheme_.weight(k, x) * term_value(k, x);
}

double Certificate::evaluate(double x) const {
  const int nv = degree().value();
  std::vector<double> basis(static_cast<std::size_t>(nv - 1));
  scheme_.lagrange_basis_all(x, basis);
  double sum = 0.0;
  for (int k = 1; k < nv; ++k) {
    const double xk = scheme_.node(k);
    const double w = (1.0 - xk) * (1.0 + xk);
    const double l = basis[static_cast<std::size_t>(k - 1)];
    sum += l * l / (w * w) * term_value(k, x);
  }
  return boundary_term(x) + (1.0 - x) * (1.0 + x) * sum;
}

Certificate build_certificate(Degree n, double a) { return Certificate(n, a); }

namespace {

TermCheck check_term(const Certificate& cert, const CertificateTerm& t) {
  TermCheck c{t.k, true, 0.0, std::numeric_limits<double>::infinity()};
  const auto& r = t.claimed;
  const auto record = [&](double x, double v) {
    if (v < c.worst_value) {
      c.worst_value = v;
      c.worst_x = x;
    }
  };
  if (r.kind == SignRegion::Kind::identically_zero) {
    const double lo = std::abs(l_fa_closed(t.k, t.node, cert.a(), -1.0));
    const double hi = std::abs(l_fa_closed(t.k, t.node, cert.a(), 1.0));
    c.passed = lo <= 1e-14 && hi <= 1e-14;
    c.worst_value = -std::max(lo, hi);
    c.worst_x = lo >= hi ? -1.0 : 1.0;
    return c;
  }
  const int steps = static_cast<int>(std::ceil((r.hi - r.lo) / kSignGridStep));
  for (int i = 0; i <= steps; ++i) {
    const double x = i == steps ? r.hi : r.lo + (r.hi - r.lo) * i / steps;
    const double v = l_fa_closed(t.k, t.node, cert.a(), x);
    const bool open_end = (i == 0 && r.lo_open) || (i == steps && r.hi_open);
    if (open_end) {
      // Only the limit value is constrained at an excluded endpoint.
      if (v < -1e-14) c.passed = false;
      continue;
    }
    record(x, v);
    if (!(v > 0.0)) c.passed = false;
  }
  return c;
}

}  // namespace

CertificateReport verify_certificate(const Certificate& cert, int grid) {
  if (grid < 2) throw std::invalid_argument("verify_certificate: grid must be >= 2");
  const Degree n = cert.degree();
  CertificateReport rep;
  rep.n = n;
  rep.a = cert.a();
  rep.grid_points = grid;

  const auto fa = InequalityFn::fa(n, cert.a());
  const auto xs = uniform_x_grid(-1.0, 1.0, grid);
  const auto gap = max_gap_parallel([&cert](double x) { return cert.evaluate(x); },
                                    [fa](double x) { return eval_ineq(fa, x); }, xs);
  rep.reconstruction_error = gap.gap;
  rep.reconstruction_worst_x = gap.x;
  if (!(gap.gap <= kReconstructionTol)) {
    throw CertificateError("certificate reconstruction failed at x = " + std::to_string(gap.x), gap.x,
                           gap.gap);
  }

  for (const auto& t : cert.terms()) {
    rep.term_checks.push_back(check_term(cert, t));
    if (!rep.term_checks.back().passed) rep.signs_ok = false;
  }

  const int kw = cert.witness_index();
  const double xw = cert.scheme().node(kw);
  rep.witness_k = kw;
  rep.witness_x = xw;
  rep.witness_via_certificate = cert.evaluate(xw);
  rep.witness_direct = eval_ineq(fa, xw);
  rep.witness_expected = cert.a() + xw;
  rep.witness_other_terms = std::abs(cert.boundary_term(xw));
  for (int k = 1; k < n.value(); ++k) {
    if (k != kw) rep.witness_other_terms = std::max(rep.witness_other_terms, std::abs(cert.contribution(k, xw)));
  }
  rep.witness_ok = std::abs(rep.witness_via_certificate - rep.witness_expected) <= kReconstructionTol &&
                   std::abs(rep.witness_direct - rep.witness_expected) <= kReconstructionTol &&
                   rep.witness_other_terms <= 1e-12;
  rep.passed = rep.signs_ok && rep.witness_ok;
  return rep;
}

}  // namespace chebsharp
