#include "chebsharp/cheb_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebsharp/detail/gegenbauer.hpp"

namespace chebsharp {

Degree::Degree(int n) : n_(n) {
  if (n < 0) throw DegreeError("degree must be non-negative, got " + std::to_string(n));
}

void Degree::require_at_least(int min_n, const char* op) const {
  if (n_ < min_n) {
    throw DegreeError(std::string(op) + ": requires n >= " + std::to_string(min_n) +
                      ", got n = " + std::to_string(n_));
  }
}

EndpointDerivatives endpoint_derivatives(Degree n, double side) {
  const double n2 = n.squared();
  const int nv = n.value();
  // T^(j)(-1) = (-1)^(n+j) T^(j)(1)
  const double s1 = side > 0 ? 1.0 : alt_sign(nv + 1);
  const double s2 = side > 0 ? 1.0 : alt_sign(nv);
  return {s1 * n2, s2 * n2 * (n2 - 1.0) / 3.0, s1 * n2 * (n2 - 1.0) * (n2 - 4.0) / 15.0};
}

ChebValues eval_cheb(Degree n, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("eval_cheb: x must lie in [-1, 1], got " + std::to_string(x));
  }
  ChebValues v;
  v.x = x;
  const int nv = n.value();
  if (nv == 0) {
    v.t = 1.0;
    return v;
  }
  // Work at y = |x| so that theta <= pi/2 and the phase n*theta carries no
  // rounding from a leading multiple of pi; reflect with T^(j)(-y) = (-1)^(n+j) T^(j)(y).
  const double nd = nv;
  const double y = std::abs(x);
  const double theta = std::acos(y);
  const double sin_theta = std::sin(theta);

  v.t = y == 1.0 ? 1.0 : std::cos(nd * theta);
  if (sin_theta >= kThetaSwitch) {
    v.t1 = nd * std::sin(nd * theta) / sin_theta;
  } else {
    // Second-order Taylor expansion about the endpoint.
    const auto e = endpoint_derivatives(n, 1.0);
    const double h = y - 1.0;
    v.t1 = e.t1 + h * e.t2 + 0.5 * h * h * e.t3;
  }
  // T_n'' = 2n C^(2)_{n-2}, T_n''' = 8n C^(3)_{n-3}.
  v.t2 = 2.0 * nd * detail::gegenbauer(2.0, nv - 2, y);
  v.t3 = 8.0 * nd * detail::gegenbauer(3.0, nv - 3, y);

  if (x < 0.0) {
    const double s = alt_sign(nv);
    v.t *= s;
    v.t1 *= -s;
    v.t2 *= s;
    v.t3 *= -s;
  }
  return v;
}

double ode_residual(Degree n, const ChebValues& v) {
  const double w = (1.0 - v.x) * (1.0 + v.x);
  return w * v.t2 - v.x * v.t1 + n.squared() * v.t;
}

double pell_residual(Degree n, const ChebValues& v) {
  const double w = (1.0 - v.x) * (1.0 + v.x);
  const double n2 = n.squared();
  return n2 * v.t * v.t + w * v.t1 * v.t1 - n2;
}

double third_order_residual(Degree n, const ChebValues& v) {
  const double w = (1.0 - v.x) * (1.0 + v.x);
  return w * v.t3 - 3.0 * v.x * v.t2 + (n.squared() - 1.0) * v.t1;
}

NodeSystem::NodeSystem(Degree n) : n_(n) {
  n.require_at_least(2, "node_system");
  const int nv = n.value();
  nodes_.resize(static_cast<std::size_t>(nv) + 1);
  for (int k = 0; 2 * k < nv; ++k) {
    nodes_[static_cast<std::size_t>(k)] = std::cos(k * std::numbers::pi / nv);
  }
  if (nv % 2 == 0) nodes_[static_cast<std::size_t>(nv / 2)] = 0.0;
  // Exact symmetry x_k = -x_{n-k}.
  for (int k = (nv + 2) / 2; k <= nv; ++k) {
    nodes_[static_cast<std::size_t>(k)] = -nodes_[static_cast<std::size_t>(nv - k)];
  }
  nodes_.front() = 1.0;
  nodes_.back() = -1.0;
}

NodeSystem node_system(Degree n) { return NodeSystem(n); }

double largest_zero_t2(Degree n) {
  n.require_at_least(4, "largest_zero_t2");
  const double nd = n.value();
  const double lo = std::cos(2.0 * std::numbers::pi / nd);
  const double hi = std::cos(std::numbers::pi / nd);
  const auto t2 = [n](double x) { return eval_cheb(n, x).t2; };
  const double tau = bisect(t2, lo, hi);
  const double n4 = n.squared() * n.squared();
  if (std::abs(t2(tau)) > 1e-10 * n4) {
    throw BracketError("largest_zero_t2: residual too large at tau = " + std::to_string(tau));
  }
  return tau;
}

std::vector<double> zeros_t3_in(Degree n, double lo, double hi) {
  n.require_at_least(3, "zeros_t3_in");
  if (!(lo >= -1.0 && hi <= 1.0 && lo < hi)) {
    throw DomainError("zeros_t3_in: need -1 <= lo < hi <= 1");
  }
  const double theta_lo = std::acos(hi);
  const double theta_hi = std::acos(lo);
  const double step = std::numbers::pi / (8.0 * n.value());
  const int cells = std::max(1, static_cast<int>(std::ceil((theta_hi - theta_lo) / step)));

  const auto t3 = [n](double x) { return eval_cheb(n, x).t3; };
  std::vector<double> xs(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    xs[static_cast<std::size_t>(i)] = std::cos(theta_lo + (theta_hi - theta_lo) * i / cells);
  }
  xs.front() = hi;
  xs.back() = lo;

  std::vector<double> zeros;
  double f_prev = t3(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double f_cur = t3(xs[i]);
    if (f_cur == 0.0) {
      if (xs[i] > lo && xs[i] < hi) zeros.push_back(xs[i]);
    } else if (f_prev != 0.0 && (f_prev < 0.0) != (f_cur < 0.0)) {
      zeros.push_back(bisect(t3, xs[i], xs[i - 1]));
    }
    f_prev = f_cur;
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

T3Relation check_t3_relation(Degree n, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("check_t3_relation: t must lie in (0, 1)");
  }
  const double n2 = n.squared();
  const double denom = n2 - 1.0 - (n2 + 2.0) * t * t;
  if (!(denom > 0.0)) {
    throw DomainError("check_t3_relation: n^2-1-(n^2+2)t^2 <= 0 at t = " + std::to_string(t));
  }
  const auto v = eval_cheb(n, t);
  return {v.t2 - (n2 - 1.0) / (3.0 * t) * v.t1, v.t1 / n2 + 3.0 * t * v.t / denom, denom};
}

}  // namespace chebsharp
