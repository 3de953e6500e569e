#include "chebsharp/ultraspherical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chebsharp/detail/gegenbauer.hpp"
#include "chebsharp/parallel.hpp"

namespace chebsharp {

UltraParam UltraParam::gegenbauer(double lambda) {
  if (!(lambda > -0.5)) throw ParameterError("ultraspherical: lambda > -1/2 is required");
  if (lambda == 0.0) {
    throw ParameterError("ultraspherical: lambda = 0 is degenerate; use the Chebyshev-T branch");
  }
  return UltraParam(lambda, false);
}

std::string UltraParam::label() const {
  if (chebyshev_t_) return "chebyshev-T";
  std::ostringstream os;
  os.precision(17);
  os << "lambda=" << lambda_;
  return os.str();
}

UltraValue eval_ultra(const UltraParam& p, Degree n, double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("eval_ultra: x must lie in [-1, 1]");
  if (p.is_chebyshev_t()) {
    const auto v = eval_cheb(n, x);
    return {v.t, v.t1};
  }
  const double lam = p.lambda();
  const int nv = n.value();
  return {detail::gegenbauer(lam, nv, x), 2.0 * lam * detail::gegenbauer(lam + 1.0, nv - 1, x)};
}

ConnectionExpansion connection_coeffs(const UltraParam& mu, const UltraParam& lambda, Degree n) {
  if (mu.is_chebyshev_t() || lambda.is_chebyshev_t()) {
    throw ParameterError("connection_coeffs: both parameters must be Gegenbauer parameters");
  }
  if (n.value() > kMaxConnectionDegree) {
    throw DegreeError("connection_coeffs: n is capped at " + std::to_string(kMaxConnectionDegree));
  }
  const int nv = n.value();
  const int unknowns = nv / 2 + 1;  // m = n, n-2, ..., n mod 2
  // Positive zeros of T_{2M}; both sides share the parity of n.
  Eigen::MatrixXd basis(unknowns, unknowns);
  Eigen::VectorXd rhs(unknowns);
  for (int j = 0; j < unknowns; ++j) {
    const double x = std::cos((2.0 * j + 1.0) * std::numbers::pi / (4.0 * unknowns));
    for (int i = 0; i < unknowns; ++i) {
      basis(j, i) = detail::gegenbauer(lambda.lambda(), nv - 2 * i, x);
    }
    rhs(j) = detail::gegenbauer(mu.lambda(), nv, x);
  }
  const Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(rhs);

  ConnectionExpansion out{mu.lambda(), lambda.lambda(), n, std::vector<double>(static_cast<std::size_t>(nv) + 1, 0.0),
                          0.0, false};
  for (int i = 0; i < unknowns; ++i) out.coeffs[static_cast<std::size_t>(nv - 2 * i)] = sol(i);

  constexpr int test_points = 50;
  double scale = 1.0;
  double worst = 0.0;
  for (int j = 0; j < test_points; ++j) {
    const double x = -1.0 + 2.0 * j / (test_points - 1);
    const double target = detail::gegenbauer(mu.lambda(), nv, x);
    double sum = 0.0;
    for (int m = 0; m <= nv; ++m) {
      sum += out.coeffs[static_cast<std::size_t>(m)] * detail::gegenbauer(lambda.lambda(), m, x);
    }
    scale = std::max(scale, std::abs(target));
    worst = std::max(worst, std::abs(sum - target));
  }
  out.residual = worst / scale;
  out.ill_conditioned = out.residual > 1e-8;
  return out;
}

double increment_defect(const UltraParam& p, Degree n, double x) {
  const auto at_one = eval_ultra(p, n, 1.0);
  const auto at_x = eval_ultra(p, n, x);
  return at_one.value - at_x.value - (1.0 - x) * at_x.derivative;
}

VerificationReport corollary1_check(const UltraParam& p, Degree n, int grid, double tol) {
  const double p1 = std::abs(eval_ultra(p, n, 1.0).value);
  const double scale = p1 > 0.0 ? p1 : 1.0;
  auto rep = scan_nonneg([p, n, scale](double x) { return increment_defect(p, n, x) / scale; },
                         "D(x)/P(1) " + p.label() + " n=" + std::to_string(n.value()), 0.0, 1.0, grid,
                         tol);
  if (p.is_chebyshev_t() || p.lambda() < 1.0) rep.notes.emplace_back("lambda < 1: failure permitted");
  return rep;
}

CounterexampleSearch find_counterexample(const UltraParam& p, Degree n_max) {
  if (!p.is_chebyshev_t() && !(p.lambda() < 1.0)) {
    throw ParameterError("find_counterexample: requires lambda < 1");
  }
  n_max.require_at_least(2, "find_counterexample");
  CounterexampleSearch out{2, n_max.value(), kCounterexampleGrid, std::nullopt};
  const auto xs = uniform_x_grid(0.0, 1.0, kCounterexampleGrid);
  for (int nv = 2; nv <= n_max.value(); ++nv) {
    const Degree n(nv);
    const auto values = sample_parallel([p, n](double x) { return increment_defect(p, n, x); }, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (values[i] < -kCounterexampleTol) {
        out.hit = Counterexample{nv, xs[i], values[i]};
        return out;
      }
    }
  }
  return out;
}

}  // namespace chebsharp
