#ifndef CHEBSHARP_ULTRASPHERICAL_HPP
#define CHEBSHARP_ULTRASPHERICAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebsharp/cheb_core.hpp"
#include "chebsharp/inequalities.hpp"

namespace chebsharp {

class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Gegenbauer parameter lambda > -1/2, lambda != 0, normalized so that
/// C_{n-1}^(1) = U_{n-1} and T_n' = n C_{n-1}^(1). The lambda = 0 case is
/// represented by the Chebyshev-T branch (T_n itself).
class UltraParam {
public:
  static UltraParam gegenbauer(double lambda);
  static UltraParam chebyshev_t() noexcept { return UltraParam(0.0, true); }

  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] bool is_chebyshev_t() const noexcept { return chebyshev_t_; }
  [[nodiscard]] std::string label() const;

private:
  UltraParam(double lambda, bool cheb_t) : lambda_(lambda), chebyshev_t_(cheb_t) {}
  double lambda_;
  bool chebyshev_t_;
};

struct UltraValue {
  double value;
  double derivative;
};

/// Value and x-derivative; d/dx C_n^lambda = 2 lambda C_{n-1}^(lambda+1).
[[nodiscard]] UltraValue eval_ultra(const UltraParam& p, Degree n, double x);

struct ConnectionExpansion {
  double mu;
  double lambda;
  Degree n;
  /// c_m for m = 0..n with C_n^mu = sum_m c_m C_m^lambda.
  std::vector<double> coeffs;
  /// Max |sum c_m C_m^lambda(x) - C_n^mu(x)| / max(1, max |C_n^mu|) over 50 test points.
  double residual;
  bool ill_conditioned;
};

/// Solves for the expansion from point evaluations. Only m with the parity
/// of n are unknowns; the other coefficients are zero.
[[nodiscard]] ConnectionExpansion connection_coeffs(const UltraParam& mu, const UltraParam& lambda,
                                                    Degree n);

inline constexpr int kMaxConnectionDegree = 64;

/// D(x) = P(1) - P(x) - (1 - x) P'(x).
[[nodiscard]] double increment_defect(const UltraParam& p, Degree n, double x);

/// Scans D(x) / P(1) >= -tol on [0, 1].
[[nodiscard]] VerificationReport corollary1_check(const UltraParam& p, Degree n, int grid,
                                                  double tol = kDefaultVerifyTol);

struct Counterexample {
  int n;
  double x;
  double value;
};

struct CounterexampleSearch {
  int n_min;
  int n_max;
  int grid_points;
  std::optional<Counterexample> hit;
};

inline constexpr int kCounterexampleGrid = 10000;
inline constexpr double kCounterexampleTol = 1e-8;

/// First (smallest n, then smallest x) point of [0, 1] with D(x) < -1e-8
/// for n = 2..n_max. Requires lambda < 1.
[[nodiscard]] CounterexampleSearch find_counterexample(const UltraParam& p, Degree n_max);

}  // namespace chebsharp

#endif  // CHEBSHARP_ULTRASPHERICAL_HPP
