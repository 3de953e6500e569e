#ifndef CHEBSHARP_INEQUALITIES_HPP
#define CHEBSHARP_INEQUALITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "chebsharp/cheb_core.hpp"
#include "chebsharp/parallel.hpp"

namespace chebsharp {

/// Members of the inequality family. With T = T_n, T' = T_n', n2 = n^2:
///   F1   = T + 2 - (x+2)/n2 T'                      (Robertson)
///   F2   = T + (x+3)/2 - 3(x+1)/(2 n2) T'           (Askey-Gasper)
///   F3   = (1-x)(n2 - T')/n2
///   G(a) = F1 - a F3
///   PHI  = T + x + 1 - (2x+1)/n2 T'
///   PSI  = T'(1) - T'(x) - (1-x) T''(x)
///   FA(a) = (1+a) F1 - F3
enum class FnKind { F1, F2, F3, G, PHI, PSI, FA };

struct InequalityFn {
  FnKind kind;
  Degree n;
  double a = 0.0;  // only meaningful for G and FA

  static InequalityFn f1(Degree n) { return {FnKind::F1, n}; }
  static InequalityFn f2(Degree n) { return {FnKind::F2, n}; }
  static InequalityFn f3(Degree n) { return {FnKind::F3, n}; }
  static InequalityFn g(Degree n, double a) { return {FnKind::G, n, a}; }
  static InequalityFn phi(Degree n) { return {FnKind::PHI, n}; }
  static InequalityFn psi(Degree n) { return {FnKind::PSI, n}; }
  static InequalityFn fa(Degree n, double a) { return {FnKind::FA, n, a}; }
};

[[nodiscard]] std::string describe(const InequalityFn& fn);

[[nodiscard]] double eval_ineq(const InequalityFn& fn, double x);

/// PHI(0) from the closed mod-4 table: 2, 1 - 1/n, 0, 1 + 1/n.
[[nodiscard]] double phi_at_zero(Degree n);

enum class SharpBranch { trivial, even, odd };

struct SharpConstant {
  Degree n;
  double value;
  SharpBranch branch;
};

/// a(n): 1 for n = 2, 2 for n = 3, 1/(1+cos(pi/n)) for even n >= 4 and
/// 1/(1+cos(2 pi/n)) for odd n >= 5.
[[nodiscard]] SharpConstant sharp_constant_closed(Degree n);

struct NumericSharpConstant {
  double value;
  double argmin;
};

/// Width of the window excluded around x = 1 where F1/F3 is 0/0.
inline constexpr double kRatioEndWindow = 1e-4;

/// inf over [-1, 1) of F1/F3, by dual-grid scan plus golden-section
/// refinement of every discrete local minimum.
[[nodiscard]] NumericSharpConstant sharp_constant_numeric(Degree n);
[[nodiscard]] NumericSharpConstant sharp_constant_numeric(Degree n, int grid);

/// Outcome of a grid scan for non-negativity.
struct VerificationReport {
  std::string subject;
  double lo = -1.0;
  double hi = 1.0;
  int grid_points = 0;  // per parametrization
  double min_value = 0.0;
  double argmin = 0.0;
  std::vector<double> equality_points;
  std::vector<std::pair<double, double>> violations;
  bool identically_zero = false;
  std::vector<std::string> notes;
  bool passed = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Thresholds used by the scan.
inline constexpr double kEqualityCandidate = 1e-6;
inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kDefaultVerifyTol = 1e-10;

/// Default grid size per parametrization: 20 n + 1.
[[nodiscard]] int default_grid(Degree n);

/// Generic scan. Samples f on a uniform x-grid and a uniform theta-grid of
/// `grid` points each, refines every local minimum below kEqualityCandidate
/// by golden-section search and classifies refined minima with
/// |value| <= equality_tol as equality points.
[[nodiscard]] VerificationReport scan_nonneg(const ScalarFn& f, std::string subject, double lo,
                                             double hi, int grid, double tol,
                                             double equality_tol = kEqualityTol);

[[nodiscard]] VerificationReport verify_nonneg(const InequalityFn& fn, double lo, double hi,
                                               int grid, double tol = kDefaultVerifyTol);

/// True when `found` and `expected` have the same size and each expected
/// point has a found point within `radius`.
[[nodiscard]] bool same_point_set(const std::vector<double>& found,
                                  const std::vector<double>& expected, double radius = 1e-6);

/// Equality points predicted for G(a(n)) on [-1, 1], n >= 4.
[[nodiscard]] std::vector<double> theorem1_equality_points(Degree n);
/// Equality points predicted for PHI on [0, 1], n >= 3.
[[nodiscard]] std::vector<double> theorem2_equality_points(Degree n);
/// Equality points predicted for F2 on [-1, 1], n >= 2.
[[nodiscard]] std::vector<double> askey_gasper_equality_points(Degree n);

struct SharpnessWitness {
  double x;
  double value;
  /// -delta (1 - x), the value forced by affinity in a.
  double predicted;
};

/// Evaluates G(a(n) + delta) at x_{n-1} (n even) or x_{n-2} (n odd).
[[nodiscard]] SharpnessWitness falsify_sharpness(Degree n, double delta);

struct GoldenResult {
  double x;
  double value;
};

/// Golden-section minimization on [a, b]. The bracket endpoints are also
/// evaluated so a boundary minimum is returned exactly.
[[nodiscard]] GoldenResult golden_section_min(const ScalarFn& f, double a, double b,
                                              double x_tol = 1e-13);

}  // namespace chebsharp

#endif  // CHEBSHARP_INEQUALITIES_HPP
