#ifndef CHEBSHARP_HERMITE_CERT_HPP
#define CHEBSHARP_HERMITE_CERT_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebsharp/cheb_core.hpp"

namespace chebsharp {

/// Hermite interpolation with simple nodes at x_0 = 1, x_n = -1 and double
/// nodes at the interior extrema x_1..x_{n-1}. Exact for degree <= 2n-1.
class HermiteScheme {
public:
  explicit HermiteScheme(Degree n);

  [[nodiscard]] Degree degree() const noexcept { return nodes_.degree(); }
  [[nodiscard]] const NodeSystem& nodes() const noexcept { return nodes_; }
  [[nodiscard]] double node(int k) const { return nodes_[k]; }

  /// T_n''(x_k) = (-1)^(k+1) n^2 / (1 - x_k^2), 1 <= k <= n-1.
  [[nodiscard]] double basis_denominator(int k) const;

  /// l_k(x) = T_n'(x) / ((x - x_k) T_n''(x_k)), 1 <= k <= n-1. T_n'(x)/(x-x_k)
  /// is formed as n 2^(n-1) prod_{j != k} (x - x_j), so there is no 0/0 at x_k.
  [[nodiscard]] double lagrange_basis(int k, double x) const;

  /// l_1(x) .. l_{n-1}(x) into out (size n-1) in O(n).
  void lagrange_basis_all(double x, std::span<double> out) const;

  /// l_k(x)^2 / (1 - x_k^2)^2
  [[nodiscard]] double weight(int k, double x) const;

  /// L_k(f; x) = (1 - x_k x) f(x_k) + (1 - x_k^2)(x - x_k) f'(x_k).
  [[nodiscard]] double l_functional(int k, double fval, double fderiv, double x) const;

  /// H(f; x) from f at all n+1 nodes and f' at the n-1 interior nodes.
  [[nodiscard]] double interpolate(std::span<const double> values, std::span<const double> derivs,
                                   double x) const;

private:
  void check_index(int k) const;
  NodeSystem nodes_;
  std::vector<double> denominators_;  // index k-1
};

// Closed forms of L_k for f1, f3 and F_a = (1+a) f1 - f3.
[[nodiscard]] double l_f1_closed(int k, double xk, double x);
[[nodiscard]] double l_f3_closed(int k, double xk, double x);
[[nodiscard]] double l_fa_closed(int k, double xk, double a, double x);

/// f1(x_k), f3(x_k) at node k = 0..n from the node values of T_n and T_n'.
[[nodiscard]] double f1_at_node(Degree n, int k, double xk);
[[nodiscard]] double f3_at_node(Degree n, int k, double xk);

struct NodeDerivatives {
  /// Index k-1 holds the value at x_k.
  std::vector<double> f1_prime;
  std::vector<double> f3_prime;
  /// Central-difference estimates from direct evaluation of f1 and f3.
  std::vector<double> f1_prime_fd;
  std::vector<double> f3_prime_fd;
  double max_fd_gap = 0.0;
};

/// f1'(x_k) = (-1)^k (x_k+2)/(1-x_k^2) and f3'(x_k) = (-1)^k/(1+x_k) - 1.
[[nodiscard]] NodeDerivatives derivs_at_nodes(Degree n);

/// Where a certificate term is claimed to be strictly positive.
struct SignRegion {
  enum class Kind { whole_interval, left_half, identically_zero };
  Kind kind;
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  friend bool operator==(const SignRegion&, const SignRegion&) = default;
};

struct CertificateTerm {
  int k;
  Parity parity;
  double node;
  /// L_k(F_a; x) = constant + slope * x
  double constant;
  double slope;
  bool vanishing;
  SignRegion claimed;
  /// {x in [-1, 1] : L_k(F_a; x) > 0} as [positive_lo, positive_hi];
  /// both NaN when empty. Recorded, not asserted.
  double positive_lo;
  double positive_hi;
};

/// F_a(x) = boundary(x) + (1 - x^2) sum_k weight_k(x) L_k(F_a; x), with
/// boundary(x) = a (1 + (-1)^n)/n^4 (1 - x) T_n'(x)^2.
class Certificate {
public:
  Certificate(Degree n, double a);

  [[nodiscard]] Degree degree() const noexcept { return scheme_.degree(); }
  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] const HermiteScheme& scheme() const noexcept { return scheme_; }
  [[nodiscard]] double boundary_coefficient() const noexcept { return boundary_coefficient_; }
  [[nodiscard]] const std::vector<CertificateTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] const CertificateTerm& term(int k) const { return terms_.at(static_cast<std::size_t>(k - 1)); }

  /// Node index whose term carries the sharpness argument: n-1 (even n) or n-2 (odd n).
  [[nodiscard]] int witness_index() const noexcept;

  [[nodiscard]] double boundary_term(double x) const;
  /// L_k(F_a; x) in closed form.
  [[nodiscard]] double term_value(int k, double x) const;
  /// (1 - x^2) weight_k(x) L_k(F_a; x)
  [[nodiscard]] double contribution(int k, double x) const;
  [[nodiscard]] double evaluate(double x) const;

private:
  HermiteScheme scheme_;
  double a_;
  double boundary_coefficient_;
  std::vector<CertificateTerm> terms_;
};

/// Certificate for F_a with the closed-form L_k(F_a; x). Requires n >= 4.
[[nodiscard]] Certificate build_certificate(Degree n, double a);

/// a = cos(pi/n) for even n, cos(2 pi/n) for odd n, taken from the node
/// system so that a + x_witness is exactly 0.
[[nodiscard]] double theorem3_constant(Degree n);

class CertificateError : public std::runtime_error {
public:
  CertificateError(const std::string& what, double worst_x, double gap)
      : std::runtime_error(what), worst_x_(worst_x), gap_(gap) {}
  [[nodiscard]] double worst_x() const noexcept { return worst_x_; }
  [[nodiscard]] double gap() const noexcept { return gap_; }

private:
  double worst_x_;
  double gap_;
};

struct TermCheck {
  int k;
  bool passed;
  double worst_x;
  double worst_value;
};

struct CertificateReport {
  Degree n{4};
  double a = 0.0;
  int grid_points = 0;
  double reconstruction_error = 0.0;
  double reconstruction_worst_x = 0.0;
  std::vector<TermCheck> term_checks;
  bool signs_ok = true;
  int witness_k = 0;
  double witness_x = 0.0;
  double witness_via_certificate = 0.0;
  double witness_direct = 0.0;
  /// a + x_witness
  double witness_expected = 0.0;
  /// Largest |contribution| at the witness from the boundary and all other terms.
  double witness_other_terms = 0.0;
  bool witness_ok = true;
  bool passed = false;
};

inline constexpr double kReconstructionTol = 1e-10;
inline constexpr double kSignGridStep = 1e-3;

/// Checks the reconstruction identity on a uniform grid (throws
/// CertificateError on failure), each claimed sign region and the witness
/// value a + x_witness.
[[nodiscard]] CertificateReport verify_certificate(const Certificate& cert, int grid);

}  // namespace chebsharp

#endif  // CHEBSHARP_HERMITE_CERT_HPP
