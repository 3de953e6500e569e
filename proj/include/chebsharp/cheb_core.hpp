#ifndef CHEBSHARP_CHEB_CORE_HPP
#define CHEBSHARP_CHEB_CORE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace chebsharp {

/// Raised when an operation receives a polynomial degree outside its domain.
class DegreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an abscissa lies outside [-1, 1].
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a root bracket does not change sign. This always means an
/// evaluation bug, never a property of the input.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Parity { even, odd };

/// Polynomial index n. Parity and residue mod 4 are derived on demand.
class Degree {
public:
  explicit Degree(int n);

  [[nodiscard]] int value() const noexcept { return n_; }
  [[nodiscard]] double squared() const noexcept {
    return static_cast<double>(n_) * static_cast<double>(n_);
  }
  [[nodiscard]] Parity parity() const noexcept {
    return n_ % 2 == 0 ? Parity::even : Parity::odd;
  }
  [[nodiscard]] bool is_even() const noexcept { return n_ % 2 == 0; }
  [[nodiscard]] int mod4() const noexcept { return n_ % 4; }

  /// Throws DegreeError naming `op` when n < min_n.
  void require_at_least(int min_n, const char* op) const;

  friend bool operator==(Degree, Degree) = default;

private:
  int n_;
};

/// (-1)^k as a double.
constexpr double alt_sign(int k) noexcept { return (k % 2 == 0) ? 1.0 : -1.0; }

/// T_n and its first three derivatives at x.
struct ChebValues {
  double x{};
  double t{};
  double t1{};
  double t2{};
  double t3{};
};

// Tolerances for the identity residuals. Each is multiplied by the natural
// magnitude of the terms in its identity (n^2, n^4 or n^6).
inline constexpr double kEpsOde = 1e-12;
inline constexpr double kEpsPell = 1e-12;
inline constexpr double kEpsNode = 1e-11;
/// Below this value of sin(theta) T_n' is taken from its endpoint expansion.
inline constexpr double kThetaSwitch = 1e-6;

[[nodiscard]] ChebValues eval_cheb(Degree n, double x);

/// Residual of (1-x^2) T'' - x T' + n^2 T.
[[nodiscard]] double ode_residual(Degree n, const ChebValues& v);
/// Residual of n^2 T^2 + (1-x^2) T'^2 - n^2.
[[nodiscard]] double pell_residual(Degree n, const ChebValues& v);
/// Residual of (1-x^2) T''' - 3x T'' + (n^2-1) T', the ODE satisfied by T'.
[[nodiscard]] double third_order_residual(Degree n, const ChebValues& v);

/// Derivative values of T_n at x = +1 (and by symmetry at -1).
struct EndpointDerivatives {
  double t1;
  double t2;
  double t3;
};
[[nodiscard]] EndpointDerivatives endpoint_derivatives(Degree n, double side);

/// Extrema of T_n: x_k = cos(k pi / n), k = 0..n, the zeros of (1-x^2) T_n'.
class NodeSystem {
public:
  explicit NodeSystem(Degree n);

  [[nodiscard]] Degree degree() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] double operator[](int k) const { return nodes_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  /// T_n(x_k) = (-1)^k, assigned analytically.
  [[nodiscard]] double t_value(int k) const noexcept { return alt_sign(k); }
  /// T_n'(x_0) = n^2.
  [[nodiscard]] double t1_first() const noexcept { return n_.squared(); }
  /// T_n'(x_n) = (-1)^n n^2.
  [[nodiscard]] double t1_last() const noexcept { return alt_sign(n_.value()) * n_.squared(); }

private:
  Degree n_;
  std::vector<double> nodes_;
};

[[nodiscard]] NodeSystem node_system(Degree n);

/// Largest zero of T_n'', bracketed inside (cos(2 pi/n), cos(pi/n)).
[[nodiscard]] double largest_zero_t2(Degree n);

/// All zeros of T_n''' in (lo, hi).
[[nodiscard]] std::vector<double> zeros_t3_in(Degree n, double lo, double hi);

struct T3Relation {
  /// T_n''(t) - (n^2-1)/(3t) T_n'(t)
  double derivative_residual;
  /// T_n'(t)/n^2 + 3t T_n(t) / (n^2-1-(n^2+2)t^2)
  double ratio_residual;
  /// n^2-1-(n^2+2)t^2, positive in the valid region.
  double denominator;
};

/// Residuals of the relations that hold at a zero t of T_n'''. Throws
/// DomainError when the denominator is not positive.
[[nodiscard]] T3Relation check_t3_relation(Degree n, double t);

/// Bisection on a sign-changing bracket, fixed iteration count.
template <class F>
double bisect(F&& f, double lo, double hi, int iterations = 80) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw BracketError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace chebsharp

#endif  // CHEBSHARP_CHEB_CORE_HPP
