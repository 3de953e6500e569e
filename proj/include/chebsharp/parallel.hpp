#ifndef CHEBSHARP_PARALLEL_HPP
#define CHEBSHARP_PARALLEL_HPP

// Data-parallel grid kernels. Every kernel has a serial reference twin with
// the same signature; results must be bit-identical between the two.

#include <functional>
#include <span>
#include <vector>

namespace chebsharp {

using ScalarFn = std::function<double(double)>;

/// Worker cap from CHEB_SHARP_THREADS (0 or unset = runtime default).
[[nodiscard]] int worker_count();

/// `count` points uniform in x on [lo, hi], ascending; endpoints exact.
[[nodiscard]] std::vector<double> uniform_x_grid(double lo, double hi, int count);
/// `count` points uniform in theta over [acos(hi), acos(lo)], mapped back to
/// x = cos(theta) and returned ascending; endpoints exact.
[[nodiscard]] std::vector<double> uniform_theta_grid(double lo, double hi, int count);

[[nodiscard]] std::vector<double> sample_serial(const ScalarFn& f, std::span<const double> xs);
[[nodiscard]] std::vector<double> sample_parallel(const ScalarFn& f, std::span<const double> xs);

struct GridMin {
  double x;
  double value;
  std::size_t index;
};

/// Minimum of values over xs; ties go to the smaller x. NaN values are ignored.
[[nodiscard]] GridMin argmin_serial(std::span<const double> xs, std::span<const double> values);
[[nodiscard]] GridMin argmin_parallel(std::span<const double> xs, std::span<const double> values);

/// Largest |f(x) - g(x)| over xs with its location.
struct MaxGap {
  double x;
  double gap;
};
[[nodiscard]] MaxGap max_gap_serial(const ScalarFn& f, const ScalarFn& g, std::span<const double> xs);
[[nodiscard]] MaxGap max_gap_parallel(const ScalarFn& f, const ScalarFn& g,
                                      std::span<const double> xs);

}  // namespace chebsharp

#endif  // CHEBSHARP_PARALLEL_HPP
