#include "chebsharp/parallel.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chebsharp {

namespace {

bool better(double v, double x, const GridMin& cur) {
  if (std::isnan(v)) return false;
  if (std::isnan(cur.value)) return true;
  return v < cur.value || (v == cur.value && x < cur.x);
}

GridMin empty_min() {
  return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(), 0};
}

bool wider(double gap, double x, const MaxGap& cur) {
  if (std::isnan(gap)) return std::isnan(cur.gap) ? x < cur.x : true;
  if (std::isnan(cur.gap)) return false;
  return gap > cur.gap || (gap == cur.gap && x < cur.x);
}

void check_grid(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("grid needs lo < hi");
}

}  // namespace

int worker_count() {
  const char* env = std::getenv("CHEB_SHARP_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return 0;
  return static_cast<int>(v);
}

std::vector<double> uniform_x_grid(double lo, double hi, int count) {
  check_grid(lo, hi, count);
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = lo + step * i;
  xs.back() = hi;
  return xs;
}

std::vector<double> uniform_theta_grid(double lo, double hi, int count) {
  check_grid(lo, hi, count);
  const double th_lo = std::acos(hi);
  const double th_hi = std::acos(lo);
  std::vector<double> xs(static_cast<std::size_t>(count));
  // i = 0 maps to theta_hi (x = lo) so the result is ascending.
  for (int i = 0; i < count; ++i) {
    const double th = th_hi - (th_hi - th_lo) * i / (count - 1);
    xs[static_cast<std::size_t>(i)] = std::cos(th);
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<double> sample_serial(const ScalarFn& f, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  return out;
}

std::vector<double> sample_parallel(const ScalarFn& f, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  const auto n = static_cast<long>(xs.size());
#ifdef _OPENMP
  const int threads = worker_count() > 0 ? worker_count() : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  return out;
}

GridMin argmin_serial(std::span<const double> xs, std::span<const double> values) {
  GridMin best = empty_min();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (better(values[i], xs[i], best)) best = {xs[i], values[i], i};
  }
  return best;
}

GridMin argmin_parallel(std::span<const double> xs, std::span<const double> values) {
  GridMin best = empty_min();
  const auto n = static_cast<long>(xs.size());
#ifdef _OPENMP
  const int threads = worker_count() > 0 ? worker_count() : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
  {
    GridMin local = empty_min();
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
    for (long i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (better(values[u], xs[u], local)) local = {xs[u], values[u], u};
    }
#ifdef _OPENMP
#pragma omp critical(chebsharp_argmin)
#endif
    {
      if (better(local.value, local.x, best)) best = local;
    }
  }
  return best;
}

MaxGap max_gap_serial(const ScalarFn& f, const ScalarFn& g, std::span<const double> xs) {
  MaxGap worst{0.0, -1.0};
  for (double x : xs) {
    const double gap = std::abs(f(x) - g(x));
    if (wider(gap, x, worst)) worst = {x, gap};
  }
  return worst;
}

MaxGap max_gap_parallel(const ScalarFn& f, const ScalarFn& g, std::span<const double> xs) {
  MaxGap worst{0.0, -1.0};
  const auto n = static_cast<long>(xs.size());
#ifdef _OPENMP
  const int threads = worker_count() > 0 ? worker_count() : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
  {
    MaxGap local{0.0, -1.0};
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
    for (long i = 0; i < n; ++i) {
      const double x = xs[static_cast<std::size_t>(i)];
      const double gap = std::abs(f(x) - g(x));
      if (wider(gap, x, local)) local = {x, gap};
    }
#ifdef _OPENMP
#pragma omp critical(chebsharp_maxgap)
#endif
    {
      if (local.gap >= 0.0 || std::isnan(local.gap)) {
        if (wider(local.gap, local.x, worst)) worst = local;
      }
    }
  }
  return worst;
}

}  // namespace chebsharp
