#ifndef CHEBSHARP_DETAIL_GEGENBAUER_HPP
#define CHEBSHARP_DETAIL_GEGENBAUER_HPP

namespace chebsharp::detail {

// C_m^lambda(x) by the forward three-term recurrence
//   m C_m = 2(m + lambda - 1) x C_{m-1} - (m + 2 lambda - 2) C_{m-2}.
// Returns 0 for m < 0 so derivative chains can index below zero.
inline double gegenbauer(double lambda, int m, double x) noexcept {
  if (m < 0) return 0.0;
  if (m == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * x;
  for (int k = 2; k <= m; ++k) {
    const double next =
        (2.0 * (k + lambda - 1.0) * x * curr - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace chebsharp::detail

#endif  // CHEBSHARP_DETAIL_GEGENBAUER_HPP
