// Acceptance run: one PASS/FAIL line per criterion; exit status is the
// number of failures (capped at 125).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chebsharp/cheb_core.hpp"
#include "chebsharp/hermite_cert.hpp"
#include "chebsharp/inequalities.hpp"
#include "chebsharp/ultraspherical.hpp"
#include "cli_run.hpp"
#include "oracles.hpp"

using namespace chebsharp;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 3) detail << (failures > 1 ? "; " : "") << what;
  }
};

std::string str(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// 1
void sharp_constant(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (int n = 4; n <= 64; ++n) {
    const double d = std::abs(sharp_constant_numeric(Degree(n)).value - sharp_constant_closed(Degree(n)).value);
    worst = std::max(worst, d);
    o.require(d <= 1e-9, "n=" + std::to_string(n) + " diff " + str(d));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(sharp_constant_closed(Degree(12)).value == 1.0 / (1.0 + std::cos(kPi / 12)), "a(12) formula");
  o.require(sharp_constant_closed(Degree(13)).value == 1.0 / (1.0 + std::cos(2 * kPi / 13)), "a(13) formula");
  o.require(secs <= 30.0, "runtime " + str(secs) + " s");
  if (o.ok) o.detail << "max |numeric - closed| = " << str(worst) << ", " << str(secs) << " s";
}

// 2
void theorem1(Outcome& o) {
  for (int nv = 4; nv <= 64; ++nv) {
    const Degree n(nv);
    const auto g = InequalityFn::g(n, sharp_constant_closed(n).value);
    const auto rep = verify_nonneg(g, -1, 1, default_grid(n));
    const auto want = theorem1_equality_points(n);
    const std::string tag = "n=" + std::to_string(nv);
    o.require(rep.passed, tag + " failed, min " + str(rep.min_value));
    o.require(same_point_set(rep.equality_points, want, 1e-6), tag + " equality set");
    for (double x : rep.equality_points) o.require(std::abs(eval_ineq(g, x)) <= 1e-10, tag + " |G| at equality");
  }
  if (o.ok) o.detail << "n = 4..64, equality sets {1, -cos(pi/n)} / {-1, 1, -cos(2pi/n)}";
}

// 3
void falsification(Outcome& o) {
  double worst = 0;
  for (int nv = 4; nv <= 64; ++nv) {
    const auto w = falsify_sharpness(Degree(nv), 1e-6);
    const double gap = std::abs(w.value + 1e-6 * (1 - w.x));
    worst = std::max(worst, gap);
    o.require(w.value < 0, "n=" + std::to_string(nv) + " value not negative");
    o.require(gap <= 1e-10, "n=" + std::to_string(nv) + " gap " + str(gap));
  }
  if (o.ok) o.detail << "max |value + delta(1 - x)| = " << str(worst);
}

// 4
void theorem2(Outcome& o) {
  for (int nv = 3; nv <= 64; ++nv) {
    const Degree n(nv);
    const std::string tag = "n=" + std::to_string(nv);
    const auto rep = verify_nonneg(InequalityFn::phi(n), 0, 1, default_grid(n));
    o.require(rep.passed, tag + " failed");
    const double table[4] = {2.0, 1.0 - 1.0 / nv, 0.0, 1.0 + 1.0 / nv};
    o.require(phi_at_zero(n) == table[nv % 4], tag + " phi(0) table");
    o.require(std::abs(eval_ineq(InequalityFn::phi(n), 0.0) - table[nv % 4]) <= 1e-12, tag + " phi(0) direct");
    const bool zero_eq = std::any_of(rep.equality_points.begin(), rep.equality_points.end(),
                                     [](double x) { return std::abs(x) <= 1e-6; });
    o.require(zero_eq == (nv % 4 == 2), tag + " equality at 0");
    o.require(same_point_set(rep.equality_points, theorem2_equality_points(n), 1e-6), tag + " equality set");
  }
  if (o.ok) o.detail << "n = 3..64, phi(0) table exact, x = 0 equality iff n = 2 mod 4";
}

// 5
void askey_gasper(Outcome& o) {
  for (int nv = 2; nv <= 64; ++nv) {
    const Degree n(nv);
    const auto rep = verify_nonneg(InequalityFn::f2(n), -1, 1, default_grid(n));
    o.require(rep.passed, "n=" + std::to_string(nv) + " failed");
    o.require(same_point_set(rep.equality_points, askey_gasper_equality_points(n), 1e-6),
              "n=" + std::to_string(nv) + " equality set");
  }
  std::mt19937_64 rng(oracle::seed());
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng);
    worst = std::max({worst, std::abs(eval_ineq(InequalityFn::f2(Degree(2)), x) - 0.5 * (1 - x) * (1 - x)),
                      std::abs(eval_ineq(InequalityFn::f2(Degree(3)), x) - 2 * (1 - x) * (1 - x) * (1 + x))});
  }
  o.require(worst <= 1e-12, "closed forms n=2,3 gap " + str(worst));
  if (o.ok) o.detail << "n = 2..64; n = 2, 3 closed forms within " << str(worst);
}

// 6
void residuals(Outcome& o) {
  std::mt19937_64 rng(oracle::seed() + 1);
  std::uniform_int_distribution<int> un(2, 200);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  double r_ode = 0, r_pell = 0, r_third = 0;
  for (int i = 0; i < 10000; ++i) {
    const Degree n(un(rng));
    const double x = ux(rng);
    const auto v = eval_cheb(n, x);
    const double n2 = n.squared();
    r_ode = std::max(r_ode, std::abs(ode_residual(n, v)) / (n2 * n2));
    r_pell = std::max(r_pell, std::abs(pell_residual(n, v)) / n2);
    r_third = std::max(r_third, std::abs(third_order_residual(n, v)) / (n2 * n2 * n2));
  }
  o.require(r_ode <= kEpsOde, "ode " + str(r_ode));
  o.require(r_pell <= kEpsPell, "pell " + str(r_pell));
  o.require(r_third <= kEpsOde, "third-order " + str(r_third));
  if (o.ok) o.detail << "scaled max: ode " << str(r_ode) << ", pell " << str(r_pell) << ", third " << str(r_third);
}

// 7
void hermite(Outcome& o) {
  std::mt19937_64 rng(oracle::seed() + 2);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::uniform_int_distribution<int> un(4, 20);
  const auto rel_error = [&](int n, int degree) {
    const HermiteScheme s{Degree(n)};
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = uc(rng);
    if (std::abs(c.back()) < 0.1) c.back() = 0.5;
    std::vector<double> vals, ders;
    for (int k = 0; k <= n; ++k) vals.push_back(oracle::chebyshev_series(c, s.node(k)).value);
    for (int k = 1; k < n; ++k) ders.push_back(oracle::chebyshev_series(c, s.node(k)).deriv);
    double err = 0, scale = 1;
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.0 + i / 200.0;
      const double fx = oracle::chebyshev_series(c, x).value;
      err = std::max(err, std::abs(s.interpolate(vals, ders, x) - fx));
      scale = std::max(scale, std::abs(fx));
    }
    return err / scale;
  };
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = un(rng);
    worst = std::max(worst, rel_error(n, 2 * n - 1));
  }
  double weakest_control = 1e300;
  for (int n = 4; n <= 20; ++n) weakest_control = std::min(weakest_control, rel_error(n, 2 * n));
  o.require(worst <= 1e-8, "reproduction error " + str(worst));
  o.require(weakest_control > 1e-3, "degree-2n control error only " + str(weakest_control));
  if (o.ok) o.detail << "max rel error " << str(worst) << "; degree-2n control error >= " << str(weakest_control);
}

// 8
void certificate(Outcome& o) {
  double worst_rec = 0, worst_sub = 0;
  for (int nv = 4; nv <= 64; ++nv) {
    const Degree n(nv);
    const std::string tag = "n=" + std::to_string(nv);
    const double a = theorem3_constant(n);
    const auto cert = build_certificate(n, a);
    const int w = n.is_even() ? nv - 1 : nv - 2;
    for (const auto& t : cert.terms()) o.require(t.vanishing == (t.k == w), tag + " vanishing k=" + std::to_string(t.k));
    try {
      const auto rep = verify_certificate(cert, 10000);
      worst_rec = std::max(worst_rec, rep.reconstruction_error);
      o.require(rep.signs_ok, tag + " sign regions");
      o.require(rep.witness_ok, tag + " witness");
      o.require(rep.passed, tag + " not passed");
    } catch (const CertificateError& e) {
      o.require(false, tag + " reconstruction gap " + str(e.gap()));
    }
    const double sub = a - 0.01;
    const auto rep = verify_certificate(build_certificate(n, sub), 2001);
    const double gap = std::max(std::abs(rep.witness_via_certificate - rep.witness_expected),
                                std::abs(rep.witness_direct - rep.witness_expected));
    worst_sub = std::max(worst_sub, gap);
    o.require(gap <= 1e-10, tag + " sub-sharp witness gap " + str(gap));
    o.require(rep.witness_expected < 0, tag + " sub-sharp witness not negative");
  }
  if (o.ok) o.detail << "reconstruction <= " << str(worst_rec) << ", sub-sharp witness gap <= " << str(worst_sub);
}

// f1' and f3' at x from the recurrence oracle.
double f1_prime_oracle(int n, double x) {
  const auto c = oracle::recurrence(n, x);
  const long double n2 = static_cast<long double>(n) * n;
  return static_cast<double>(c.t1 - c.t1 / n2 - (x + 2.0L) / n2 * c.t2);
}
double f3_prime_oracle(int n, double x) {
  const auto c = oracle::recurrence(n, x);
  const long double n2 = static_cast<long double>(n) * n;
  return static_cast<double>(-(n2 - c.t1) / n2 - (1.0L - x) * c.t2 / n2);
}

// 9
void closed_forms(Outcome& o) {
  std::mt19937_64 rng(oracle::seed() + 3);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.0, 1.5);
  double g5 = 0, g7 = 0, g8 = 0, g9 = 0, g25 = 0;
  const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  for (int nv = 4; nv <= 64; ++nv) {
    const Degree n(nv);
    const HermiteScheme s(n);
    const auto nd = derivs_at_nodes(n);
    for (int k = 0; k <= nv; ++k) {
      const double xk = s.node(k);
      g5 = std::max({g5, std::abs(eval_ineq(InequalityFn::f1(n), xk) - f1_at_node(n, k, xk)),
                     std::abs(eval_ineq(InequalityFn::f3(n), xk) - f3_at_node(n, k, xk))});
    }
    for (int k = 1; k < nv; ++k) {
      const double xk = s.node(k);
      const auto i = static_cast<std::size_t>(k - 1);
      g7 = std::max({g7, rel(nd.f1_prime[i], f1_prime_oracle(nv, xk)), rel(nd.f3_prime[i], f3_prime_oracle(nv, xk))});
      const double v1 = eval_ineq(InequalityFn::f1(n), xk);
      const double v3 = eval_ineq(InequalityFn::f3(n), xk);
      for (int r = 0; r < 8; ++r) {
        const double x = ux(rng);
        const double a = ua(rng);
        g8 = std::max(g8, rel(l_f1_closed(k, xk, x), s.l_functional(k, v1, nd.f1_prime[i], x)));
        g9 = std::max(g9, rel(l_f3_closed(k, xk, x), s.l_functional(k, v3, nd.f3_prime[i], x)));
        const double generic = s.l_functional(k, eval_ineq(InequalityFn::fa(n, a), xk),
                                              (1 + a) * nd.f1_prime[i] - nd.f3_prime[i], x);
        g25 = std::max(g25, rel(l_fa_closed(k, xk, a, x), generic));
      }
    }
  }
  o.require(g5 <= 1e-11, "node values " + str(g5));
  o.require(g7 <= 1e-12, "node derivatives " + str(g7));
  o.require(g8 <= 1e-12, "L_k(f1) " + str(g8));
  o.require(g9 <= 1e-12, "L_k(f3) " + str(g9));
  o.require(g25 <= 1e-12, "L_k(F_a) " + str(g25));
  if (o.ok) {
    o.detail << "node values " << str(g5) << ", f' " << str(g7) << ", L(f1) " << str(g8) << ", L(f3) " << str(g9)
             << ", L(F_a) " << str(g25);
  }
}

// 10
void ultraspherical(Outcome& o) {
  const auto one = UltraParam::gegenbauer(1.0);
  double worst = 0;
  for (int n = 2; n <= 100; ++n) {
    for (int i = 0; i <= 50; ++i) {
      const double x = std::cos(kPi * (i + 0.3) / 51.0);
      const double t1 = static_cast<double>(oracle::recurrence(n, x).t1);
      const double lhs = n * eval_ultra(one, Degree(n - 1), x).value;
      worst = std::max(worst, std::abs(lhs - t1) / std::max(1.0, std::abs(t1)));
    }
  }
  o.require(worst <= 1e-10, "n C^1_{n-1} vs T' " + str(worst));
  for (double lam : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0}) {
    for (int n = 1; n <= 30; ++n) {
      o.require(corollary1_check(UltraParam::gegenbauer(lam), Degree(n), 20 * n + 1).passed,
                "lambda=" + str(lam) + " n=" + std::to_string(n));
    }
  }
  const auto ce = find_counterexample(UltraParam::chebyshev_t(), Degree(5));
  o.require(ce.hit && ce.hit->n == 5 && ce.hit->x == 0.0 && std::abs(ce.hit->value + 4.0) <= 1e-12,
            "Chebyshev-T counterexample");
  double resid = 0, most_negative = 0;
  for (auto [mu, lam] : {std::pair{2.0, 1.0}, {1.5, 1.0}, {3.0, 2.0}}) {
    for (int n = 1; n <= 32; ++n) {
      const auto c = connection_coeffs(UltraParam::gegenbauer(mu), UltraParam::gegenbauer(lam), Degree(n));
      resid = std::max(resid, c.residual);
      for (double v : c.coeffs) most_negative = std::min(most_negative, v);
    }
  }
  o.require(resid <= 1e-10, "connection residual " + str(resid));
  o.require(most_negative >= -1e-12, "negative coefficient " + str(most_negative));
  if (o.ok) o.detail << "T' gap " << str(worst) << ", connection residual " << str(resid) << ", D_5(0) = -4 found";
}

// 11
void zero_structure(Outcome& o) {
  int zeros = 0;
  double worst = 0;
  for (int nv = 4; nv <= 64; ++nv) {
    const Degree n(nv);
    const double tau = largest_zero_t2(n);
    o.require(tau > std::cos(2 * kPi / nv) && tau < std::cos(kPi / nv), "tau bracket n=" + std::to_string(nv));
    if (nv < 5) continue;
    const double n4 = std::pow(double(nv), 4);
    for (double t : zeros_t3_in(n, 0.0, std::cos(2 * kPi / nv))) {
      ++zeros;
      o.require(t < 1.0 - 8.0 / (double(nv) * nv), "t bound n=" + std::to_string(nv));
      const auto r = check_t3_relation(n, t);
      const double m = std::max(std::abs(r.derivative_residual), std::abs(r.ratio_residual)) / n4;
      worst = std::max(worst, m);
      o.require(m <= 1e-10, "relation n=" + std::to_string(nv) + " " + str(m));
    }
  }
  if (o.ok) o.detail << zeros << " zeros checked, max residual / n^4 = " << str(worst);
}

// 12
void figure(Outcome& o) {
  for (int n : {12, 13}) {
    const auto r = cli::run("--format csv figure --n " + std::to_string(n) + " --points 2001");
    o.require(r.status == 0, "figure exit " + std::to_string(r.status));
    const auto rows = cli::parse_xy(r.out);
    o.require(rows.size() == 2001, "row count");
    double mn = 1e300;
    for (const auto& [x, v] : rows) mn = std::min(mn, v);
    o.require(mn >= -1e-10, "n=" + std::to_string(n) + " min " + str(mn));
    const auto zs = cli::near_zeros(rows, 1e-3);
    const auto want = theorem1_equality_points(Degree(n));
    o.require(same_point_set(zs, want, 2.0 / 2000), "n=" + std::to_string(n) + " zero locations");
  }
  if (o.ok) o.detail << "n = 12, 13: minima >= -1e-10, zeros within one grid step of the equality sets";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"sharp constant agreement", sharp_constant},
      {"sharp constant inequality verification", theorem1},
      {"sharpness falsification", falsification},
      {"phi inequality on [0, 1]", theorem2},
      {"Askey-Gasper inequality", askey_gasper},
      {"identity residuals", residuals},
      {"Hermite reproduction", hermite},
      {"positivity certificate", certificate},
      {"closed-form cross-checks", closed_forms},
      {"ultraspherical extension", ultraspherical},
      {"zero structure", zero_structure},
      {"figure data", figure},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return std::min(failed, 125);
}
