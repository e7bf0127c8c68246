#ifndef LIR_BOUNDS_HPP
#define LIR_BOUNDS_HPP

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "lir/numtheory.hpp"

namespace lir {

// Relative slack below which a passing floating-point comparison is reported
// as marginal instead of verified.
inline constexpr double kRelSlack = 1e-9;

struct BoundReport {
  std::string suite;
  double lo = 0, hi = 0;
  struct Violation {
    double x;
    double lhs, rhs;
    std::string note;
  };
  std::vector<Violation> violations;
  double min_slack = std::numeric_limits<double>::infinity();
  u64 points_checked = 0;

  bool success() const { return violations.empty(); }
  enum class Status { verified, marginal, failed };
  Status status() const {
    if (!success()) return Status::failed;
    return min_slack < kRelSlack ? Status::marginal : Status::verified;
  }
  const char* status_name() const {
    switch (status()) {
      case Status::verified: return "verified";
      case Status::marginal: return "marginal";
      default: return "failed";
    }
  }

  // Records lhs >= rhs (want_ge) or lhs <= rhs with relative slack tracking.
  void check(double x, double lhs, double rhs, bool want_ge, const std::string& note = "") {
    ++points_checked;
    double diff = want_ge ? lhs - rhs : rhs - lhs;
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    double slack = diff / scale;
    if (diff < 0)
      violations.push_back({x, lhs, rhs, note});
    else
      min_slack = std::min(min_slack, slack);
  }
  // Exact integer comparison lhs <= rhs; slack is the absolute margin.
  void check_int_le(double x, i64 lhs, i64 rhs, const std::string& note = "") {
    ++points_checked;
    if (lhs > rhs)
      violations.push_back({x, double(lhs), double(rhs), note});
    else
      min_slack = std::min(min_slack, double(rhs - lhs) + 1.0);
  }
};

namespace suites {

// pi(v) >= v / (log v - 1), valid from 5393.
inline BoundReport dusart_pi_lower(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"dusart-pi-lower", double(lo), double(hi)};
  if (lo < 5393) throw input_error("dusart-pi-lower holds from 5393");
  u64 pi = 0;
  sweep_integers(2, hi, t, [&](u64 n, bool isp) {
    if (isp) ++pi;
    if (n >= lo) r.check(double(n), double(pi), double(n) / (std::log(double(n)) - 1.0), true);
  });
  return r;
}

// pi(v) <= v/log v * (1 + 1.2762/log v) for v > 1.
inline BoundReport dusart_pi_upper(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"dusart-pi-upper", double(lo), double(hi)};
  lo = std::max<u64>(lo, 2);
  u64 pi = 0;
  sweep_integers(2, hi, t, [&](u64 n, bool isp) {
    if (isp) ++pi;
    if (n >= lo) {
      double L = std::log(double(n));
      r.check(double(n), double(pi), double(n) / L * (1.0 + 1.2762 / L), false);
    }
  });
  return r;
}

// v (1 - 3.965/log^2 v) <= theta(v) < 1.00008 v for v > 1.
inline BoundReport theta_bounds(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"theta-bounds", double(lo), double(hi)};
  lo = std::max<u64>(lo, 2);
  long double th = 0.0L;
  sweep_integers(2, hi, t, [&](u64 n, bool isp) {
    if (isp) th += std::log(static_cast<long double>(n));
    if (n >= lo) {
      double L = std::log(double(n));
      double lower = double(n) * (1.0 - 3.965 / (L * L));
      r.check(double(n), double(th), lower, true, "lower");
      r.check(double(n), double(th), 1.00008 * double(n), false, "upper");
    }
  });
  return r;
}

// p_k >= k log k.
inline BoundReport rosser_pk(u64 kmax, const PrimeTable& t) {
  BoundReport r{"rosser-pk", 1, double(kmax)};
  if (t.primes.size() < kmax) throw capacity_error("rosser-pk needs more primes", kmax);
  for (u64 k = 1; k <= kmax; ++k)
    r.check(double(k), double(t.primes[k - 1]), double(k) * std::log(double(k)), true);
  return r;
}

// ord_p((k-1)!) >= (k-p)/(p-1) - log(k-1)/log p for k >= 2, primes p < k.
inline BoundReport legendre_lower(u64 kmax, const PrimeTable& t) {
  BoundReport r{"legendre-lower", 2, double(kmax)};
  for (u64 k = 2; k <= kmax; ++k) {
    for (u64 p : t.primes) {
      if (p >= k) break;
      double lhs = double(ord_factorial(p, k - 1));
      double rhs = double(k - p) / double(p - 1) -
                   std::log(double(k - 1)) / std::log(double(p));
      r.check(double(k), lhs, rhs, true, "p=" + std::to_string(p));
    }
  }
  return r;
}

// Robbins: sqrt(2 pi k) e^{-k} k^k e^{1/(12k+1)} < k! < sqrt(2 pi k) e^{-k} k^k e^{1/(12k)}.
inline BoundReport robbins_factorial(u64 kmax) {
  BoundReport r{"robbins-factorial", 1, double(kmax)};
  long double logfact = 0.0L;
  const long double pi = 3.14159265358979323846264338327950288L;
  for (u64 k = 1; k <= kmax; ++k) {
    logfact += std::log(static_cast<long double>(k));
    long double base = 0.5L * std::log(2.0L * pi * k) - k + k * std::log((long double)k);
    r.check(double(k), double(logfact), double(base + 1.0L / (12.0L * k + 1)), true, "lower");
    r.check(double(k), double(logfact), double(base + 1.0L / (12.0L * k)), false, "upper");
  }
  return r;
}

inline i64 pi_sum_lhs(u64 k, const std::vector<u32>& pi_prefix) {
  return i64(pi_prefix[k]) + pi_prefix[k / 2] + pi_prefix[k / 3] + pi_prefix[k / 4] +
         pi_prefix[6 * k / 5];
}

inline std::vector<u32> pi_prefix_table(u64 hi, const PrimeTable& t) {
  std::vector<u32> pre(hi + 1, 0);
  u32 c = 0;
  std::size_t idx = 0;
  for (u64 n = 0; n <= hi; ++n) {
    if (idx < t.primes.size() && t.primes[idx] == n) {
      ++c;
      ++idx;
    }
    pre[n] = c;
  }
  return pre;
}

// pi(v1 + v2) <= pi(v1) + pi(v2) for 2 <= v1 < v2 <= (7/5) v1 log v1 loglog v1.
inline BoundReport pi_subadditive(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"pi-subadditive", double(lo), double(hi)};
  lo = std::max<u64>(lo, 2);
  double worst_cap = 1.4 * hi * std::log(double(hi)) * std::log(std::log(double(hi)));
  auto pre = pi_prefix_table(hi + static_cast<u64>(std::max(0.0, worst_cap)) + 2, t);
  for (u64 v1 = lo; v1 <= hi; ++v1) {
    double cap = v1 >= 3 ? 1.4 * v1 * std::log(double(v1)) * std::log(std::log(double(v1)))
                         : 0.0;
    u64 top = cap > double(v1) ? static_cast<u64>(cap) : 0;
    for (u64 v2 = v1 + 1; v2 <= top; ++v2)
      r.check_int_le(double(v1), i64(pre[v1 + v2]), i64(pre[v1]) + i64(pre[v2]),
                     "v2=" + std::to_string(v2));
  }
  return r;
}

// The closing constant of the m <= 123k prime-pair argument.
inline BoundReport corollary3_constant() {
  BoundReport r{"corollary3-constant", 0, 0};
  double L = std::log(5e9);
  double c = 3.965 / (L * L);
  double ratio = (1.0 - c) / (8.0 / 1e5 + c);
  r.check(0, ratio, 123.0, true, "ratio " + std::to_string(ratio));
  return r;
}

// pi(k)+pi(k/2)+pi(k/3)+pi(k/4)+pi(6k/5) <= k-2 on [lo, hi].
inline BoundReport corollary4_k2(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"corollary4-k2", double(lo), double(hi)};
  auto pre = pi_prefix_table(6 * hi / 5 + 2, t);
  for (u64 k = lo; k <= hi; ++k) r.check_int_le(double(k), pi_sum_lhs(k, pre), i64(k) - 2);
  return r;
}

// Same left side <= pi(4k) on [lo, hi].
inline BoundReport corollary4_pi4k(u64 lo, u64 hi, const PrimeTable& t) {
  BoundReport r{"corollary4-pi4k", double(lo), double(hi)};
  auto pre = pi_prefix_table(4 * hi + 2, t);
  for (u64 k = lo; k <= hi; ++k) r.check_int_le(double(k), pi_sum_lhs(k, pre), i64(pre[4 * k]));
  return r;
}

inline double J_of_k(double k) {
  auto term = [](double x) { return (1.0 + 1.2762 / std::log(x)); };
  double s = (6.0 / 5.0) / std::log(6.0 * k / 5.0) * term(6.0 * k / 5.0);
  for (int j = 1; j <= 4; ++j) s += 1.0 / (j * std::log(k / j)) * term(k / j);
  return std::exp(1.0 + 10.0 * std::log(10.0) * (1.0 - s));
}

// Direct evaluation of the iterated lower bounds J(500), J(4581), J(578802).
inline BoundReport jk_iteration() {
  BoundReport r{"jk-iteration", 500, 578802};
  r.check(500, J_of_k(500), 4581.0, true, "J(500)");
  r.check(4581, J_of_k(4581), 578802.0, true, "J(4581)");
  r.check(578802, J_of_k(578802), 4.5e7, true, "J(578802)");
  return r;
}

// Numeric check of binom(m+k-1, k) <= 2.83^{k+sqrt(m+k-1)} (m+k-1)^{k-mu}
// at sample points with m+k-1 < k^{3/2}; mu counts window terms with P <= k.
inline BoundReport k32_binomial_eval(const std::vector<std::pair<u64, u64>>& samples,
                                     const PrimeTable& t) {
  BoundReport r{"k32-binomial-eval", 0, 0};
  for (auto [m, k] : samples) {
    double top = double(m + k - 1);
    if (!(top < std::pow(double(k), 1.5)))
      throw input_error("k32 sample needs m+k-1 < k^1.5");
    u64 mu = 0;
    for (u64 i = 0; i < k; ++i)
      if (greatest_prime_factor(m + i, t) <= k) ++mu;
    long double logbinom = 0.0L;
    for (u64 i = 1; i <= k; ++i)
      logbinom += std::log((long double)(m + k - i)) - std::log((long double)i);
    long double logrhs = (k + std::sqrt(top)) * std::log(2.83L) +
                         (long double)(k - mu) * std::log((long double)top);
    r.check(double(m), double(logbinom), double(logrhs), false,
            "k=" + std::to_string(k) + " mu=" + std::to_string(mu));
  }
  return r;
}

}  // namespace suites

struct BoundOptions {
  std::vector<std::pair<u64, u64>> k32_samples = {
      {50, 20}, {500, 100}, {900, 100}, {3000, 250}, {10000, 500}};
};

inline BoundReport verify_analytic_bounds(const std::string& suite, u64 lo, u64 hi,
                                          const PrimeTable& t,
                                          const BoundOptions& opt = {}) {
  if (suite == "dusart-pi-lower") return suites::dusart_pi_lower(lo, hi, t);
  if (suite == "dusart-pi-upper") return suites::dusart_pi_upper(lo, hi, t);
  if (suite == "theta-bounds") return suites::theta_bounds(lo, hi, t);
  if (suite == "rosser-pk") return suites::rosser_pk(hi, t);
  if (suite == "legendre-lower") return suites::legendre_lower(hi, t);
  if (suite == "robbins-factorial") return suites::robbins_factorial(hi);
  if (suite == "pi-subadditive") return suites::pi_subadditive(lo, hi, t);
  if (suite == "corollary3-constant") return suites::corollary3_constant();
  if (suite == "corollary4-k2") return suites::corollary4_k2(std::max<u64>(lo, 61), hi, t);
  if (suite == "corollary4-pi4k") return suites::corollary4_pi4k(std::max<u64>(lo, 8000), hi, t);
  if (suite == "jk-iteration") return suites::jk_iteration();
  if (suite == "k32-binomial-eval") return suites::k32_binomial_eval(opt.k32_samples, t);
  throw input_error("unknown bound suite: " + suite);
}

inline const std::vector<std::string>& bound_suite_names() {
  static const std::vector<std::string> names = {
      "dusart-pi-lower", "dusart-pi-upper", "theta-bounds",       "rosser-pk",
      "legendre-lower",  "robbins-factorial", "pi-subadditive",   "corollary3-constant",
      "corollary4-k2",   "corollary4-pi4k", "jk-iteration",       "k32-binomial-eval"};
  return names;
}

}  // namespace lir

#endif  // LIR_BOUNDS_HPP
