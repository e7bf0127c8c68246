#ifndef LIR_NUMTHEORY_HPP
#define LIR_NUMTHEORY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "lir/common.hpp"

namespace lir {

// All primes up to `limit`, ascending. Immutable after construction and safe
// to share across threads.
struct PrimeTable {
  u64 limit = 0;
  std::vector<u64> primes;

  bool contains(u64 n) const {
    if (n > limit) throw capacity_error("PrimeTable::contains beyond sieve", n);
    return std::binary_search(primes.begin(), primes.end(), n);
  }
  // pi(x) for x <= limit
  u64 pi(double x) const {
    if (x < 2) return 0;
    if (x > static_cast<double>(limit))
      throw capacity_error("pi beyond sieve", static_cast<u64>(x) + 1);
    u64 v = static_cast<u64>(x);
    return static_cast<u64>(std::upper_bound(primes.begin(), primes.end(), v) - primes.begin());
  }
  u64 nth_prime(u64 k) const {  // 1-based
    if (k == 0 || k > primes.size())
      throw capacity_error("nth_prime beyond sieve", k);
    return primes[k - 1];
  }
};

inline PrimeTable prime_sieve(u64 limit) {
  if (limit < 2) throw input_error("prime_sieve: limit must be >= 2");
  if (limit > (u64(1) << 33))
    throw capacity_error("prime_sieve: flat sieve too large, use segmented sweeps", limit);
  std::vector<bool> comp(limit + 1, false);
  for (u64 i = 2; i * i <= limit; ++i)
    if (!comp[i])
      for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
  PrimeTable t;
  t.limit = limit;
  for (u64 i = 2; i <= limit; ++i)
    if (!comp[i]) t.primes.push_back(i);
  return t;
}

// Smallest-prime-factor sieve for fast factorization of dense small ranges.
struct SpfSieve {
  u64 limit = 0;
  std::vector<u32> spf;

  explicit SpfSieve(u64 lim) : limit(lim), spf(lim + 1) {
    if (lim >= (u64(1) << 32)) throw capacity_error("SpfSieve limit", lim);
    for (u64 i = 0; i <= lim; ++i) spf[i] = static_cast<u32>(i);
    for (u64 i = 2; i * i <= lim; ++i)
      if (spf[i] == i)
        for (u64 j = i * i; j <= lim; j += i)
          if (spf[j] == j) spf[j] = static_cast<u32>(i);
  }
};

// Exact multiset of (prime, exponent). `cofactor` > 1 flags an incomplete
// factorization whose remaining part could not be certified prime.
struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, u32>> parts;
  u64 cofactor = 1;

  bool complete() const { return cofactor == 1; }
  u32 omega() const { return static_cast<u32>(parts.size()) + (complete() ? 0 : 1); }
  u64 greatest_prime() const {  // P(n), requires completeness
    if (!complete()) throw capacity_error("greatest_prime of incomplete factorization", cofactor);
    return parts.empty() ? 1 : parts.back().first;
  }
  u32 ord(u64 p) const {
    for (auto& [q, e] : parts)
      if (q == p) return e;
    return 0;
  }
};

inline Factorization factorize(u64 n, const PrimeTable& table) {
  if (n == 0) throw input_error("factorize: n must be positive");
  Factorization f;
  f.n = n;
  u64 rem = n;
  for (u64 p : table.primes) {
    if (p * p > rem) break;
    if (rem % p == 0) {
      u32 e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      f.parts.emplace_back(p, e);
    }
  }
  if (rem > 1) {
    // No factor <= min(limit, sqrt(rem)); prime iff sqrt(rem) was covered.
    if (rem / table.limit <= table.limit)
      f.parts.emplace_back(rem, 1);
    else
      f.cofactor = rem;
  }
  std::sort(f.parts.begin(), f.parts.end());
  return f;
}

inline Factorization factorize(u64 n, const SpfSieve& s) {
  if (n == 0) throw input_error("factorize: n must be positive");
  if (n > s.limit) throw capacity_error("factorize beyond spf sieve", n);
  Factorization f;
  f.n = n;
  while (n > 1) {
    u64 p = s.spf[n];
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.parts.emplace_back(p, e);
  }
  std::sort(f.parts.begin(), f.parts.end());
  return f;
}

inline u32 ord_p(u64 p, u64 n) {
  if (n == 0) throw input_error("ord_p: n must be positive");
  u32 e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// Legendre's formula: ord_p(n!) = sum_{u>=1} floor(n / p^u).
inline u64 ord_factorial(u64 p, u64 n) {
  u64 s = 0;
  for (u64 q = p; q <= n; ) {
    s += n / q;
    if (q > n / p) break;  // next power would overflow past n
    q *= p;
  }
  return s;
}

inline i64 ord_binom(u64 p, u64 n, u64 k) {
  if (k > n) throw input_error("ord_binom: k > n");
  return static_cast<i64>(ord_factorial(p, n)) - static_cast<i64>(ord_factorial(p, k)) -
         static_cast<i64>(ord_factorial(p, n - k));
}

// P(n) with the convention P(1) = 1.
inline u64 greatest_prime_factor(u64 n, const PrimeTable& table) {
  Factorization f = factorize(n, table);
  return f.greatest_prime();
}

inline bool is_prime(u64 n, const PrimeTable& table);

inline void require_prime(u64 p, const PrimeTable& t) {
  if (!is_prime(p, t)) throw input_error("p = " + std::to_string(p) + " is not prime");
}

inline bool is_prime(u64 n, const PrimeTable& table) {
  if (n < 2) return false;
  if (n <= table.limit) return table.contains(n);
  if (n / table.limit > table.limit)
    throw capacity_error("is_prime beyond sieve", static_cast<u64>(std::sqrt(double(n))) + 1);
  for (u64 p : table.primes) {
    if (p * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

// Streams every integer of [lo, hi] in order together with its primality,
// sieving by segments so hi may exceed table.limit (needs sqrt(hi) <= limit).
template <typename Fn>  // fn(u64 n, bool is_prime)
inline void sweep_integers(u64 lo, u64 hi, const PrimeTable& table, Fn fn,
                           u64 segment = 1 << 20) {
  if (lo > hi) return;
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 1;
  if (root > table.limit) throw capacity_error("sweep_integers: sieve too small", root);
  std::vector<bool> comp(segment);
  for (u64 base = lo; base <= hi; base += segment) {
    u64 top = std::min(hi, base + segment - 1);
    std::fill(comp.begin(), comp.end(), false);
    for (u64 p : table.primes) {
      if (p * p > top) break;
      u64 start = std::max(p * p, ((base + p - 1) / p) * p);
      for (u64 j = start; j <= top; j += p) comp[j - base] = true;
    }
    for (u64 n = base; n <= top; ++n) fn(n, n >= 2 && !comp[n - base]);
  }
}

struct PiTheta {
  u64 pi = 0;
  double theta = 0.0;  // natural log
};

// Exact pi(x) and theta(x) from the sieve; theta summed in long double.
inline PiTheta pi_theta_exact(double x, const PrimeTable& table) {
  if (x < 0) throw input_error("pi_theta_exact: x must be >= 0");
  PiTheta r;
  if (x < 2) return r;
  u64 xi = static_cast<u64>(x);
  long double acc = 0.0L;
  if (xi <= table.limit) {
    for (u64 p : table.primes) {
      if (p > xi) break;
      ++r.pi;
      acc += std::log(static_cast<long double>(p));
    }
  } else {
    sweep_integers(2, xi, table, [&](u64 n, bool isp) {
      if (isp) {
        ++r.pi;
        acc += std::log(static_cast<long double>(n));
      }
    });
  }
  r.theta = static_cast<double>(acc);
  return r;
}

// Largest gap q - p over consecutive primes p < q with q <= hi, plus the
// variant counting any gap whose lower end is < hi.
struct GapScan {
  u64 max_gap_within = 0;    // both endpoints <= hi
  u64 max_gap_from_below = 0;  // lower endpoint < hi, upper may exceed
};

inline GapScan prime_gap_scan(u64 hi, const PrimeTable& table) {
  GapScan g;
  u64 prev = 0;
  for (u64 p : table.primes) {
    if (prev >= 2) {
      if (prev < hi) g.max_gap_from_below = std::max(g.max_gap_from_below, p - prev);
      if (p <= hi) g.max_gap_within = std::max(g.max_gap_within, p - prev);
    }
    if (prev >= hi) break;
    prev = p;
  }
  return g;
}

}  // namespace lir

#endif  // LIR_NUMTHEORY_HPP
