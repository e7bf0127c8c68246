#ifndef LIR_CRITERION_HPP
#define LIR_CRITERION_HPP

#include <array>
#include <optional>

#include "lir/numtheory.hpp"

namespace lir {

enum class PolyMode { Schur, Laguerre };

// Normalized valuation profile phi_j = ord_p(Delta_j)/j with
// Delta_j = (a+1)...(a+j); Laguerre mode subtracts ord_p(binom(n, j)).
// tail_bound dominates phi_j for every j > J_explicit.
struct PhiProfile {
  u64 p = 0;
  u64 a = 0;
  u64 k = 1;
  PolyMode mode = PolyMode::Schur;
  u64 n = 0;  // Laguerre mode only
  u64 J_explicit = 50;
  std::vector<Rat> values;  // values[j-1] = phi_j (or phi'_j)
  Rat tail_bound{0};
};

inline PhiProfile phi_profile(u64 p, u64 a, u64 k, PolyMode mode, std::optional<u64> n,
                              const PrimeTable& t, u64 J_explicit = 50) {
  require_prime(p, t);
  if (mode == PolyMode::Laguerre && !n)
    throw input_error("phi_profile: Laguerre mode requires n");
  PhiProfile pr;
  pr.p = p;
  pr.a = a;
  pr.k = k;
  pr.mode = mode;
  pr.n = n.value_or(0);
  pr.J_explicit = J_explicit;
  pr.values.reserve(J_explicit);
  i64 ord_delta = 0;
  for (u64 j = 1; j <= J_explicit; ++j) {
    ord_delta += ord_p(p, a + j);
    i64 num = ord_delta;
    if (mode == PolyMode::Laguerre) num -= ord_binom(p, pr.n, std::min(j, pr.n));
    pr.values.emplace_back(num, static_cast<i64>(j));
  }
  // ord_p(Delta_j)/j <= 1/(p-1) + (a/(p-1) - ord_p(a!)) / (J+1)  for j > J
  Rat head(1, static_cast<i64>(p - 1));
  Rat excess = Rat(static_cast<i64>(a), static_cast<i64>(p - 1)) -
               Rat(static_cast<i64>(ord_factorial(p, a)));
  pr.tail_bound = head + excess / Rat(static_cast<i64>(J_explicit + 1));
  return pr;
}

struct PhiCheck {
  bool ok = true;
  std::optional<u64> first_violation;  // j, when ok == false
  bool tail_used = false;
};

// phi_j < threshold for all 1 <= j <= j_max, using the tail certificate for
// indices beyond the explicit range. When the certificate is not strict
// (e.g. a = 0 makes it exactly 1/(p-1)) a finite j_max is settled by direct
// extension instead. Comparison is exact throughout.
inline PhiCheck all_phi_below(const PhiProfile& pr, const Rat& threshold, u64 j_max) {
  if (threshold <= Rat(0)) throw input_error("all_phi_below: threshold must be positive");
  constexpr u64 kDirectCap = 1 << 22;
  PhiCheck res;
  u64 upto = std::min<u64>(j_max, pr.values.size());
  for (u64 j = 1; j <= upto; ++j) {
    if (!(pr.values[j - 1] < threshold)) {
      res.ok = false;
      res.first_violation = j;
      return res;
    }
  }
  if (j_max <= pr.J_explicit) return res;
  res.tail_used = true;
  if (pr.tail_bound < threshold) return res;
  if (j_max > kDirectCap) {
    res.ok = false;
    res.first_violation = pr.J_explicit + 1;
    return res;
  }
  i64 ord = 0;
  for (u64 j = 1; j <= pr.J_explicit; ++j) ord += static_cast<i64>(ord_p(pr.p, pr.a + j));
  for (u64 j = pr.J_explicit + 1; j <= j_max; ++j) {
    ord += static_cast<i64>(ord_p(pr.p, pr.a + j));
    i64 num = ord;
    if (pr.mode == PolyMode::Laguerre) num -= ord_binom(pr.p, pr.n, std::min(j, pr.n));
    if (!(Rat(num, static_cast<i64>(j)) < threshold)) {
      res.ok = false;
      res.first_violation = j;
      return res;
    }
  }
  return res;
}

// One instance of the irreducibility lemma's hypotheses.
struct CriterionQuery {
  u64 n, k, a, p;
  PolyMode mode = PolyMode::Schur;
};

struct Verdict {
  enum class Outcome { NoFactorDegreeK, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  u64 p = 0;
  bool divides_window = false;   // p | prod (a+n-k+i)  (Laguerre: also (n-k+i) terms)
  bool avoids_delta_k = false;   // p does not divide (a+1)...(a+k)
  bool route_size = false;       // p >= min(2a/k, k + a/k)
  bool route_square = false;     // p > 2k and p^2 - p >= a
  bool excluded() const { return outcome == Outcome::NoFactorDegreeK; }
};

// Decides whether prime p certifies "no factor of degree k" for f_{n,a}
// (Schur) or L_n^(a) (Laguerre). |a_0 a_n| = 1 is assumed. All comparisons
// exact; u_0 = a/k is never floated.
inline Verdict lemma1_verdict(const CriterionQuery& q, const PrimeTable& t) {
  if (q.k < 1 || 2 * q.k > q.n) throw input_error("lemma1_verdict: need 1 <= k <= n/2");
  require_prime(q.p, t);
  Verdict v;
  v.p = q.p;
  if (q.p < q.k + 2) return v;
  for (u64 i = 1; i <= q.k; ++i) {
    if ((q.a + q.n - q.k + i) % q.p == 0) v.divides_window = true;
    if (q.mode == PolyMode::Laguerre && (q.n - q.k + i) % q.p == 0) v.divides_window = true;
  }
  v.avoids_delta_k = true;
  for (u64 i = 1; i <= q.k; ++i)
    if ((q.a + i) % q.p == 0) v.avoids_delta_k = false;
  // (5): p >= min(2u_0, k+u_0)  <=>  pk >= 2a or pk >= k^2 + a
  v.route_size = (q.p * q.k >= 2 * q.a) || (q.p * q.k >= q.k * q.k + q.a);
  v.route_square = (q.p > 2 * q.k) && (q.p * q.p - q.p >= q.a);
  if (v.divides_window && v.avoids_delta_k && (v.route_size || v.route_square))
    v.outcome = Verdict::Outcome::NoFactorDegreeK;
  return v;
}

// The nine (k, p) pairs with an established tail certificate.
inline const std::array<std::pair<u64, u64>, 9>& tail_certified_pairs() {
  static const std::array<std::pair<u64, u64>, 9> pairs = {
      {{1, 3}, {1, 5}, {1, 7}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {4, 7}, {5, 7}}};
  return pairs;
}

// A_{k,p}: all a <= a_max with p not dividing Delta_k and phi_j < 1/k for
// every j, decided by the explicit range plus the tail certificate.
inline std::vector<u64> compute_A_kp(u64 k, u64 p, const PrimeTable& t, u64 a_max = 50,
                                     u64 J_explicit = 50) {
  bool supported = false;
  for (auto& [kk, pp] : tail_certified_pairs()) supported |= (kk == k && pp == p);
  if (!supported)
    throw input_error("compute_A_kp: unsupported (k, p) pair (" + std::to_string(k) + ", " +
                      std::to_string(p) + ")");
  std::vector<u64> out;
  Rat inv_k(1, static_cast<i64>(k));
  for (u64 a = 0; a <= a_max; ++a) {
    bool divides = false;
    for (u64 i = 1; i <= k; ++i)
      if ((a + i) % p == 0) divides = true;
    if (divides) continue;
    PhiProfile pr = phi_profile(p, a, k, PolyMode::Schur, std::nullopt, t, J_explicit);
    if (all_phi_below(pr, inv_k, std::numeric_limits<u64>::max()).ok) out.push_back(a);
  }
  return out;
}

// The admissible set A_p: union of [ip-k, ip-1] for i <= r_p
// plus everything above p*r_p.
struct AdmissibleSet {
  u64 p = 0, k = 0, r_p = 0;

  u64 tail_threshold() const { return p * r_p; }
  bool contains(u64 a) const {
    if (a == 0) return false;
    if (a > tail_threshold()) return true;
    // a in [ip-k, ip-1]  <=>  p | (a+j) for some 1 <= j <= k
    for (u64 j = 1; j <= k; ++j)
      if ((a + j) % p == 0) return true;
    return false;
  }
  std::vector<std::pair<u64, u64>> intervals() const {
    std::vector<std::pair<u64, u64>> iv;
    for (u64 i = 1; i <= r_p; ++i) {
      u64 lo = (i * p > k) ? i * p - k : 1;
      iv.emplace_back(std::max<u64>(lo, 1), i * p - 1);
    }
    return iv;
  }
};

inline AdmissibleSet admissible_set(u64 p, u64 k, const PrimeTable& t) {
  require_prime(p, t);
  if (p < k + 2) throw input_error("admissible_set: need p >= k+2");
  AdmissibleSet s;
  s.p = p;
  s.k = k;
  s.r_p = (p < 2 * k) ? k / 2 : p - 1;
  return s;
}

// B{Q_1,...,Q_g} = intersection of the A_Q over a range of a.
inline std::vector<u64> intersect_B(const std::vector<u64>& primes, u64 k, u64 a_lo, u64 a_hi,
                                    const PrimeTable& t) {
  if (primes.empty()) throw input_error("intersect_B: need at least one prime");
  std::vector<AdmissibleSet> sets;
  for (u64 p : primes) sets.push_back(admissible_set(p, k, t));
  std::vector<u64> out;
  for (u64 a = a_lo; a <= a_hi; ++a) {
    bool in_all = true;
    for (auto& s : sets)
      if (!s.contains(a)) {
        in_all = false;
        break;
      }
    if (in_all) out.push_back(a);
  }
  return out;
}

}  // namespace lir

#endif  // LIR_CRITERION_HPP
