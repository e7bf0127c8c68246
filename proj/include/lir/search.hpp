#ifndef LIR_SEARCH_HPP
#define LIR_SEARCH_HPP

#include <cmath>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lir/criterion.hpp"
#include "lir/smooth.hpp"

namespace lir {

// A (n, k, a) candidate surviving every filter, with provenance.
struct CandidateTriplet {
  u64 n, k, a, m;  // m = n + a - k + 1
  std::vector<u64> prime_witnesses;  // P_1 > P_2 > ... >= k+2 dividing Delta(m,k)
  std::vector<std::string> filters_passed;
};

struct ProcedureROptions {
  bool apply_exclusion_sets = true;  // the A_{k,p} filter for the supported (k,p)
};

// Primes whose tail-certified exclusion sets the final filter consults, by k.
inline std::vector<u64> exclusion_filter_primes(u64 k) {
  if (k == 2) return {5};
  if (k == 3) return {5, 7};
  if (k == 4 || k == 5) return {7};
  return {};
}

// The candidate search: for each window m and each a in range, keep (n,k,a)
// iff  (F1) n = m+k-1-a >= 2k,  (F2) P_1 <= a+k,  (F3) a lies in every A_P
// over the window primes P >= k+2,  (F4) a notin A_{k,p} for the
// tail-certified primes dividing the window. Output ordered by (m, a).
inline std::vector<CandidateTriplet> procedure_r(u64 k, u64 a_lo, u64 a_hi,
                                                 std::vector<u64> m_values,
                                                 const PrimeTable& t,
                                                 const ProcedureROptions& opt = {},
                                                 unsigned workers = 1) {
  if (k < 1) throw input_error("procedure_r: k >= 1");
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());

  std::map<u64, std::vector<u64>> Akp;  // tail-certified exclusion sets for this k
  if (opt.apply_exclusion_sets)
    for (u64 p : exclusion_filter_primes(k)) Akp[p] = compute_A_kp(k, p, t);

  // windows are sharded across workers; merging chunk results in index order
  // keeps the (m, a) ordering identical for any worker count
  auto run_chunk = [&](u64 lo_idx, u64 hi_idx) {
    std::map<u64, AdmissibleSet> Ap;  // cache by prime, local to the chunk
    auto admissible = [&](u64 p) -> const AdmissibleSet& {
      auto it = Ap.find(p);
      if (it == Ap.end()) it = Ap.emplace(p, admissible_set(p, k, t)).first;
      return it->second;
    };
    std::vector<CandidateTriplet> out;
    for (u64 idx = lo_idx; idx <= hi_idx; ++idx) {
      u64 m = m_values[idx];
      DeltaWindow w = delta_window(m, k, t);  // throws naming m+i if incomplete
      std::vector<u64> plist = w.primes_descending(k + 2);
      for (u64 a = a_lo; a <= a_hi; ++a) {
        if (m + k < a + 1 + 2 * k) continue;  // F1: n >= 2k
        u64 n = m + k - 1 - a;
        if (!plist.empty() && plist.front() > a + k) continue;  // F2
        bool in_all = true;
        for (u64 p : plist)
          if (!admissible(p).contains(a)) {
            in_all = false;
            break;
          }
        if (!in_all) continue;  // F3
        bool excluded = false;
        for (auto& [p, set] : Akp)
          if (std::binary_search(plist.begin(), plist.end(), p, std::greater<u64>()) &&
              std::binary_search(set.begin(), set.end(), a)) {
            excluded = true;
            break;
          }
        if (excluded) continue;  // F4
        CandidateTriplet c{n, k, a, m, plist, {"F1", "F2", "F3"}};
        if (opt.apply_exclusion_sets) c.filters_passed.push_back("F4");
        out.push_back(std::move(c));
      }
    }
    return out;
  };
  if (m_values.empty()) return {};
  return parallel_ranges<CandidateTriplet>(0, m_values.size() - 1, workers, run_chunk);
}

// The published a-range per degree: (3, 40] for k = 2, (10, 50] for
// k in {3, 4}, (max(30, 1.5k), max(50, 5k)] for k >= 5.
inline std::pair<u64, u64> published_a_range(u64 k) {
  if (k < 2) throw input_error("published_a_range: k >= 2");
  if (k == 2) return {4, 40};
  if (k <= 4) return {11, 50};
  return {std::max<u64>(30, (3 * k) / 2) + 1, std::max<u64>(50, 5 * k)};
}

// Window sources used by the published searches.
inline std::vector<u64> m_source_k2(u64 B, const PrimeTable& t) {
  std::vector<u64> ms;
  for (u64 N : consecutive_smooth(41, B, t).members)
    if (N >= 2) ms.push_back(N - 1);
  return ms;
}

inline std::vector<u64> m_source_small_k(u64 k, const PrimeTable& t) {
  std::vector<u64> ms;
  for (u64 m = k; m <= 59; ++m) ms.push_back(m);
  auto fam = M_sets(std::max<u64>(k, 3), t);
  for (u64 m : fam.sets.at(std::max<u64>(k, 3))) ms.push_back(m);
  return ms;
}

// ---- omega machinery ----

// The five-case prime-count bound on omega(Delta(a+1, k)).
inline u64 omega0(u64 k, u64 a, const PrimeTable& t) {
  if (k < 2) throw input_error("omega0: k >= 2");
  auto pi = [&](u64 num, u64 den) {  // pi(num/den) exactly
    return t.pi(double(num / den));
  };
  if (a <= k + 1) return t.pi(double(a + k));
  u64 cases[4] = {2 * k + 2, 3 * k + 3, 4 * k + 4, 5 * k};
  for (u64 idx = 0; idx < 4; ++idx) {
    if (a <= cases[idx]) {
      u64 jmax = idx + 2;
      u64 s = t.pi(double(k + 1));
      for (u64 j = 1; j <= jmax; ++j) {
        u64 hi = pi(a + k, j);
        u64 lo = std::max(t.pi(double(k + 1)), pi(a, j));
        s += hi - std::min(hi, lo);
      }
      return s;
    }
  }
  throw input_error("omega0: a > 5k");
}

// omega_1 = max omega_0(a) over 1.5k < a <= 5k.
inline u64 omega1(u64 k, const PrimeTable& t) {
  u64 best = 0;
  for (u64 a = (3 * k) / 2 + 1; a <= 5 * k; ++a) {
    if (2 * a <= 3 * k) continue;
    best = std::max(best, omega0(k, a, t));
  }
  return best;
}

// omega_2 = pi(k)+pi(k/2)+pi(k/3)+pi(k/4)+pi(6k/5), the k >= 100 bound.
inline u64 omega2(u64 k, const PrimeTable& t) {
  return t.pi(double(k)) + t.pi(double(k / 2)) + t.pi(double(k / 3)) + t.pi(double(k / 4)) +
         t.pi(double(6 * k / 5));
}

// True iff omega(Delta(m,k)) <= omega_1(k): the window is NOT discharged by
// the pigeonhole prime count.
inline bool omega_delta_gate(u64 m, u64 k, const PrimeTable& t) {
  if (k < 10) throw input_error("omega_delta_gate: k >= 10");
  return delta_window(m, k, t).omega() <= omega1(k, t);
}

// ---- Sylvester-Erdos bound ----

struct SylvesterBound {
  u64 k = 0, t = 0, t0 = 0, l = 0;
  struct PrimeTerm {
    u64 p;
    u32 h_p;   // 0 when no positive h satisfies the bracketing
    i64 L0;    // min(0, h t0 - sum floor((k-1)/p^u))
  };
  std::vector<PrimeTerm> terms;
  BigInt bound_num = 1, bound_den = 1;  // L^{t0} = bound_num / bound_den exactly
  double value = 0.0;                   // L(k, l), rounded upward

  // m <= L(k, l), decided exactly
  bool admits_m(u64 m) const {
    return boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(t0)) * bound_den <=
           bound_num;
  }
};

inline SylvesterBound sylvester_bound(u64 k, u64 tt, u64 l, const PrimeTable& table) {
  if (tt >= k) throw input_error("sylvester_bound: need t < k");
  if (l < 1 || l > table.primes.size()) throw input_error("sylvester_bound: bad l");
  SylvesterBound s;
  s.k = k;
  s.t = tt;
  s.t0 = k - tt;
  s.l = l;
  s.bound_num = big_factorial(k - 1);
  for (u64 i = 0; i < l; ++i) {
    u64 p = table.primes[i];
    SylvesterBound::PrimeTerm term{p, 0, 0};
    if (s.t0 < (k - 1) / p) {
      u64 h = 1;
      u64 ph = p;
      while (true) {
        u64 f_h = (k - 1) / ph;
        u64 f_h1 = (k - 1) / (ph * p);
        if (f_h1 <= s.t0 && s.t0 < f_h) {
          term.h_p = static_cast<u32>(h);
          i64 acc = static_cast<i64>(h) * static_cast<i64>(s.t0);
          u64 q = p;
          for (u64 u = 1; u <= h; ++u) {
            acc -= static_cast<i64>((k - 1) / q);
            q *= p;
          }
          term.L0 = std::min<i64>(0, acc);
          break;
        }
        ++h;
        ph *= p;
        if (ph > k) break;
      }
    }
    if (term.L0 < 0)
      s.bound_den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-term.L0));
    s.terms.push_back(term);
  }
  long double logL = (boost::multiprecision::log(
                          boost::multiprecision::cpp_bin_float_100(s.bound_num) /
                          boost::multiprecision::cpp_bin_float_100(s.bound_den))
                          .convert_to<long double>()) /
                     s.t0;
  s.value = std::nextafter(static_cast<double>(std::exp(logL)),
                           std::numeric_limits<double>::infinity());
  return s;
}

// ---- Grimm certificates ----

// Injective assignment i -> P_i with P_i | (m+i) over a run of composites.
struct GrimmCertificate {
  u64 m = 0, l = 0;
  std::vector<u64> assignment;  // assignment[i-1] divides m+i

  bool validate(const PrimeTable& t) const {
    std::set<u64> seen;
    for (u64 i = 1; i <= l; ++i) {
      u64 p = assignment[i - 1];
      if (!is_prime(p, t) || (m + i) % p != 0 || !seen.insert(p).second) return false;
    }
    return true;
  }
};

struct GrimmResult {
  bool ok = false;
  GrimmCertificate cert;
};

inline GrimmResult grimm_verify(u64 m, u64 l, const PrimeTable& t) {
  if (l < 1) throw input_error("grimm_verify: l >= 1");
  std::vector<std::vector<u64>> primes_of(l);
  for (u64 i = 1; i <= l; ++i) {
    if (is_prime(m + i, t))
      throw input_error("grimm_verify: m+" + std::to_string(i) + " = " + std::to_string(m + i) +
                        " is prime");
    Factorization f = factorize(m + i, t);
    for (auto& [p, e] : f.parts) primes_of[i - 1].push_back(p);
  }
  // Kuhn augmenting paths on the index-prime graph.
  std::map<u64, i64> matched_prime;  // prime -> index
  std::function<bool(u64, std::set<u64>&)> try_assign = [&](u64 idx, std::set<u64>& seen) {
    for (u64 p : primes_of[idx]) {
      if (!seen.insert(p).second) continue;
      auto it = matched_prime.find(p);
      if (it == matched_prime.end() || try_assign(static_cast<u64>(it->second), seen)) {
        matched_prime[p] = static_cast<i64>(idx);
        return true;
      }
    }
    return false;
  };
  GrimmResult r;
  for (u64 idx = 0; idx < l; ++idx) {
    std::set<u64> seen;
    if (!try_assign(idx, seen)) return r;
  }
  r.ok = true;
  r.cert.m = m;
  r.cert.l = l;
  r.cert.assignment.assign(l, 0);
  for (auto& [p, idx] : matched_prime) r.cert.assignment[idx] = p;
  return r;
}

// Verifies certificates for every maximal composite run between consecutive
// primes p, q with p in [start, end]. Returns failing run starts (empty on
// success) and the number of runs checked.
struct GrimmRangeReport {
  u64 runs = 0;
  std::vector<u64> failures;
};

inline GrimmRangeReport grimm_range(u64 start, u64 end, const PrimeTable& t,
                                    unsigned workers = 1) {
  std::vector<std::pair<u64, u64>> runs;  // (m, l)
  u64 prev = 0;
  for (u64 p : t.primes) {
    if (prev >= start && prev <= end && p > prev + 1) runs.emplace_back(prev, p - prev - 1);
    if (prev > end) break;
    prev = p;
  }
  GrimmRangeReport rep;
  rep.runs = runs.size();
  if (runs.empty()) return rep;
  rep.failures = parallel_ranges<u64>(0, runs.size() - 1, workers, [&](u64 lo, u64 hi) {
    std::vector<u64> bad;
    for (u64 i = lo; i <= hi; ++i)
      if (!grimm_verify(runs[i].first, runs[i].second, t).ok) bad.push_back(runs[i].first);
    return bad;
  });
  return rep;
}

// ---- small-k prime-window count ----

// l(k) = max over 1.5k < a <= 5k of |{p > 41 : a < p*i <= a+k for some i <= 5}|.
inline u64 small_k_ell(u64 k, const PrimeTable& t) {
  if (k < 10 || k > 17) throw input_error("small_k_ell: 10 <= k <= 17");
  u64 best = 0;
  for (u64 a = (3 * k) / 2 + 1; a <= 5 * k; ++a) {
    if (2 * a <= 3 * k) continue;
    std::set<u64> s;
    for (u64 p : t.primes) {
      if (p > a + k) break;
      if (p <= 41) continue;
      for (u64 i = 1; i <= 5; ++i)
        if (a < p * i && p * i <= a + k) s.insert(p);
    }
    best = std::max<u64>(best, s.size());
  }
  return best;
}

// ---- the a <= 12 restriction ----

// Exceptions inherited from the earlier factor bounds (the 3k/2 list and the
// k in {3,4,5} list), restricted to a <= 12: the candidate set for the
// coefficient-one polynomials.
inline std::vector<std::array<u64, 3>> theorem_a12_candidates() {
  static const std::vector<std::array<u64, 3>> st = {
      {6, 2, 3},   {7, 2, 2},   {7, 2, 3},  {7, 3, 3},  {8, 2, 1},  {8, 3, 2},  {12, 3, 4},
      {13, 2, 3},  {22, 2, 3},  {46, 3, 4}, {78, 2, 3}, {18, 4, 9}, {18, 4, 10}, {56, 4, 10},
      {17, 5, 11}, {19, 5, 9},  {40, 5, 12}};
  std::vector<std::array<u64, 3>> out;
  for (auto& tr : st)
    if (tr[2] <= 12) out.push_back(tr);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lir

#endif  // LIR_SEARCH_HPP
