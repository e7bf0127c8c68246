#ifndef LIR_LAGUERRE_K1_HPP
#define LIR_LAGUERRE_K1_HPP

#include <set>

#include "lir/dioph.hpp"
#include "lir/numtheory.hpp"

namespace lir {
namespace k1 {

// Degrees checked irreducible by direct computation before the linear-factor
// pipeline starts; candidates below use n > 18 and n outside this list.
inline const std::set<u64>& direct_check_degrees() {
  static const std::set<u64> s = {24, 25, 27, 30, 32, 36, 45, 48,
                                  54, 60, 64, 72, 75, 80, 90, 112, 120};
  return s;
}

// a where p = 3 only excludes outside a finite exception set.
inline const std::set<u64>& S1() {
  static const std::set<u64> s = {16, 24, 25, 34, 43};
  return s;
}

// P_a: the primes allowed to divide n(n+a) once every usable prime has been
// spent on exclusions.
inline std::set<u64> build_P_a(u64 a, const PrimeTable& t) {
  if (a == 23) return {2, 3, 5};
  if (a == 47) return {2, 3, 7};
  if (a == 48) return {2, 5, 7};
  std::set<u64> s = {2};
  for (auto& [p, e] : factorize(a + 1, t).parts) s.insert(p);
  if (S1().count(a)) s.insert(3);
  return s;
}

// Largest j <= J with ord_p((a+1)...(a+j)) >= j, i.e. phi_j >= 1; the tail
// certificate guarantees phi_j < 1 for all j > J. Returns 0 when phi_j < 1
// everywhere (p then excludes unconditionally).
inline u64 phi_threshold_jmax(u64 p, u64 a, u64 J = 50) {
  u64 best = 0;
  u64 ord = 0;
  for (u64 j = 1; j <= J; ++j) {
    ord += ord_p(p, a + j);
    if (ord >= j) best = j;
  }
  Rat tail = Rat(1, i64(p - 1)) +
             (Rat(i64(a), i64(p - 1)) - Rat(i64(ord_factorial(p, a)))) / Rat(i64(J + 1));
  if (!(tail < Rat(1)))
    throw capacity_error("phi_threshold_jmax: tail certificate fails, raise J", J);
  return best;
}

// phi'_j(p) < 1 for all 1 <= j <= j_star (exact valuations).
inline bool phi_prime_below_one(u64 p, u64 a, u64 n, u64 j_star) {
  i64 ord = 0;
  for (u64 j = 1; j <= j_star; ++j) {
    ord += ord_p(p, a + j);
    if (ord - ord_binom(p, n, j) >= static_cast<i64>(j)) return false;
  }
  return true;
}

// Final certificate with p = 2: phi'_j(2) < 1 for all 1 <= j <= n.
inline bool final_check(u64 n, u64 a) {
  if (n < 1) throw input_error("final_check: n >= 1");
  i64 ord = 0;
  i64 ord_n_fact = static_cast<i64>(ord_factorial(2, n));
  for (u64 j = 1; j <= n; ++j) {
    ord += ord_p(2, a + j);
    i64 ord_binom_j =
        ord_n_fact - static_cast<i64>(ord_factorial(2, j)) -
        static_cast<i64>(ord_factorial(2, n - j));
    if (ord - ord_binom_j >= static_cast<i64>(j)) return false;
  }
  return true;
}

struct Survivor {
  u64 n, a;
};

// The small-degree screen: n(n+a) must be P_a-smooth, n must fit the
// power-of-two shapes (odd part > 1 forces ord_2(n) > ord_2(a)), and no odd
// prime dividing n may push all of phi'_1..phi'_{jmax} below one.
inline std::vector<Survivor> screen(u64 a_lo, u64 a_hi, u64 n_limit, const PrimeTable& t) {
  if (a_lo <= 10) throw input_error("screen: a > 10");
  std::vector<Survivor> out;
  for (u64 a = a_lo; a <= a_hi; ++a) {
    std::set<u64> Pa = build_P_a(a, t);
    u64 delta = ord_p(2, a);
    for (u64 n = 19; n <= n_limit; ++n) {
      if (direct_check_degrees().count(n)) continue;
      u64 v2 = ord_p(2, n);
      if ((n >> v2) > 1 && v2 <= delta) continue;  // power-of-two shape: a nontrivial odd part needs ord_2(n) > ord_2(a)
      auto smooth_in_Pa = [&](u64 v) {
        for (auto& [p, e] : factorize(v, t).parts)
          if (!Pa.count(p)) return false;
        return true;
      };
      if (!smooth_in_Pa(n) || !smooth_in_Pa(n + a)) continue;
      bool excluded = false;
      for (auto& [p, e] : factorize(n, t).parts) {
        if (p == 2) continue;
        u64 jmax = phi_threshold_jmax(p, a);
        if (jmax == 0 || phi_prime_below_one(p, a, n, jmax)) {
          excluded = true;
          break;
        }
      }
      if (!excluded) out.push_back({n, a});
    }
  }
  return out;
}

// One exponential system for degrees >= 512: solving it gives
// n = mult * 2^(alpha + shift).
struct K1System {
  u64 a;
  ExpDiophEquation eq;
  u64 mult;
  u32 shift;
};

// The generic systems for a: one equation per nonempty subset of the odd
// primes of P_a, prod p^{beta_p} - 2^alpha = a / 2^{ord_2(a)}, plus the
// special shapes for a in {24, 25, 44, 48}.
inline std::vector<K1System> systems_for_a(u64 a, const PrimeTable& t) {
  std::vector<K1System> out;
  std::vector<u64> odd;
  for (u64 p : build_P_a(a, t))
    if (p != 2) odd.push_back(p);
  u64 delta = ord_p(2, a);
  i64 rhs = static_cast<i64>(a >> delta);
  for (u64 mask = 1; mask < (u64(1) << odd.size()); ++mask) {
    ExpDiophEquation eq;
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (mask & (u64(1) << i)) eq.lhs_primes.push_back(odd[i]);
    eq.rhs_primes = {2};
    eq.rhs_coeff = 1;
    eq.rhs_const = rhs;
    eq.alpha_min = 3;
    eq.label = "a=" + std::to_string(a) + " generic";
    out.push_back({a, eq, 1, static_cast<u32>(delta)});
  }
  auto special = [&](std::vector<u64> lhs, u64 coeff, i64 c, u64 mult, u32 shift) {
    ExpDiophEquation eq;
    eq.lhs_primes = std::move(lhs);
    eq.rhs_primes = {2};
    eq.rhs_coeff = coeff;
    eq.rhs_const = c;
    eq.alpha_min = 3;
    eq.label = "a=" + std::to_string(a) + " special";
    out.push_back({a, eq, mult, shift});
  };
  if (a == 24) {
    special({3}, 5, 1, 15, 3);
    // odd part 3: n = 3*2^(alpha+3), n+24 = 8*3^(beta+1)*(5^gamma)
    special({3}, 1, 1, 3, 3);
    special({3, 5}, 1, 1, 3, 3);
  }
  if (a == 25) special({13}, 3, 25, 3, 0);
  if (a == 44) special({5}, 3, 11, 3, 2);
  if (a == 48) special({5}, 7, 3, 7, 4);
  return out;
}

struct EquationCandidate {
  u64 a;
  u64 n;
  std::string label;
  DiophSolution sol;
};

// Runs the residue prefilter and the box search over every system for the
// given a values; keeps solutions whose derived degree is >= 512 (smaller
// degrees were enumerated by the screen).
inline std::vector<EquationCandidate> equation_stage(const std::vector<u64>& a_values,
                                                     u32 B_exp, const PrimeTable& t) {
  std::vector<EquationCandidate> out;
  for (u64 a : a_values) {
    for (const auto& sys : systems_for_a(a, t)) {
      if (!mod_filter_possible(sys.eq, 8)) continue;
      for (const auto& sol : exp_dioph_search(sys.eq, B_exp)) {
        u64 alpha = sol.rhs_exps[0];
        if (alpha + sys.shift >= 63)
          throw capacity_error("equation_stage: derived degree overflows", alpha + sys.shift);
        u64 n = sys.mult << (alpha + sys.shift);
        if (n >= 512) out.push_back({a, n, sys.eq.label, sol});
      }
    }
  }
  return out;
}

}  // namespace k1
}  // namespace lir

#endif  // LIR_LAGUERRE_K1_HPP
