#ifndef LIR_DIOPH_HPP
#define LIR_DIOPH_HPP

#include <map>
#include <numeric>
#include <string>

#include "lir/common.hpp"

namespace lir {

// prod lhs_primes^{x_i} - rhs_coeff * prod rhs_primes^{y_j} = rhs_const,
// all exponents >= 1; an exponent on base 2 must additionally reach
// alpha_min (the "8 | 2^alpha" constraint).
struct ExpDiophEquation {
  std::string label;
  std::vector<u64> lhs_primes;
  u64 rhs_coeff = 1;
  std::vector<u64> rhs_primes;
  i64 rhs_const = 0;
  u32 alpha_min = 3;

  u32 min_exp(u64 p) const { return p == 2 ? alpha_min : 1; }
};

// One solution: exponents for the lhs primes followed by the rhs primes.
struct DiophSolution {
  std::vector<u32> lhs_exps;
  std::vector<u32> rhs_exps;
  bool operator==(const DiophSolution& o) const {
    return lhs_exps == o.lhs_exps && rhs_exps == o.rhs_exps;
  }
  bool operator<(const DiophSolution& o) const {
    return std::tie(lhs_exps, rhs_exps) < std::tie(o.lhs_exps, o.rhs_exps);
  }
};

namespace detail {

inline void enumerate_products(const std::vector<u64>& primes, const ExpDiophEquation& eq,
                               u32 B, const BigInt& cutoff, BigInt scale, std::size_t i,
                               std::vector<u32>& exps, BigInt value,
                               const std::function<void(const BigInt&, const std::vector<u32>&)>& emit) {
  if (i == primes.size()) {
    emit(value, exps);
    return;
  }
  u64 p = primes[i];
  BigInt w = value;
  for (u32 e = 1; e <= B; ++e) {
    w *= p;
    if (e < eq.min_exp(p)) continue;
    if (w * scale > cutoff) break;
    exps.push_back(e);
    enumerate_products(primes, eq, B, cutoff, scale, i + 1, exps, w, emit);
    exps.pop_back();
  }
}

}  // namespace detail

// Exhaustive search inside the exponent box [1, B]^g (respecting alpha_min).
// Exact big-integer evaluation throughout; results sorted.
inline std::vector<DiophSolution> exp_dioph_search(const ExpDiophEquation& eq, u32 B) {
  if (B < 1) throw input_error("exp_dioph_search: B >= 1");
  if (eq.lhs_primes.empty() || eq.rhs_primes.empty())
    throw input_error("exp_dioph_search: both sides need at least one prime");
  // Any matching pair satisfies lhs <= rhs_max + |const| and vice versa; cap
  // enumeration at the smaller side's ceiling to keep the box tight.
  BigInt rhs_max = eq.rhs_coeff;
  for (u64 p : eq.rhs_primes) rhs_max *= boost::multiprecision::pow(BigInt(p), B);
  BigInt lhs_max = 1;
  for (u64 p : eq.lhs_primes) lhs_max *= boost::multiprecision::pow(BigInt(p), B);
  BigInt abs_c = eq.rhs_const < 0 ? BigInt(-eq.rhs_const) : BigInt(eq.rhs_const);

  std::map<BigInt, std::vector<std::vector<u32>>> rhs_values;
  std::vector<u32> exps;
  detail::enumerate_products(eq.rhs_primes, eq, B, lhs_max + abs_c, BigInt(eq.rhs_coeff), 0,
                             exps, BigInt(1),
                             [&](const BigInt& v, const std::vector<u32>& e) {
                               rhs_values[v * eq.rhs_coeff].push_back(e);
                             });
  std::vector<DiophSolution> sols;
  detail::enumerate_products(eq.lhs_primes, eq, B, rhs_max + abs_c, BigInt(1), 0, exps,
                             BigInt(1), [&](const BigInt& v, const std::vector<u32>& e) {
                               BigInt want = v - eq.rhs_const;
                               auto it = rhs_values.find(want);
                               if (it == rhs_values.end()) return;
                               for (auto& re : it->second) sols.push_back({e, re});
                             });
  std::sort(sols.begin(), sols.end());
  return sols;
}

// Residue feasibility modulo M: is there any choice of exponent residues
// making the equation solvable mod M? Used with M = 8 and M = 7 to discharge
// whole families before searching.
inline bool mod_filter_possible(const ExpDiophEquation& eq, u64 M) {
  auto orbit = [&](u64 p, u32 emin) {
    std::vector<u64> res;
    u64 v = 1;
    for (u32 e = 1; e <= 64; ++e) {
      v = (v * (p % M)) % M;
      if (e >= emin && std::find(res.begin(), res.end(), v) == res.end()) res.push_back(v);
      // residues of p^e cycle; 64 steps is far beyond any cycle mod M <= 64
    }
    return res;
  };
  std::vector<u64> lhs = {1 % M};
  for (u64 p : eq.lhs_primes) {
    std::vector<u64> next;
    for (u64 a : lhs)
      for (u64 b : orbit(p, eq.min_exp(p)))
        if (std::find(next.begin(), next.end(), (a * b) % M) == next.end())
          next.push_back((a * b) % M);
    lhs = next;
  }
  std::vector<u64> rhs = {eq.rhs_coeff % M};
  for (u64 p : eq.rhs_primes) {
    std::vector<u64> next;
    for (u64 a : rhs)
      for (u64 b : orbit(p, eq.min_exp(p)))
        if (std::find(next.begin(), next.end(), (a * b) % M) == next.end())
          next.push_back((a * b) % M);
    rhs = next;
  }
  u64 c = ((eq.rhs_const % i64(M)) + i64(M)) % i64(M);
  for (u64 a : lhs)
    for (u64 b : rhs)
      if ((a + M - b) % M == c % M) return true;
  return false;
}

// A simultaneous system: refuted as soon as one component has no solution in
// the box (all components use the same exponent names in the source casework,
// but bounding each separately is already enough to refute).
struct DiophSystem {
  std::string label;
  std::vector<ExpDiophEquation> components;
};

// The exponential equation families from the k=3 endgame with
// m+1 = 2^r 43^t and {P(m+1) = 43, P(m(m+2)) = 41, a = 40}.
inline std::vector<DiophSystem> k3_endgame_systems() {
  auto eq = [](std::string lbl, std::vector<u64> l, u64 c, std::vector<u64> r, i64 cst) {
    ExpDiophEquation e;
    e.label = std::move(lbl);
    e.lhs_primes = std::move(l);
    e.rhs_coeff = c;
    e.rhs_primes = std::move(r);
    e.rhs_const = cst;
    e.alpha_min = 1;  // 2-exponents here come from m+1 = 2^r 43^t, r >= 1
    return e;
  };
  std::vector<DiophSystem> v;
  v.push_back({"3^x-41^z=2", {eq("3^x-41^z=2", {3}, 1, {41}, 2)}});
  v.push_back({"41^z-3^x=2", {eq("41^z-3^x=2", {41}, 1, {3}, 2)}});
  v.push_back({"7^y-41^z=2", {eq("7^y-41^z=2", {7}, 1, {41}, 2)}});
  v.push_back({"41^z-7^y=2", {eq("41^z-7^y=2", {41}, 1, {7}, 2)}});
  v.push_back({"3^x*7^y-41^z=2", {eq("3^x*7^y-41^z=2", {3, 7}, 1, {41}, 2)}});
  v.push_back({"41^z-3^x*7^y=2", {eq("41^z-3^x*7^y=2", {41}, 1, {3, 7}, 2)}});
  v.push_back({"3^x-7^y*41^z=2", {eq("3^x-7^y*41^z=2", {3}, 1, {7, 41}, 2)}});
  v.push_back({"7^y*41^z-3^x=2", {eq("7^y*41^z-3^x=2", {7, 41}, 1, {3}, 2)}});
  v.push_back({"7^y-3^x*41^z=2", {eq("7^y-3^x*41^z=2", {7}, 1, {3, 41}, 2)}});
  v.push_back({"3^x*41^z-7^y=2", {eq("3^x*41^z-7^y=2", {3, 41}, 1, {7}, 2)}});
  v.push_back({"C2",
               {eq("3^x-41^z=2", {3}, 1, {41}, 2), eq("3^x-2^r*43^t=1", {3}, 1, {2, 43}, 1),
                eq("2^r*43^t-41^z=1", {2, 43}, 1, {41}, 1)}});
  v.push_back({"C3",
               {eq("3^x-7^y*41^z=2", {3}, 1, {7, 41}, 2),
                eq("3^x-2^r*43^t=1", {3}, 1, {2, 43}, 1),
                eq("2^r*43^t-7^y*41^z=1", {2, 43}, 1, {7, 41}, 1)}});
  v.push_back({"C4",
               {eq("3^x*41^z-7^y=2", {3, 41}, 1, {7}, 2),
                eq("3^x*41^z-2^r*43^t=1", {3, 41}, 1, {2, 43}, 1),
                eq("2^r*43^t-7^y=1", {2, 43}, 1, {7}, 1)}});
  return v;
}

}  // namespace lir

#endif  // LIR_DIOPH_HPP
