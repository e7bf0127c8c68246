#ifndef LIR_SMOOTH_HPP
#define LIR_SMOOTH_HPP

#include <iostream>
#include <map>
#include <unordered_set>

#include "lir/numtheory.hpp"

namespace lir {

enum class SmoothKind { plain, consecutive, gap2 };

inline const char* kind_name(SmoothKind k) {
  switch (k) {
    case SmoothKind::plain: return "plain";
    case SmoothKind::consecutive: return "consecutive";
    default: return "gap2";
  }
}

// Enumeration result; completeness holds only within the stated bound.
struct SmoothSet {
  SmoothKind kind = SmoothKind::plain;
  u64 p = 0;
  u64 bound = 0;
  std::vector<u64> members;
};

// All p-smooth integers in [1, B] by exponent-vector enumeration. Workers
// partition on the exponent of the largest prime; the partitions are
// disjoint, so a final sort is a deterministic merge.
inline std::vector<u64> smooth_numbers(u64 p, u64 B, const PrimeTable& t,
                                       unsigned workers = 1) {
  if (B < 2) throw input_error("smooth_numbers: B >= 2");
  require_prime(p, t);
  std::vector<u64> ps;
  for (u64 q : t.primes) {
    if (q > p) break;
    ps.push_back(q);
  }
  u64 top = ps.back();
  u64 max_e = 0;
  for (u64 w = 1; w <= B / top; w *= top) ++max_e;

  auto enumerate = [&](u64 e_lo, u64 e_hi) {
    std::vector<u64> out;
    // depth-first over the remaining exponent vector with product cutoff
    std::function<void(std::size_t, u64)> rec = [&](std::size_t i, u64 v) {
      if (i + 1 == ps.size()) {
        out.push_back(v);
        return;
      }
      u64 q = ps[i];
      for (u64 w = v;; w *= q) {
        rec(i + 1, w);
        if (w > B / q) break;
      }
    };
    for (u64 e = e_lo; e <= e_hi; ++e) {
      u64 lead = 1;
      for (u64 x = 0; x < e; ++x) lead *= top;
      rec(0, lead);
    }
    return out;
  };
  auto out = parallel_ranges<u64>(0, max_e, workers, enumerate);
  std::sort(out.begin(), out.end());
  return out;
}

// N with P(N(N-1)) <= p, i.e. upper members of consecutive smooth pairs.
inline SmoothSet consecutive_smooth(u64 p, u64 B, const PrimeTable& t,
                                    unsigned workers = 1) {
  SmoothSet s{SmoothKind::consecutive, p, B, {}};
  auto list = smooth_numbers(p, B, t, workers);
  for (std::size_t i = 1; i < list.size(); ++i)
    if (list[i] == list[i - 1] + 1) s.members.push_back(list[i]);
  return s;
}

// Odd N with P(N(N-2)) <= p.
inline SmoothSet gap2_smooth(u64 p, u64 B, const PrimeTable& t, unsigned workers = 1) {
  SmoothSet s{SmoothKind::gap2, p, B, {}};
  auto list = smooth_numbers(p, B, t, workers);
  std::unordered_set<u64> have(list.begin(), list.end());
  for (u64 v : list)
    if (v % 2 == 1 && v >= 3 && have.count(v - 2)) s.members.push_back(v);
  return s;
}

// Delta(m, k) = m(m+1)...(m+k-1), held as per-term factorizations.
struct DeltaWindow {
  u64 m = 1, k = 1;
  std::vector<Factorization> terms;

  u64 greatest_prime() const {
    u64 g = 1;
    for (auto& f : terms) g = std::max(g, f.greatest_prime());
    return g;
  }
  std::vector<u64> distinct_primes() const {
    std::vector<u64> ps;
    for (auto& f : terms)
      for (auto& [p, e] : f.parts) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
  }
  u32 omega() const { return static_cast<u32>(distinct_primes().size()); }
  // P_1 > P_2 > ... >= floor, the window primes at least `floor`
  std::vector<u64> primes_descending(u64 floor_prime) const {
    auto ps = distinct_primes();
    std::vector<u64> out;
    for (auto it = ps.rbegin(); it != ps.rend(); ++it)
      if (*it >= floor_prime) out.push_back(*it);
    return out;
  }
};

inline DeltaWindow delta_window(u64 m, u64 k, const PrimeTable& t) {
  if (m < 1 || k < 1) throw input_error("delta_window: m, k >= 1");
  DeltaWindow w;
  w.m = m;
  w.k = k;
  for (u64 i = 0; i < k; ++i) {
    Factorization f = factorize(m + i, t);
    if (!f.complete())
      throw capacity_error("delta_window: incomplete factorization at " + std::to_string(m + i),
                           f.cofactor);
    w.terms.push_back(std::move(f));
  }
  return w;
}

// The published smooth-window family M(k) on [60, 10000]: base windows of
// length 3 are 59-smooth; each extension step keeps m only when the adjoined
// term m+k is 53-smooth (53 is the largest prime <= 50+k+1 for k+1 <= 8,
// which is the bound a surviving candidate can meet). The literal
// definition, with the step bound also 59, is available via step_bound.
struct MSetFamily {
  u64 base_bound = 59, step_bound = 53;
  std::map<u64, std::vector<u64>> sets;  // k -> members
};

inline MSetFamily M_sets(u64 k_max, const PrimeTable& t, u64 base_bound = 59,
                         u64 step_bound = 53) {
  if (k_max < 3 || k_max > 9) throw input_error("M_sets: 3 <= k_max <= 9");
  MSetFamily fam;
  fam.base_bound = base_bound;
  fam.step_bound = step_bound;
  std::vector<u64> gpf(10012);
  for (u64 v = 60; v <= 10011; ++v) gpf[v] = greatest_prime_factor(v, t);
  std::vector<u64>& m3 = fam.sets[3];
  for (u64 m = 60; m <= 10000; ++m)
    if (gpf[m] <= base_bound && gpf[m + 1] <= base_bound && gpf[m + 2] <= base_bound)
      m3.push_back(m);
  for (u64 k = 3; k < k_max; ++k) {
    std::vector<u64>& next = fam.sets[k + 1];
    for (u64 m : fam.sets[k])
      if (gpf[m + k] <= step_bound) next.push_back(m);
  }
  return fam;
}

// N_j(k) recursion seeded from the consecutive 41-smooth pairs: members N
// whose window M_j(N, k) = (N-j)...(N-j+k-1) is 59-smooth.
struct NRecursion {
  u64 bound = 0;
  std::map<std::pair<u64, u64>, std::vector<u64>> sets;  // (j, k) -> members

  // members above 10000 (the published N'_j(k) view)
  std::vector<u64> above(u64 j, u64 k, u64 cutoff = 10000) const {
    std::vector<u64> out;
    auto it = sets.find({j, k});
    if (it == sets.end()) return out;
    for (u64 N : it->second)
      if (N > cutoff) out.push_back(N);
    return out;
  }
};

inline NRecursion N_recursion(u64 k_max, u64 B, const PrimeTable& t, u64 smooth_bound = 59) {
  if (k_max < 3) throw input_error("N_recursion: k_max >= 3");
  NRecursion R;
  R.bound = B;
  auto n1 = consecutive_smooth(41, B, t);
  auto Psmall = [&](u64 v) { return greatest_prime_factor(v, t) <= smooth_bound; };
  auto& base1 = R.sets[{1, 3}];
  auto& base2 = R.sets[{2, 3}];
  for (u64 N : n1.members) {
    if (Psmall(N + 1)) base1.push_back(N);
    if (N > 2 && Psmall(N - 2)) base2.push_back(N);
  }
  for (u64 k = 3; k < k_max; ++k) {
    for (u64 j = 1; j <= k; ++j) {
      std::vector<u64> merged;
      if (j < k) {  // stay at offset j: adjoin term N-j+k
        for (u64 N : R.sets[{j, k}])
          if (Psmall(N - j + k)) merged.push_back(N);
      }
      if (j > 1) {  // come from offset j-1: adjoin term N-j
        for (u64 N : R.sets[{j - 1, k}])
          if (N > j && Psmall(N - j)) merged.push_back(N);
      }
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      R.sets[{j, k + 1}] = std::move(merged);
    }
  }
  return R;
}

// Newline-delimited export with a header carrying kind/p/B.
inline void write_smooth_set(std::ostream& os, const SmoothSet& s) {
  os << "# kind=" << kind_name(s.kind) << " p=" << s.p << " B=" << s.bound
     << " count=" << s.members.size() << "\n";
  for (u64 v : s.members) os << v << "\n";
}

inline SmoothSet read_smooth_set(std::istream& is) {
  SmoothSet s;
  std::string header;
  std::getline(is, header);
  auto grab = [&](const std::string& key) -> std::string {
    auto pos = header.find(key + "=");
    if (pos == std::string::npos) throw input_error("smooth set header missing " + key);
    pos += key.size() + 1;
    auto end = header.find(' ', pos);
    return header.substr(pos, end - pos);
  };
  std::string kind = grab("kind");
  s.kind = kind == "plain" ? SmoothKind::plain
                           : kind == "consecutive" ? SmoothKind::consecutive : SmoothKind::gap2;
  s.p = std::stoull(grab("p"));
  s.bound = std::stoull(grab("B"));
  u64 v;
  while (is >> v) s.members.push_back(v);
  return s;
}

}  // namespace lir

#endif  // LIR_SMOOTH_HPP
