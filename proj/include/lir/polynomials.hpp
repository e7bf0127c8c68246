#ifndef LIR_POLYNOMIALS_HPP
#define LIR_POLYNOMIALS_HPP

#include <map>
#include <set>

#include "lir/numtheory.hpp"

namespace lir {

// Polynomial over exact rationals, coefficient of x^i at index i.
// Always trimmed so the last coefficient is nonzero (zero poly is empty).
struct RationalPoly {
  std::vector<BigRat> c;

  static RationalPoly zero() { return {}; }
  static RationalPoly constant(const BigRat& v) {
    RationalPoly p;
    if (v != 0) p.c.push_back(v);
    return p;
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  BigRat coeff(std::size_t i) const { return i < c.size() ? c[i] : BigRat(0); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  BigRat eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    RationalPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend RationalPoly operator*(const BigRat& s, const RationalPoly& a) {
    RationalPoly r = a;
    for (auto& v : r.c) v *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c == b.c; }
};

// x - r
inline RationalPoly linear_root(const BigInt& r) {
  RationalPoly p;
  p.c = {BigRat(-r), BigRat(1)};
  return p;
}

// L_n^(alpha), coefficient of x^j equal to
// (-1)^j (n+alpha)(n-1+alpha)...(j+1+alpha) / ((n-j)! j!), built exactly.
inline RationalPoly laguerre(u64 n, i64 alpha) {
  if (n < 1) throw input_error("laguerre: n >= 1");
  RationalPoly p;
  p.c.assign(n + 1, BigRat(0));
  for (u64 j = 0; j <= n; ++j) {
    BigInt num = 1;
    for (u64 i = j + 1; i <= n; ++i) num *= BigInt(alpha + i64(i));
    BigRat v(num, big_factorial(n - j) * big_factorial(j));
    p.c[j] = (j % 2 == 0) ? v : -v;
  }
  p.trim();
  return p;
}

// f_{n,a}(x) = sum_j a_j x^j / (j+a)!  with given integer coefficients.
inline RationalPoly schur_f(u64 n, u64 a, const std::vector<i64>& coeffs) {
  if (coeffs.size() != n + 1) throw input_error("schur_f: need coefficients a_0..a_n");
  if (coeffs[n] == 0) throw input_error("schur_f: a_n must be nonzero");
  RationalPoly p;
  p.c.assign(n + 1, BigRat(0));
  for (u64 j = 0; j <= n; ++j) p.c[j] = BigRat(BigInt(coeffs[j]), big_factorial(j + a));
  p.trim();
  return p;
}

namespace detail {

inline std::vector<BigInt> divisors_of(u64 n, const PrimeTable& t) {
  Factorization f = factorize(n, t);
  if (!f.complete()) throw capacity_error("divisors_of: incomplete factorization", f.cofactor);
  std::vector<BigInt> divs = {1};
  for (auto& [p, e] : f.parts) {
    std::size_t base = divs.size();
    BigInt pw = 1;
    for (u32 i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pw);
    }
  }
  return divs;
}

}  // namespace detail

// All integer roots, found by clearing denominators and testing divisors of
// the constant term (plus 0 when x divides the polynomial).
inline std::set<BigInt> integer_roots(const RationalPoly& poly, const PrimeTable& t) {
  if (poly.is_zero()) throw input_error("integer_roots: zero polynomial");
  BigInt lcm = 1;
  for (auto& v : poly.c) {
    BigInt d = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> g(poly.c.size());
  for (std::size_t i = 0; i < poly.c.size(); ++i)
    g[i] = boost::multiprecision::numerator(poly.c[i] * BigRat(lcm));

  std::set<BigInt> roots;
  std::size_t low = 0;
  while (low < g.size() && g[low] == 0) ++low;
  if (low > 0) roots.insert(0);

  BigInt c0 = boost::multiprecision::abs(g[low]);
  if (c0 > BigInt(std::numeric_limits<u64>::max()))
    throw capacity_error("integer_roots: constant term too large to factor",
                         std::numeric_limits<u64>::max());
  auto eval_int = [&](const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = g.size(); i-- > low;) acc = acc * x + g[i];
    return acc;
  };
  for (const BigInt& d : detail::divisors_of(c0.convert_to<u64>(), t)) {
    if (eval_int(d) == 0) roots.insert(d);
    if (eval_int(-d) == 0) roots.insert(-d);
  }
  return roots;
}

// One explicit factorization claim: scalar * prod(factors) vs laguerre(n, alpha).
struct FactorizationClaim {
  u64 n;
  i64 alpha;
  BigRat scalar;
  std::vector<RationalPoly> factors;

  RationalPoly expand() const {
    RationalPoly p = RationalPoly::constant(1);
    for (auto& f : factors) p = p * f;
    return scalar * p;
  }
};

inline std::vector<FactorizationClaim> exceptional_claims() {
  auto half = BigRat(1, 2);
  auto cubic = [](i64 c2, i64 c1, i64 c0) {
    RationalPoly p;
    p.c = {BigRat(c0), BigRat(c1), BigRat(c2), BigRat(1)};
    return p;
  };
  std::vector<FactorizationClaim> v;
  v.push_back({2, 2, half, {linear_root(2), linear_root(6)}});
  v.push_back({2, 7, half, {linear_root(6), linear_root(12)}});
  v.push_back({2, 14, half, {linear_root(12), linear_root(20)}});
  v.push_back({2, 23, half, {linear_root(20), linear_root(30)}});
  v.push_back({2, 34, half, {linear_root(30), linear_root(42)}});
  v.push_back({2, 47, half, {linear_root(42), linear_root(56)}});
  v.push_back({4, 5, BigRat(1, 24), {linear_root(6), cubic(-30, 252, -504)}});
  v.push_back({4, 23, BigRat(1, 24), {linear_root(30), cubic(-78, 1872, -14040)}});
  return v;
}

struct ExceptionReport {
  struct Item {
    u64 n;
    i64 alpha;
    bool match;
  };
  std::vector<Item> items;
  bool all_match() const {
    for (auto& it : items)
      if (!it.match) return false;
    return true;
  }
};

// Expands each claimed exceptional factorization and compares it
// coefficientwise with the directly constructed polynomial.
inline ExceptionReport verify_exceptions() {
  ExceptionReport rep;
  for (const auto& claim : exceptional_claims()) {
    bool ok = claim.expand() == laguerre(claim.n, claim.alpha);
    rep.items.push_back({claim.n, claim.alpha, ok});
  }
  return rep;
}

}  // namespace lir

#endif  // LIR_POLYNOMIALS_HPP
