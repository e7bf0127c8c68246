#include <catch2/catch_amalgamated.hpp>

#include "lir/laguerre_k1.hpp"
#include "lir/polynomials.hpp"

using namespace lir;

namespace {
const PrimeTable& table() {
  static PrimeTable t = prime_sieve(1'000'000);
  return t;
}
}  // namespace

TEST_CASE("allowed prime sets") {
  auto& t = table();
  REQUIRE(k1::build_P_a(12, t) == std::set<u64>{2, 13});
  REQUIRE(k1::build_P_a(16, t) == std::set<u64>{2, 3, 17});
  REQUIRE(k1::build_P_a(14, t) == std::set<u64>{2, 3, 5});
  REQUIRE(k1::build_P_a(23, t) == std::set<u64>{2, 3, 5});
  REQUIRE(k1::build_P_a(47, t) == std::set<u64>{2, 3, 7});
  REQUIRE(k1::build_P_a(48, t) == std::set<u64>{2, 5, 7});
  REQUIRE(k1::build_P_a(34, t) == std::set<u64>{2, 3, 5, 7});
}

TEST_CASE("threshold indices re-derive the published exception table") {
  const std::set<std::pair<u64, u64>> T1 = {{3, 16}, {3, 17}, {3, 34}, {3, 35},
                                            {3, 43}, {3, 44}, {5, 23}, {5, 24},
                                            {5, 48}, {5, 49}, {7, 47}, {7, 48}};
  auto& t = table();
  for (u64 a = 11; a <= 49; ++a) {
    for (u64 p : k1::build_P_a(a, t)) {
      if (p == 2) continue;
      u64 jm = k1::phi_threshold_jmax(p, a);
      INFO("p=" << p << " a=" << a << " jmax=" << jm);
      if (T1.count({p, a}))
        REQUIRE(jm == 2);
      else if (p == 3 && 23 <= a && a <= 26)
        REQUIRE((jm > 2 && jm <= 4));
      else
        REQUIRE(jm <= 1);
    }
  }
  // one step past the published range the trichotomy already breaks
  REQUIRE(k1::phi_threshold_jmax(3, 50) == 4);
}

TEST_CASE("screen reproduces the eight small survivors") {
  auto& t = table();
  auto sv = k1::screen(11, 40, 511, t);
  std::vector<std::pair<u64, u64>> got;
  for (auto& s : sv) got.push_back({s.n, s.a});
  std::sort(got.begin(), got.end());
  REQUIRE(got == std::vector<std::pair<u64, u64>>{{96, 24},
                                                  {128, 16},
                                                  {128, 34},
                                                  {192, 24},
                                                  {256, 14},
                                                  {256, 16},
                                                  {256, 32},
                                                  {256, 33}});
  REQUIRE_THROWS_AS(k1::screen(5, 40, 511, t), input_error);
}

TEST_CASE("pure powers of two keep surviving past 512") {
  auto& t = table();
  auto sv = k1::screen(11, 40, 1024, t);
  bool has_1024_32 = false;
  for (auto& s : sv) has_1024_32 |= (s.n == 1024 && s.a == 32);
  REQUIRE(has_1024_32);
}

TEST_CASE("odd-part-3 shapes stay below the equation-stage cutoff") {
  auto& t = table();
  // 3^2 - 2^3 = 1 maps to degree 3*2^6 = 192, already held by the screen
  ExpDiophEquation eq;
  eq.lhs_primes = {3};
  eq.rhs_primes = {2};
  eq.rhs_const = 1;
  auto sols = exp_dioph_search(eq, 64);
  REQUIRE(sols.size() == 1);
  REQUIRE(sols[0].lhs_exps == std::vector<u32>{2});
  REQUIRE(sols[0].rhs_exps == std::vector<u32>{3});
  ExpDiophEquation eq2;
  eq2.lhs_primes = {3, 5};
  eq2.rhs_primes = {2};
  eq2.rhs_const = 1;
  REQUIRE(exp_dioph_search(eq2, 64).empty());
  // the a=24 family therefore contributes only its printed special
  REQUIRE(k1::systems_for_a(24, t).size() == 3 + 3);  // subsets of {3,5} + specials
}

TEST_CASE("equation stage finds exactly the four large candidates") {
  auto& t = table();
  std::vector<u64> avals;
  for (u64 a = 11; a <= 40; ++a) avals.push_back(a);
  avals.push_back(48);
  auto cands = k1::equation_stage(avals, 64, t);
  std::vector<std::pair<u64, u64>> got;
  for (auto& c : cands) got.push_back({c.n, c.a});
  std::sort(got.begin(), got.end());
  REQUIRE(got == std::vector<std::pair<u64, u64>>{
                     {512, 48}, {1024, 32}, {1920, 24}, {4096, 20}});
}

TEST_CASE("final two-adic certificate") {
  REQUIRE(k1::final_check(4096, 20));
  REQUIRE(k1::final_check(1920, 24));
  REQUIRE(k1::final_check(1024, 32));
  REQUIRE(k1::final_check(512, 48));
  REQUIRE_FALSE(k1::final_check(2, 2));
  REQUIRE_FALSE(k1::final_check(40, 24));
  REQUIRE_THROWS_AS(k1::final_check(0, 2), input_error);
}

TEST_CASE("certificate failure is necessary for a linear factor") {
  // the certificate is one-sided: every integer-root case must fail it,
  // while a failed certificate alone proves nothing
  auto& t = table();
  for (u64 n : {2ull, 4ull}) {
    for (u64 a = 0; a <= 50; ++a) {
      bool has_root = !integer_roots(laguerre(n, i64(a)), t).empty();
      if (has_root) REQUIRE_FALSE(k1::final_check(n, a));
    }
  }
  REQUIRE_FALSE(k1::final_check(2, 3));  // fails the certificate...
  REQUIRE(integer_roots(laguerre(2, 3), t).empty());  // ...without a root
}
