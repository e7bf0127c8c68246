#include <catch2/catch_amalgamated.hpp>

#include "lir/criterion.hpp"
#include "oracles.hpp"

using namespace lir;

namespace {
const PrimeTable& table() {
  static PrimeTable t = prime_sieve(1'000'000);
  return t;
}

// the nine published exclusion sets, transcribed verbatim
std::map<std::pair<u64, u64>, std::vector<u64>> published_A_kp() {
  std::map<std::pair<u64, u64>, std::vector<u64>> m;
  auto add_minus = [](std::vector<u64> v, std::vector<u64> minus) {
    std::vector<u64> out;
    for (u64 x : v)
      if (std::find(minus.begin(), minus.end(), x) == minus.end()) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  {
    std::vector<u64> v;
    for (u64 r = 0; r <= 16; ++r) {
      v.push_back(3 * r);
      v.push_back(3 * r + 1);
    }
    m[{1, 3}] = add_minus(v, {7, 16, 24, 25, 34, 43});
  }
  {
    std::vector<u64> v;
    for (u64 r = 0; r <= 9; ++r)
      for (u64 i = 0; i <= 3; ++i) v.push_back(5 * r + i);
    v.push_back(50);
    m[{1, 5}] = add_minus(v, {23, 48});
  }
  {
    std::vector<u64> v;
    for (u64 a = 0; a <= 50; ++a) v.push_back(a);
    m[{1, 7}] = add_minus(v, {6, 13, 20, 27, 34, 41, 47, 48});
  }
  {
    std::vector<u64> v;
    for (u64 r = 0; r <= 8; ++r)
      for (u64 i = 0; i <= 2; ++i) v.push_back(5 * r + i);
    v.push_back(45);
    v.push_back(50);
    m[{2, 5}] = add_minus(v, {21, 22});
  }
  {
    std::vector<u64> v, minus = {45, 46};
    for (u64 r = 1; r <= 7; ++r) {
      minus.push_back(7 * r - 1);
      minus.push_back(7 * r - 2);
    }
    for (u64 a = 0; a <= 50; ++a) v.push_back(a);
    m[{2, 7}] = add_minus(v, minus);
  }
  m[{3, 5}] = {0, 1, 5, 6, 10, 11, 15, 25, 26, 30, 31, 35, 36, 40, 50};
  {
    std::vector<u64> v;
    for (u64 r = 0; r <= 5; ++r)
      for (u64 i = 0; i <= 3; ++i) v.push_back(7 * r + i);
    v.push_back(42);
    v.push_back(49);
    v.push_back(50);
    m[{3, 7}] = add_minus(v, {});
  }
  {
    std::vector<u64> v;
    for (u64 r = 0; r <= 4; ++r)
      for (u64 i = 0; i <= 2; ++i) v.push_back(7 * r + i);
    v.push_back(35);
    v.push_back(36);
    v.push_back(49);
    v.push_back(50);
    m[{4, 7}] = add_minus(v, {});
  }
  m[{5, 7}] = {0, 1, 7, 8, 14, 15, 21, 22, 28, 49, 50};
  return m;
}
}  // namespace

TEST_CASE("phi profile values") {
  auto& t = table();
  auto p32 = phi_profile(3, 2, 1, PolyMode::Schur, std::nullopt, t);
  REQUIRE(p32.values[0] == Rat(1));
  auto p13 = phi_profile(13, 13, 1, PolyMode::Schur, std::nullopt, t);
  REQUIRE(p13.values[12] == Rat(1, 13));
  auto p50 = phi_profile(5, 0, 1, PolyMode::Schur, std::nullopt, t);
  for (auto& v : p50.values) REQUIRE(v < Rat(1, 4));
  REQUIRE_THROWS_AS(phi_profile(4, 2, 1, PolyMode::Schur, std::nullopt, t), input_error);
  REQUIRE_THROWS_AS(phi_profile(3, 2, 1, PolyMode::Laguerre, std::nullopt, t), input_error);
}

TEST_CASE("tail bound dominates later phi values") {
  auto& t = table();
  for (u64 p : {3ull, 5ull, 7ull}) {
    for (u64 a : {0ull, 13ull, 26ull, 50ull}) {
      auto pr = phi_profile(p, a, 1, PolyMode::Schur, std::nullopt, t);
      i64 ord = 0;
      for (u64 j = 1; j <= 400; ++j) {
        ord += ord_p(p, a + j);
        if (j > pr.J_explicit) REQUIRE(Rat(ord, i64(j)) <= pr.tail_bound);
      }
    }
  }
}

TEST_CASE("all_phi_below") {
  auto& t = table();
  auto p30 = phi_profile(3, 0, 2, PolyMode::Schur, std::nullopt, t);
  REQUIRE(all_phi_below(p30, Rat(1, 2), 10'000).ok);
  auto p32 = phi_profile(3, 2, 1, PolyMode::Schur, std::nullopt, t);
  auto r = all_phi_below(p32, Rat(1), 2);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.first_violation == 1);
  auto p747 = phi_profile(7, 47, 1, PolyMode::Schur, std::nullopt, t);
  REQUIRE_FALSE(all_phi_below(p747, Rat(1), 2).ok);
  REQUIRE_THROWS_AS(all_phi_below(p30, Rat(0), 5), input_error);
}

TEST_CASE("lemma1 verdict examples") {
  auto& t = table();
  auto v = lemma1_verdict({15, 3, 13, 13, PolyMode::Schur}, t);
  REQUIRE(v.excluded());
  REQUIRE(v.route_square);
  auto v5 = lemma1_verdict({15, 3, 13, 5, PolyMode::Schur}, t);
  REQUIRE_FALSE(v5.excluded());
  REQUIRE_FALSE(v5.avoids_delta_k);  // 5 divides a+2
  for (u64 p : {3ull, 5ull, 7ull})   // consistent with the linear factor of degree-4 alpha=5
    REQUIRE_FALSE(lemma1_verdict({4, 1, 5, p, PolyMode::Laguerre}, t).excluded());
  REQUIRE_THROWS_AS(lemma1_verdict({5, 3, 2, 7, PolyMode::Schur}, t), input_error);
}

TEST_CASE("published exclusion sets reproduced exactly") {
  auto& t = table();
  for (auto& [kp, want] : published_A_kp()) {
    auto got = compute_A_kp(kp.first, kp.second, t);
    INFO("k=" << kp.first << " p=" << kp.second);
    REQUIRE(got == want);
  }
  REQUIRE_THROWS_AS(compute_A_kp(2, 11, t), input_error);
}

TEST_CASE("exclusion-set tail holds far beyond the explicit range") {
  auto& t = table();
  for (auto& [kp, members] : published_A_kp()) {
    auto [k, p] = kp;
    for (u64 a : members) {
      i64 ord = 0;
      for (u64 j = 1; j <= 5000; ++j) {
        ord += ord_p(p, a + j);
        REQUIRE(i64(k) * ord < i64(j));
      }
    }
  }
}

TEST_CASE("admissible sets") {
  auto& t = table();
  auto s52 = admissible_set(5, 2, t);
  REQUIRE(s52.r_p == 4);
  REQUIRE(s52.intervals() ==
          std::vector<std::pair<u64, u64>>{{3, 4}, {8, 9}, {13, 14}, {18, 19}});
  REQUIRE(s52.tail_threshold() == 20);
  REQUIRE(s52.contains(21));
  REQUIRE_FALSE(s52.contains(20));

  auto s112 = admissible_set(11, 2, t);
  REQUIRE(s112.contains(9));
  REQUIRE(s112.contains(10));
  REQUIRE_FALSE(s112.contains(22));

  auto s435 = admissible_set(43, 5, t);
  REQUIRE(s435.r_p == 42);
  int hits = 0;
  for (u64 a = 31; a <= 50; ++a)
    if (s435.contains(a)) ++hits;
  REQUIRE(hits == 5);  // exactly [38, 42]

  REQUIRE_THROWS_AS(admissible_set(5, 4, t), input_error);
}

TEST_CASE("intersections") {
  auto& t = table();
  REQUIRE(intersect_B({43, 47}, 5, 31, 50, t) == std::vector<u64>{42});
  REQUIRE(intersect_B({43, 53}, 5, 31, 50, t).empty());
  REQUIRE(intersect_B({47, 53}, 5, 31, 50, t).empty());
  // a single repeated prime degenerates to its own admissible set
  REQUIRE(intersect_B({53, 53}, 5, 31, 50, t) == std::vector<u64>{48, 49, 50});
  REQUIRE(intersect_B({11}, 2, 4, 40, t) ==
          std::vector<u64>{9, 10, 20, 21, 31, 32});
  REQUIRE_THROWS_AS(intersect_B({}, 2, 0, 10, t), input_error);
  REQUIRE_THROWS_AS(intersect_B({5, 3}, 2, 0, 10, t), input_error);
}

TEST_CASE("k=4 and k=6,7,9 window-pair intersections are empty") {
  auto& t = table();
  for (auto [q1, q2] : std::vector<std::pair<u64, u64>>{{47, 43}, {53, 43}})
    REQUIRE(intersect_B({q1, q2}, 4, 11, 50, t).empty());
  for (u64 k : {6ull, 7ull, 9ull})
    REQUIRE(intersect_B({53, 43}, k, 31, 50, t).empty());
}

TEST_CASE("verdict soundness against the direct phi criterion") {
  auto& t = table();
  // every exclusion must be certified by phi_j < 1/k over the whole range
  for (u64 n = 2; n <= 120; ++n) {
    for (u64 k = 1; k <= 5 && 2 * k <= n; ++k) {
      for (u64 a = 0; a <= 50; a += 3) {
        for (u64 p : {5ull, 7ull, 11ull, 13ull, 23ull}) {
          auto v = lemma1_verdict({n, k, a, p, PolyMode::Schur}, t);
          if (!v.excluded()) continue;
          i64 ord = 0;
          for (u64 j = 1; j <= n; ++j) {
            ord += ord_p(p, a + j);
            REQUIRE(i64(k) * ord < i64(j));
          }
        }
      }
    }
  }
}

TEST_CASE("inadmissible a with a dividing prime always fires the verdict") {
  auto& t = table();
  for (u64 n = 4; n <= 60; ++n) {
    for (u64 k = 1; k <= 3 && 2 * k <= n; ++k) {
      for (u64 p : {5ull, 7ull, 11ull}) {
        if (p < k + 2) continue;
        auto A = admissible_set(p, k, t);
        for (u64 a = 1; a <= 50; ++a) {
          bool divides = false;
          for (u64 i = 1; i <= k; ++i)
            if ((a + n - k + i) % p == 0) divides = true;
          if (divides && !A.contains(a))
            REQUIRE(lemma1_verdict({n, k, a, p, PolyMode::Schur}, t).excluded());
        }
      }
    }
  }
}

TEST_CASE("laguerre-mode profile never exceeds the schur-mode profile") {
  auto& t = table();
  for (u64 p : {3ull, 5ull, 7ull, 13ull}) {
    for (u64 a : {2ull, 13ull, 24ull, 47ull}) {
      for (u64 n : {20ull, 64ull, 200ull}) {
        auto schur = phi_profile(p, a, 2, PolyMode::Schur, std::nullopt, t);
        auto lag = phi_profile(p, a, 2, PolyMode::Laguerre, n, t);
        for (std::size_t j = 0; j < schur.values.size() && j < n; ++j)
          REQUIRE(lag.values[j] <= schur.values[j]);
      }
    }
  }
}
