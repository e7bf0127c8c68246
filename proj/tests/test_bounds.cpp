#include <catch2/catch_amalgamated.hpp>

#include "lir/bounds.hpp"

using namespace lir;

namespace {
const PrimeTable& table() {
  static PrimeTable t = prime_sieve(1'000'000);
  return t;
}
}  // namespace

TEST_CASE("suite dispatch") {
  auto& t = table();
  REQUIRE_THROWS_AS(verify_analytic_bounds("not-a-suite", 2, 10, t), input_error);
  for (auto& name : bound_suite_names()) REQUIRE_FALSE(name.empty());
}

TEST_CASE("prime counting inequalities on a short range") {
  auto& t = table();
  auto lo = verify_analytic_bounds("dusart-pi-lower", 5393, 100'000, t);
  REQUIRE(lo.success());
  REQUIRE(lo.status() == BoundReport::Status::verified);
  auto up = verify_analytic_bounds("dusart-pi-upper", 2, 100'000, t);
  REQUIRE(up.success());
  auto th = verify_analytic_bounds("theta-bounds", 2, 100'000, t);
  REQUIRE(th.success());
  REQUIRE_THROWS_AS(verify_analytic_bounds("dusart-pi-lower", 2, 100, t), input_error);
}

TEST_CASE("nth prime lower bound") {
  auto& t = table();
  auto r = verify_analytic_bounds("rosser-pk", 1, 10'000, t);
  REQUIRE(r.success());
}

TEST_CASE("factorial valuation lower bound") {
  auto& t = table();
  auto r = verify_analytic_bounds("legendre-lower", 2, 2000, t);
  REQUIRE(r.success());
}

TEST_CASE("factorial sandwich") {
  auto& t = table();
  auto r = verify_analytic_bounds("robbins-factorial", 1, 500, t);
  REQUIRE(r.success());
  // by k = 500 the sandwich is tight to ~1e-11 relative, below the
  // verified/marginal cutoff
  REQUIRE(r.status() == BoundReport::Status::marginal);
  auto r20 = verify_analytic_bounds("robbins-factorial", 1, 20, t);
  REQUIRE(r20.status() == BoundReport::Status::verified);
}

TEST_CASE("prime-count subadditivity inside its stated window") {
  auto& t = table();
  auto r = verify_analytic_bounds("pi-subadditive", 2, 1000, t);
  REQUIRE(r.success());
  REQUIRE(r.points_checked > 1'000'000);
}

TEST_CASE("closing constant") {
  auto& t = table();
  auto r = verify_analytic_bounds("corollary3-constant", 0, 0, t);
  REQUIRE(r.success());
}

TEST_CASE("five-way prime sum against k-2") {
  auto& t = table();
  // the printed threshold 61 admits counterexamples through 71...
  auto low = verify_analytic_bounds("corollary4-k2", 61, 71, t);
  REQUIRE(low.violations.size() == 11);
  // ...and the inequality holds from 72 on
  auto good = verify_analytic_bounds("corollary4-k2", 72, 2000, t);
  REQUIRE(good.success());
}

TEST_CASE("five-way prime sum against pi(4k)") {
  auto& t = table();
  auto r = verify_analytic_bounds("corollary4-pi4k", 8000, 8200, t);
  // sixteen near-threshold counterexamples, all below 8076
  REQUIRE(r.violations.size() == 16);
  for (auto& v : r.violations) REQUIRE(v.x < 8076);
  auto good = verify_analytic_bounds("corollary4-pi4k", 8076, 12'000, t);
  REQUIRE(good.success());
}

TEST_CASE("iterated growth bound") {
  auto& t = table();
  auto r = verify_analytic_bounds("jk-iteration", 0, 0, t);
  REQUIRE(r.success());
  REQUIRE(suites::J_of_k(500) >= 4581.0);
  REQUIRE(suites::J_of_k(4581) >= 578802.0);
  REQUIRE(suites::J_of_k(578802) > 4.5e7);
}

TEST_CASE("binomial evaluation samples") {
  auto& t = table();
  auto r = verify_analytic_bounds("k32-binomial-eval", 0, 0, t);
  REQUIRE(r.success());
  BoundOptions opt;
  opt.k32_samples = {{2, 2}};  // violates m+k-1 < k^{3/2}
  REQUIRE_THROWS_AS(suites::k32_binomial_eval(opt.k32_samples, t), input_error);
}

TEST_CASE("report classifies failures with counterexamples") {
  BoundReport r{"demo", 0, 10};
  r.check(3, 1.0, 2.0, true, "forced");
  REQUIRE_FALSE(r.success());
  REQUIRE(r.status() == BoundReport::Status::failed);
  REQUIRE(r.violations[0].x == 3);

  BoundReport m{"demo2", 0, 1};
  m.check(0, 1.0 + 1e-12, 1.0, true);
  REQUIRE(m.success());
  REQUIRE(m.status() == BoundReport::Status::marginal);
}
