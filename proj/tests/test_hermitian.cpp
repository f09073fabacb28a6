#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rghw/fixtures.hpp"
#include "rghw/hermitian.hpp"

using namespace rghw;

TEST_CASE("point counts and curve membership") {
  for (int q : {2, 3, 4}) {
    HermitianFamily fam = HermitianFamily::build(q);
    CHECK(static_cast<long>(fam.points().size()) == fam.n());
    const FiniteField& f = fam.field();
    for (auto [x, y] : fam.points())
      CHECK(f.norm(x) == f.trace(y));
  }
  CHECK_THROWS_AS(HermitianFamily::build(6), std::invalid_argument);
}

TEST_CASE("self-duality of the code family") {
  for (int q : {2, 3}) {
    HermitianFamily fam = HermitianFamily::build(q);
    long n = fam.n(), c = fam.conductor();
    for (long mu = 0; mu <= n + c - 2; ++mu) {
      CAPTURE(q);
      CAPTURE(mu);
      CHECK(fam.code(mu).dual() == fam.code(n + c - 2 - mu));
      CHECK(fam.code_dim(mu) + fam.code_dim(n + c - 2 - mu) == n);
    }
  }
  // sampled for q = 4
  HermitianFamily fam = HermitianFamily::build(4);
  for (long mu : {0L, 5L, 12L, 30L, 50L, 67L, 74L})
    CHECK(fam.code(mu).dual() == fam.code(74 - mu));
}

TEST_CASE("closed-form bound values from the published examples") {
  HermitianFamily fam = HermitianFamily::build(4);
  for (int m = 1; m <= 3; ++m) {
    auto r12 = fam.rghw(12, 8, m);
    REQUIRE(r12.closed.has_value());
    CHECK(*r12.closed == fixtures::kEx1Closed[m - 1]);
    CHECK(r12.best == fixtures::kEx1Shifted[m - 1]);  // exact-set == shifted here
    CHECK(!r12.equality);

    auto r10 = fam.rghw(10, 5, m);
    CHECK(*r10.closed == fixtures::kEx2Closed[m - 1]);
    CHECK(r10.best == fixtures::kEx2Closed[m - 1]);
  }
  // codimension above q + 1: no closed form, best still available
  auto wide = fam.rghw(20, 12, 2);
  CHECK(!wide.closed.has_value());
  CHECK(wide.best >= 1);
}

TEST_CASE("closed form is exact on its equality region at q = 2") {
  HermitianFamily fam = HermitianFamily::build(2);
  long n = fam.n(), c = fam.conductor();
  int checked = 0;
  for (long mu2 = c - 1; mu2 < n - c; ++mu2)
    for (long mu1 = mu2 + 1; mu1 < n - c && mu1 - mu2 <= fam.q() + 1; ++mu1) {
      LinearCode c1 = fam.code(mu1), c2 = fam.code(mu2);
      int ell = c1.dim() - c2.dim();
      CHECK(ell == mu1 - mu2);  // dimension claim of the equality region
      for (int m = 1; m <= ell; ++m) {
        auto r = fam.rghw(mu1, mu2, m);
        REQUIRE(r.equality);
        REQUIRE(r.closed.has_value());
        CHECK(rghw_oracle(c1, c2, m) == *r.closed);
        CHECK(r.best == *r.closed);
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("witness systems have exactly the predicted common zeros") {
  for (int q : {2, 3, 4}) {
    HermitianFamily fam = HermitianFamily::build(q);
    long n = fam.n(), c = fam.conductor();
    int checked = 0;
    for (long mu1 = c; mu1 < n - c; ++mu1) {
      if (!fam.weierstrass().contains(mu1)) continue;
      for (int m = 1; m <= q + 1; ++m) {
        if (!(c - 1 < mu1 - (m - 1))) continue;
        long j = mu1 % q;
        if (m > j + q) continue;
        CAPTURE(q);
        CAPTURE(mu1);
        CAPTURE(m);
        auto rep = fam.witness_functions(mu1, m);
        CHECK(rep.common_zero_count == rep.predicted);
        CHECK(static_cast<int>(rep.functions.size()) == m);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("witness functions have descending pole orders") {
  HermitianFamily fam = HermitianFamily::build(3);
  long mu1 = 14;  // = 3*3 + 5, inside the witness region for q = 3
  auto rep = fam.witness_functions(mu1, 3);
  for (size_t t = 0; t < rep.functions.size(); ++t) {
    const auto& w = rep.functions[t];
    long pole = static_cast<long>(w.x_roots.size()) * 3 +
                static_cast<long>(w.y_roots.size()) * 4;
    CHECK(pole == mu1 - static_cast<long>(t));
  }
}

TEST_CASE("generalized-weight master bound") {
  HermitianFamily fam = HermitianFamily::build(4);
  auto rep = fam.ghw_master(28, 3);
  CHECK(rep.abundance == 0);
  CHECK(rep.bound == 41);  // 64 - 28 + rho_3 = 36 + 5
  CHECK(rep.bound_shifted == 41);
  CHECK(rep.equality);
  // abundance is zero throughout mu <= q^3 - 1
  for (long mu : {0L, 12L, 40L, 63L})
    CHECK(fam.ghw_master(mu, 1).abundance == 0);
  // beyond mu = n - 1 the evaluation map acquires a kernel
  CHECK(fam.ghw_master(64, 1).abundance == 1);
  CHECK(fam.ghw_master(75, 1).abundance == 6);
}

TEST_CASE("relative weights exceed absolute ones by the published gaps") {
  for (const auto& row : fixtures::kTable1) {
    for (size_t i = 0; i < row.values.size(); ++i)
      CHECK(diff_value(row.q, static_cast<int>(i) + 3) == row.values[i]);
    for (long v : row.values) CHECK(v > 0);
  }
  // realized on actual codes: q = 4, mu in the overlap region
  HermitianFamily fam = HermitianFamily::build(4);
  for (long mu : {28L, 30L, 33L}) {
    for (int m = 3; m <= 5; ++m) {
      long mu_tilde = 5;
      auto rel = fam.rghw(mu, mu - mu_tilde, m);
      auto abs = fam.ghw_master(mu, m);
      REQUIRE(rel.closed.has_value());
      CHECK(*rel.closed - abs.bound == diff_value(4, m));
    }
  }
}
