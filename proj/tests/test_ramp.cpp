#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rghw/ramp.hpp"

using namespace rghw;

namespace {

// profile computed directly from mutual information over every subset
LeakageProfile exhaustive_profile(const RampScheme& s) {
  int n = s.length(), ell = s.ell();
  std::vector<int> mi_min(n + 1, ell), mi_max(n + 1, 0);
  for (unsigned msk = 0; msk < (1u << n); ++msk) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((msk >> i) & 1) idx.push_back(i);
    int mi = s.mutual_information(CoordinateSet(n, idx));
    int sz = static_cast<int>(idx.size());
    mi_min[sz] = std::min(mi_min[sz], mi);
    mi_max[sz] = std::max(mi_max[sz], mi);
  }
  LeakageProfile p;
  p.ell = ell;
  for (int m = 1; m <= ell; ++m) {
    long t = 0;
    while (t + 1 <= n && mi_max[t + 1] < m) ++t;
    long r = 0;
    while (mi_min[r] < m) ++r;
    p.t.push_back(t);
    p.r.push_back(r);
    p.t_tag.push_back(ProvenanceTag::Exact);
    p.r_tag.push_back(ProvenanceTag::Exact);
  }
  return p;
}

}  // namespace

TEST_CASE("Reed-Solomon schemes follow the analytic profile") {
  const FiniteField& f = FiniteField::get_order(8);
  for (auto [k1, k2] : {std::pair{3, 1}, {4, 2}, {2, 0}}) {
    auto [scheme, profile] = mds_scheme(f, 5, k1, k2);
    int ell = k1 - k2;
    REQUIRE(scheme.ell() == ell);
    REQUIRE(profile.ell == ell);
    for (int m = 1; m <= ell; ++m) {
      CHECK(profile.t[m - 1] == k2 + m - 1);
      CHECK(profile.r[m - 1] == k2 + m);
    }
    // first privacy threshold and last reconstruction threshold
    CHECK(profile.t.front() == k2);
    CHECK(profile.r.back() == k1);
    // the oracle agrees entry by entry
    LeakageProfile oracle = scheme.profile_oracle();
    CHECK(oracle.t == profile.t);
    CHECK(oracle.r == profile.r);
  }
}

TEST_CASE("mutual information is monotone and the oracle profile is exact") {
  HermitianFamily fam = HermitianFamily::build(2);
  RampScheme s = hermitian_scheme(fam, 5, 3);
  int n = s.length();
  REQUIRE(n == 8);
  REQUIRE(s.ell() == 2);
  CHECK(s.mutual_information(CoordinateSet(n, {})) == 0);
  std::vector<int> all_idx;
  for (int i = 0; i < n; ++i) all_idx.push_back(i);
  CHECK(s.mutual_information(CoordinateSet(n, all_idx)) == s.ell());
  // adding a coordinate never loses information
  for (unsigned msk = 0; msk < (1u << n); ++msk) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((msk >> i) & 1) idx.push_back(i);
    int mi = s.mutual_information(CoordinateSet(n, idx));
    for (int j = 0; j < n; ++j) {
      if ((msk >> j) & 1) continue;
      auto bigger = idx;
      bigger.push_back(j);
      std::sort(bigger.begin(), bigger.end());
      CHECK(s.mutual_information(CoordinateSet(n, bigger)) >= mi);
    }
  }
  LeakageProfile oracle = s.profile_oracle();
  LeakageProfile direct = exhaustive_profile(s);
  CHECK(oracle.t == direct.t);
  CHECK(oracle.r == direct.r);
}

TEST_CASE("partial reconstruction recovers exactly the leaked symbols") {
  HermitianFamily fam = HermitianFamily::build(2);
  RampScheme s = hermitian_scheme(fam, 5, 3);
  int n = s.length(), ell = s.ell();
  const FiniteField& f = s.field();
  GfVector secret = {1, 3};
  GfVector word = s.share(secret, 424242);
  CHECK(s.extract_secret(word) == secret);
  for (unsigned msk = 0; msk < (1u << n); ++msk) {
    std::vector<std::pair<int, Word>> obs;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((msk >> i) & 1) {
        obs.emplace_back(i, word[static_cast<size_t>(i)]);
        idx.push_back(i);
      }
    auto rec = s.reconstruct(obs);
    int mi = s.mutual_information(CoordinateSet(n, idx));
    CHECK(rec.determined == mi);
    CHECK(rec.full() == (mi == ell));
    if (rec.full()) CHECK(rec.base_secret == secret);
    // the true secret lies in base_secret + rowspace(ambiguity)
    if (!rec.full()) {
      bool reachable = false;
      int rows = rec.ambiguity.rows();
      long combos = 1;
      for (int i = 0; i < rows; ++i) combos *= f.order();
      for (long cmb = 0; cmb < combos && !reachable; ++cmb) {
        GfVector cand = rec.base_secret;
        long rest = cmb;
        for (int i = 0; i < rows; ++i) {
          Word coef = static_cast<Word>(rest % f.order());
          rest /= f.order();
          for (int j = 0; j < ell; ++j)
            cand[static_cast<size_t>(j)] =
                f.add(cand[static_cast<size_t>(j)],
                      f.mul(coef, rec.ambiguity.at(i, j)));
        }
        reachable = (cand == secret);
      }
      CHECK(reachable);
    }
  }
  // a corrupted full observation is rejected
  std::vector<std::pair<int, Word>> obs;
  for (int i = 0; i < n; ++i) obs.emplace_back(i, word[static_cast<size_t>(i)]);
  obs[0].second = f.add(obs[0].second, 1);
  CHECK_THROWS_AS(s.reconstruct(obs), std::invalid_argument);
}

TEST_CASE("shares of one secret sweep a coset of the smaller code") {
  HermitianFamily fam = HermitianFamily::build(2);
  RampScheme s = hermitian_scheme(fam, 4, 3);
  const FiniteField& f = s.field();
  GfVector secret = {2};
  GfVector base = s.psi(secret);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GfVector w = s.share(secret, seed);
    CHECK(s.extract_secret(w) == secret);
    // w - psi(secret) is a word of C2
    GfVector diff(w.size());
    for (size_t i = 0; i < w.size(); ++i) diff[i] = f.sub(w[i], base[i]);
    CHECK(s.c2().contains_word(diff));
    CHECK(s.c1().contains_word(w));
  }
  // determinism
  CHECK(s.share(secret, 7) == s.share(secret, 7));
}

TEST_CASE("access structure slices partition the subsets by leakage") {
  HermitianFamily fam = HermitianFamily::build(2);
  RampScheme s = hermitian_scheme(fam, 5, 3);
  int n = s.length();
  LeakageProfile p = s.profile_oracle();
  for (int m = 1; m <= s.ell(); ++m) {
    long first_d = -1;
    for (int d = 0; d <= n; ++d) {
      AccessSlice slice = access_structure(s, m, d);
      for (const auto& set : slice.all) {
        CHECK(static_cast<int>(set.size()) == d);
        CHECK(s.mutual_information(CoordinateSet(n, set)) == m);
      }
      // cross-check the census against direct enumeration
      long count = 0;
      for (unsigned msk = 0; msk < (1u << n); ++msk) {
        if (__builtin_popcount(msk) != d) continue;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if ((msk >> i) & 1) idx.push_back(i);
        if (s.mutual_information(CoordinateSet(n, idx)) == m) ++count;
      }
      CHECK(static_cast<long>(slice.all.size()) == count);
      for (const auto& set : slice.minimal)
        CHECK(std::find(slice.all.begin(), slice.all.end(), set) != slice.all.end());
      for (const auto& set : slice.maximal)
        CHECK(std::find(slice.all.begin(), slice.all.end(), set) != slice.all.end());
      if (first_d < 0 && !slice.all.empty()) first_d = d;
    }
    // no coalition of size t_m or less ever sees m symbols
    CHECK(first_d > p.t[m - 1]);
  }
}

TEST_CASE("closed profile matches the oracle on its exactness region") {
  HermitianFamily fam = HermitianFamily::build(2);
  long nc2 = fam.n() + fam.conductor() - 2;
  // q = 2: exact for 2c - 2 + mu_tilde < mu < n - c
  for (auto [mu, mu_tilde] : {std::pair{5L, 2L}, {4L, 1L}, {5L, 1L}}) {
    LeakageProfile closed = hermitian_profile_closed(2, mu, mu_tilde);
    // the profile describes the scheme on the dual pair
    RampScheme s = hermitian_scheme(fam, nc2 - (mu - mu_tilde), nc2 - mu);
    LeakageProfile oracle = s.profile_oracle();
    CAPTURE(mu);
    CAPTURE(mu_tilde);
    REQUIRE(closed.ell == oracle.ell);
    CHECK(closed.t == oracle.t);
    CHECK(closed.r == oracle.r);
    for (auto tag : closed.t_tag) CHECK(tag == ProvenanceTag::Exact);
    for (auto tag : closed.r_tag) CHECK(tag == ProvenanceTag::Exact);
  }
  // outside the strict region the entries are only bounds
  LeakageProfile edge = hermitian_profile_closed(2, 3, 1);
  CHECK(edge.t_tag[0] == ProvenanceTag::Bound);
  CHECK_THROWS_AS(hermitian_profile_closed(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_profile_closed(2, 4, 4), std::invalid_argument);
}

TEST_CASE("closed profile is consistent with the subset-search profile") {
  HermitianFamily fam = HermitianFamily::build(3);
  long n = fam.n(), c = fam.conductor();
  for (long mu_tilde = 1; mu_tilde <= 4; ++mu_tilde)
    for (long mu = c - 1 + mu_tilde; mu <= n - 1; ++mu) {
      if (!fam.weierstrass().contains(mu) || !fam.weierstrass().contains(mu - mu_tilde))
        continue;
      if (fam.code_dim(mu) - fam.code_dim(mu - mu_tilde) !=
          static_cast<int>(mu_tilde))
        continue;
      LeakageProfile closed = hermitian_profile_closed(3, mu, mu_tilde);
      LeakageProfile searched = hermitian_profile_bound(fam, mu, mu - mu_tilde);
      CAPTURE(mu);
      CAPTURE(mu_tilde);
      REQUIRE(closed.ell == searched.ell);
      for (int m = 1; m <= closed.ell; ++m) {
        // the search can only sharpen the closed formula
        CHECK(searched.t[m - 1] >= closed.t[m - 1]);
        CHECK(searched.r[m - 1] <= closed.r[m - 1]);
        if (closed.t_tag[m - 1] == ProvenanceTag::Exact) {
          CHECK(searched.t[m - 1] == closed.t[m - 1]);
          CHECK(searched.r[m - 1] == closed.r[m - 1]);
        }
      }
    }
}

TEST_CASE("worst-case ramp width equals the genus") {
  for (int q = 2; q <= 5; ++q) {
    long genus = static_cast<long>(q) * (q - 1) / 2;
    for (long mu_tilde : {static_cast<long>(q), static_cast<long>(q) + 1}) {
      long widest = 0;
      for (int m = 1; m <= mu_tilde; ++m)
        widest = std::max(widest, ramp_g2(q, mu_tilde, m) - ramp_g1(q, m));
      CHECK(widest == genus);
    }
  }
}
