#ifndef RGHW_RAMP_HPP
#define RGHW_RAMP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/hermitian.hpp"

namespace rghw {

enum class ProvenanceTag { Exact, Bound };

/// Privacy thresholds t_1..t_ell (largest coalition size that can never
/// learn m symbols of the secret) and reconstruction thresholds r_1..r_ell
/// (smallest size that always suffices), with per-entry provenance.
struct LeakageProfile {
  int ell = 0;
  std::vector<long> t, r;
  std::vector<ProvenanceTag> t_tag, r_tag;
};

/// Coset secret sharing on a nested pair C2 strictly inside C1: a secret
/// s in F^ell is hidden as psi(s) + c2 with c2 drawn from C2. psi maps
/// F^ell onto a fixed complement L with C1 = L (+) C2, obtained by pivot
/// completion of C2's echelon form inside C1.
class RampScheme {
 public:
  static RampScheme make(LinearCode c1, LinearCode c2);

  const LinearCode& c1() const { return c1_; }
  const LinearCode& c2() const { return c2_; }
  const FiniteField& field() const { return c1_.field(); }
  int length() const { return c1_.length(); }
  int ell() const { return l_.rows(); }
  const GfMatrix& complement() const { return l_; }

  GfVector psi(const GfVector& secret) const;
  /// Coordinates of a C1 word's coset: the unique s with word in psi(s)+C2.
  GfVector extract_secret(const GfVector& word) const;

  /// psi(secret) + c2 with c2 chosen by the seeded generator;
  /// a pure function of (secret, seed).
  GfVector share(const GfVector& secret, std::uint64_t seed) const;

  struct Reconstruction {
    int determined = 0;     // symbols of the secret fixed by the observations
    GfVector base_secret;   // one consistent secret
    GfMatrix ambiguity;     // rows span the offsets still possible
    bool full() const { return ambiguity.rows() == 0; }
  };
  /// Solve for x in C1 agreeing with the observed coordinates; throws
  /// invalid_argument when no share is consistent with them.
  Reconstruction reconstruct(const std::vector<std::pair<int, Word>>& observed) const;

  /// Symbols of the secret leaked by the coordinates in i, computed by the
  /// two equivalent quotient formulas (asserted equal).
  int mutual_information(const CoordinateSet& i) const;

  /// Exact profile from the support-weight oracle on both code pairs.
  LeakageProfile profile_oracle(const OracleConfig& cfg = {}) const;

 private:
  RampScheme(LinearCode c1, LinearCode c2, GfMatrix l, GfMatrix bmat)
      : c1_(std::move(c1)), c2_(std::move(c2)), l_(std::move(l)),
        bmat_(std::move(bmat)) {}
  LinearCode c1_, c2_;
  GfMatrix l_;     // ell x n complement basis
  GfMatrix bmat_;  // vstack(L, G2): full basis of C1, secret coords first
};

/// Families of coordinate sets of size d leaking exactly m symbols, with
/// the minimal and maximal ones by inclusion inside the full access family
/// A_m. Requires n <= 16.
struct AccessSlice {
  std::vector<std::vector<int>> all, minimal, maximal;
};
AccessSlice access_structure(const RampScheme& s, int m, int d);

/// Helper terms of the closed Hermitian profile:
/// g1 = sum_{s=0}^{m-2}(q-s), g2 = c + mu_tilde - 1 - sum_{s=0}^{mu_tilde-m-1}(q-s).
long ramp_g1(int q, int m);
long ramp_g2(int q, long mu_tilde, int m);

/// Closed-formula profile of the scheme on C(mu) over C(mu - mu_tilde):
/// t_m >= n - mu + g1(m) - 1, r_m <= n - mu + g2(m). Requires
/// mu_tilde <= q+1 and c - 1 + mu_tilde <= mu <= n - 1. Entries are exact
/// (tagged so) when 2c - 2 + mu_tilde < mu < n - c.
LeakageProfile hermitian_profile_closed(int q, long mu, long mu_tilde);

/// Bound-mode profile for the Hermitian pair C(mu1) over C(mu2)
/// (mu2 = -1 means C2 = {0}): t from the strongest primary tier, r through
/// the dual pair C((n+c-2-mu2)Q) over C((n+c-2-mu1)Q) via self-duality,
/// with mu values normalized into H*.
LeakageProfile hermitian_profile_bound(const HermitianFamily& fam, long mu1, long mu2);

RampScheme hermitian_scheme(const HermitianFamily& fam, long mu1, long mu2);

/// Nested Reed-Solomon pair [n, k1] over [n, k2] with the analytic profile
/// t_m = k2 + m - 1, r_m = k2 + m. Requires n <= q.
struct MdsScheme {
  RampScheme scheme;
  LeakageProfile profile;
};
MdsScheme mds_scheme(const FiniteField& f, int n, int k1, int k2);

}  // namespace rghw

#endif
