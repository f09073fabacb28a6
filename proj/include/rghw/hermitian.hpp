#ifndef RGHW_HERMITIAN_HPP
#define RGHW_HERMITIAN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rghw/ag_bounds.hpp"

namespace rghw {

/// Result of the specialized RGHW bound for a nested pair of Hermitian
/// codes C(mu1) over C(mu2). `closed` is the closed-form bound
/// n - mu1 + sum_{s=0}^{m-2}(q-s), available when mu1 - mu2 <= q+1;
/// `best` is the strongest subset-search tier. When `equality` holds
/// (c-1 <= mu2 and mu1 < n-c) the closed form is the exact RGHW.
struct HermitianRghw {
  std::optional<long> closed;
  long best = 0;
  bool equality = false;
};

/// A product of linear factors prod(X - r) * prod(Y - r), stored by its
/// root lists (field encodings).
struct WitnessFunction {
  std::vector<Word> x_roots;
  std::vector<Word> y_roots;
};

struct WitnessReport {
  std::vector<WitnessFunction> functions;  // m functions, descending pole order
  long common_zero_count = 0;              // points where all m vanish
  long predicted = 0;                      // mu1 - sum_{s=0}^{m-2}(q-s)
};

/// Generalized-weight estimate for a single Hermitian code C(mu).
struct GhwReport {
  long mu = 0;
  int m = 0;
  long abundance = 0;      // dim of the evaluation kernel on L(mu Q)
  long bound = 0;          // n - mu + rho_m + abundance
  long bound_shifted = 0;  // n - mu + rho_{m + abundance}
  bool equality = false;
};

/// The Hermitian curve x^{q+1} = y^q + y over GF(q^2): the q^3 affine
/// points, the nested evaluation codes C(mu), and the specialized bounds.
class HermitianFamily {
 public:
  /// q in {2,3,4,5,7,8,9,16}. Points are enumerated in lexicographic
  /// (x encoding, y encoding) order.
  static HermitianFamily build(int q);

  int q() const { return q_; }
  long n() const { return static_cast<long>(q_) * q_ * q_; }
  long genus() const { return static_cast<long>(q_) * (q_ - 1) / 2; }
  long conductor() const { return static_cast<long>(q_) * (q_ - 1); }
  const FiniteField& field() const { return fam_.field(); }
  const std::vector<std::pair<Word, Word>>& points() const { return pts_; }
  const OnePointCodeFamily& family() const { return fam_; }
  const NumericalSemigroup& weierstrass() const { return fam_.weierstrass(); }
  const std::vector<long>& h_star() const { return fam_.h_star(); }

  LinearCode code(long mu) const { return fam_.code(mu); }
  int code_dim(long mu) const { return fam_.code_dim(mu); }
  std::optional<long> normalize_mu(long mu) const { return fam_.normalize_mu(mu); }

  /// mu2 = -1 means C2 = {0}.
  HermitianRghw rghw(long mu1, long mu2, int m) const;

  /// The explicit function systems showing the closed-form bound is tight:
  /// f_t has pole order mu1 - t and the system has exactly
  /// mu1 - sum_{s=0}^{m-2}(q-s) common zeros among the q^3 points.
  /// Requires m <= q+1, mu1 < n - c, c - 1 < mu1 - (m-1).
  WitnessReport witness_functions(long mu1, int m) const;

  /// Evaluate a witness function at every point.
  GfVector evaluate(const WitnessFunction& w) const;

  /// Generalized Hamming weight estimate d_m(C(mu)) with abundance
  /// computed from the rank of the evaluation map.
  GhwReport ghw_master(long mu, int m) const;

 private:
  HermitianFamily(int q, std::vector<std::pair<Word, Word>> pts, OnePointCodeFamily fam)
      : q_(q), pts_(std::move(pts)), fam_(std::move(fam)) {}
  int q_;
  std::vector<std::pair<Word, Word>> pts_;
  OnePointCodeFamily fam_;
};

/// sum_{s=0}^{m-2}(q-s): the closed-form correction term.
long hermitian_correction(int q, int m);

/// Gap between the relative and absolute m-th weights on the region where
/// both are known exactly: correction(q, m) - rho_m. Positive for
/// 3 <= m <= q+1.
long diff_value(int q, int m);
std::vector<long> diff_table(int q);  // m = 3 .. q+1

}  // namespace rghw

#endif
