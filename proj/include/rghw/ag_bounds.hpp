#ifndef RGHW_AG_BOUNDS_HPP
#define RGHW_AG_BOUNDS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/fengrao.hpp"
#include "rghw/semigroup.hpp"

namespace rghw {

enum class BoundTier { ExactSet, Shifted, Closed };

/// A nested family of evaluation codes C(mu), mu a pole order at the
/// distinguished place, with its Weierstrass semigroup and the set H* of
/// pole orders at which the code strictly grows. H* is always recovered by
/// the incremental rank oracle over the supplied evaluation vectors.
class OnePointCodeFamily {
 public:
  /// eval(lambda) returns the evaluation vector of a function with pole
  /// order lambda; queried for lambda in H ascending until rank n.
  /// max_lambda bounds the search; running out before rank n is an error.
  static OnePointCodeFamily build(const FiniteField& f, int n,
                                  NumericalSemigroup weierstrass,
                                  const std::function<GfVector(long)>& eval,
                                  long max_lambda);

  const FiniteField& field() const { return eval_.field(); }
  int length() const { return eval_.cols(); }
  const NumericalSemigroup& weierstrass() const { return h_; }
  const std::vector<long>& h_star() const { return hstar_; }
  const OrderedBasis& basis() const { return basis_; }

  /// Largest gamma in H* with gamma <= mu, or nullopt when mu < gamma_1.
  std::optional<long> normalize_mu(long mu) const;

  /// C(mu): row space of the evaluation vectors with pole order <= mu.
  LinearCode code(long mu) const;
  int code_dim(long mu) const;

  /// Evaluation vector of the basis function with pole order gamma in H*.
  GfVector evaluation(long gamma) const;

 private:
  OnePointCodeFamily(NumericalSemigroup h, std::vector<long> hstar, GfMatrix eval,
                     OrderedBasis basis)
      : h_(std::move(h)), hstar_(std::move(hstar)), eval_(std::move(eval)),
        basis_(std::move(basis)) {}
  NumericalSemigroup h_;
  std::vector<long> hstar_;
  GfMatrix eval_;  // row i = evaluation at pole order hstar_[i]
  OrderedBasis basis_;
};

/// The two per-subset support bounds, computed from H* and H alone.
/// tight  = |H* cap union(gamma_s + H)|
/// relaxed = n - gamma_m + |{x in union_{s<m}(gamma_s + H) : x not in gamma_m + H}|
struct SupportBounds {
  long tight;
  long relaxed;
};
SupportBounds support_bound_ag(const std::vector<long>& hstar,
                               const NumericalSemigroup& h,
                               const std::vector<long>& gamma_set);

/// Lower bound on M_m(C(mu1), C(mu2)) at the requested tier, from H* and H
/// alone. mu2 = -1 means C2 = {0}. Minimization runs over ascending
/// m-subsets of H* cap (mu2, mu1].
long rghw_bound_onepoint(const std::vector<long>& hstar, const NumericalSemigroup& h,
                         long mu1, long mu2, int m, BoundTier tier);

/// Lower bound on M_m(C(mu2)^perp, C(mu1)^perp):
/// min |H cap union(gamma_s - H)| over the same subsets.
long rghw_bound_onepoint_dual(const std::vector<long>& hstar, const NumericalSemigroup& h,
                              long mu1, long mu2, int m);

}  // namespace rghw

#endif
