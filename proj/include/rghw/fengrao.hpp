#ifndef RGHW_FENGRAO_HPP
#define RGHW_FENGRAO_HPP

#include <cstdint>
#include <vector>

#include "rghw/codes.hpp"
#include "rghw/linalg.hpp"

namespace rghw {

/// Small dynamic bitset for index-set unions.
class IndexSet {
 public:
  explicit IndexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void unite(const IndexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  int count() const;
  int universe() const { return n_; }
  std::vector<int> to_vector() const;

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

/// A fixed ordered basis b_1..b_n of F_q^n with precomputed change of basis
/// for evaluating the leading-index function rho_bar.
class OrderedBasis {
 public:
  static OrderedBasis from_rows(const GfMatrix& rows);  // must have rank n
  static OrderedBasis standard(const FiniteField& f, int n);

  const FiniteField& field() const { return basis_.field(); }
  int n() const { return basis_.rows(); }
  const GfMatrix& rows() const { return basis_; }
  GfVector vector(int i) const;  // b_i, 1-based

  /// Largest index (1-based) of a nonzero coordinate of v in this basis;
  /// 0 for the zero vector.
  int rho_bar(const GfVector& v) const;

  /// rho_bar(C \ {0}) computed once from the generator in basis coordinates
  /// (trailing pivot set), sorted ascending. Size equals dim C.
  std::vector<int> rho_set(const LinearCode& c) const;

 private:
  explicit OrderedBasis(GfMatrix basis, GfMatrix inv)
      : basis_(std::move(basis)), inv_(std::move(inv)) {}
  GfMatrix basis_, inv_;
};

/// One-way well-behaving table over an ordered basis: products
/// rho_bar(b_i * b_j), OWB flags, and the derived Lambda_i and V_l sets.
class OwbTable {
 public:
  explicit OwbTable(const OrderedBasis& basis);

  const OrderedBasis& basis() const { return *basis_; }
  int n() const { return n_; }
  int rho_product(int i, int j) const { return rho_[(i - 1) * n_ + (j - 1)]; }  // 1-based
  bool owb(int i, int j) const { return owb_[(i - 1) * n_ + (j - 1)]; }
  const IndexSet& lambda(int i) const { return lambda_[i - 1]; }
  const IndexSet& v_set(int l) const { return v_[l - 1]; }

 private:
  const OrderedBasis* basis_;
  int n_;
  std::vector<int> rho_;
  std::vector<char> owb_;
  std::vector<IndexSet> lambda_, v_;
};

/// |union of Lambda_i over i in rho_set|: lower bound on the support size
/// of any subspace D with rho_bar(D \ {0}) = rho_set.
int support_lower_bound(const OwbTable& t, const std::vector<int>& rho_set);

struct BoundConfig {
  int max_m = 6;
  int max_candidates = 40;
};

/// Feng-Rao lower bound on M_m(C1, C2) (primary version).
int rghw_bound_primary(const OwbTable& t, const LinearCode& c1, const LinearCode& c2,
                       int m, const BoundConfig& cfg = {});

/// Feng-Rao lower bound on M_m(C2^perp, C1^perp) (dual version).
int rghw_bound_dual(const OwbTable& t, const LinearCode& c1, const LinearCode& c2,
                    int m, const BoundConfig& cfg = {});

/// Minimum of |union of sets[i]| over ascending m-subsets of the candidate
/// list, with branch-and-bound pruning on the running union.
int min_union_over_subsets(const std::vector<const IndexSet*>& sets, int m);

}  // namespace rghw

#endif
