#ifndef RGHW_SEMIGROUP_HPP
#define RGHW_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace rghw {

/// Finitely generated numerical semigroup <g_1, ..., g_r> with gcd 1.
/// Membership below the conductor is materialized; everything at or above
/// the conductor is a member.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long> generators);

  const std::vector<long>& generators() const { return gens_; }
  long conductor() const { return conductor_; }
  long genus() const { return genus_; }
  const std::vector<long>& gaps() const { return gaps_; }

  bool contains(long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<size_t>(x)];
  }

  /// m-th element in increasing order, 1-based: element(1) = 0.
  long element(int m) const;

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }

 private:
  std::vector<long> gens_;
  long conductor_ = 0, genus_ = 0;
  std::vector<char> member_;  // [0, conductor)
  std::vector<long> gaps_;
};

/// |{a in union(shift_s + G) : a not in G}| for strictly negative, distinct
/// shifts. The count is finite: escaped elements are negative or gaps.
long shifted_difference_count(const NumericalSemigroup& g, const std::vector<long>& shifts);

struct ZConfig {
  std::int64_t max_combinations = 1'000'000;
  bool parallel = true;
};

/// Z(G, mu, m): 0 for m = 1, else the minimum of shifted_difference_count
/// over all (m-1)-subsets of {-mu+1, ..., -1}, found by brute force.
long z_function(const NumericalSemigroup& g, long mu, int m, const ZConfig& cfg = {});

/// Closed form a(m-1) - (m-2)(m-1)/2 for the semigroup <a, a+1>,
/// valid for 1 <= m <= mu <= a+1.
long z_closed_form(long a, long mu, int m);

}  // namespace rghw

#endif
