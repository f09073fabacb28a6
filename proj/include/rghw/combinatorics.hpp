#ifndef RGHW_COMBINATORICS_HPP
#define RGHW_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rghw {

/// Number of k-subsets of an n-set, saturating at int64 max.
std::int64_t binomial(int n, int k);

/// Unrank the combination of given colex rank into an ascending index list.
std::vector<int> unrank_combination(int n, int k, std::int64_t rank);

/// Advance an ascending combination to its colex successor; false at the end.
bool next_combination(std::vector<int>& comb, int n);

struct SubsetScanResult {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::vector<int> argmin;  // lexicographically smallest among minimizers
};

/// Minimum of eval over all k-subsets of [0, n). The parallel variant
/// partitions the colex-ranked combination stream across threads and merges
/// with a deterministic (value, subset) comparison, so serial and parallel
/// runs return identical results.
SubsetScanResult subset_min_serial(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval);
SubsetScanResult subset_min_parallel(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval);

/// Default entry point: parallel when OpenMP is available and the stream is
/// large enough to pay for it, serial otherwise.
SubsetScanResult subset_min(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval);

/// True iff some k-subset satisfies pred (deterministic result either way).
bool subset_exists_serial(int n, int k,
                          const std::function<bool(const std::vector<int>&)>& pred);
bool subset_exists_parallel(int n, int k,
                            const std::function<bool(const std::vector<int>&)>& pred);
bool subset_exists(int n, int k,
                   const std::function<bool(const std::vector<int>&)>& pred);

}  // namespace rghw

#endif
