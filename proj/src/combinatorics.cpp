#include "rghw/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rghw {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / (n - k + i))
      return std::numeric_limits<std::int64_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<int> unrank_combination(int n, int k, std::int64_t rank) {
  // colex: rank = sum binomial(c_i, i+1) over ascending elements c_0 < ... < c_{k-1}
  std::vector<int> comb(k);
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    comb[i - 1] = c;
    rank -= binomial(c, i);
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  // colex successor: bump the lowest element that can move without colliding
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? comb[i + 1] : n;
    if (comb[i] + 1 < limit) {
      ++comb[i];
      for (int j = 0; j < i; ++j) comb[j] = j;
      return true;
    }
  }
  return false;
}

namespace {

bool better(const SubsetScanResult& a, const SubsetScanResult& b) {
  if (a.value != b.value) return a.value < b.value;
  if (b.argmin.empty()) return !a.argmin.empty();
  if (a.argmin.empty()) return false;
  return std::lexicographical_compare(a.argmin.begin(), a.argmin.end(),
                                      b.argmin.begin(), b.argmin.end());
}

SubsetScanResult scan_range(
    int n, int k, std::int64_t lo, std::int64_t hi,
    const std::function<std::int64_t(const std::vector<int>&)>& eval) {
  SubsetScanResult best;
  if (lo >= hi) return best;
  std::vector<int> comb = unrank_combination(n, k, lo);
  for (std::int64_t r = lo; r < hi; ++r) {
    std::int64_t v = eval(comb);
    SubsetScanResult cand{v, comb};
    if (better(cand, best)) best = std::move(cand);
    if (r + 1 < hi) next_combination(comb, n);
  }
  return best;
}

}  // namespace

SubsetScanResult subset_min_serial(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval) {
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  return scan_range(n, k, 0, binomial(n, k), eval);
}

SubsetScanResult subset_min_parallel(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval) {
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::int64_t total = binomial(n, k);
#ifdef _OPENMP
  int threads = omp_get_max_threads();
  if (threads > 1 && total > 256) {
    std::vector<SubsetScanResult> part(threads);
#pragma omp parallel num_threads(threads)
    {
      int t = omp_get_thread_num();
      std::int64_t lo = total * t / threads;
      std::int64_t hi = total * (t + 1) / threads;
      part[t] = scan_range(n, k, lo, hi, eval);
    }
    SubsetScanResult best;
    for (auto& p : part)
      if (p.value != std::numeric_limits<std::int64_t>::max() && better(p, best))
        best = std::move(p);
    return best;
  }
#endif
  return scan_range(n, k, 0, total, eval);
}

SubsetScanResult subset_min(
    int n, int k, const std::function<std::int64_t(const std::vector<int>&)>& eval) {
  return subset_min_parallel(n, k, eval);
}

bool subset_exists_serial(int n, int k,
                          const std::function<bool(const std::vector<int>&)>& pred) {
  auto r = subset_min_serial(n, k, [&](const std::vector<int>& c) -> std::int64_t {
    return pred(c) ? 0 : 1;
  });
  return r.value == 0;
}

bool subset_exists_parallel(int n, int k,
                            const std::function<bool(const std::vector<int>&)>& pred) {
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::int64_t total = binomial(n, k);
#ifdef _OPENMP
  int threads = omp_get_max_threads();
  if (threads > 1 && total > 256) {
    bool found = false;
#pragma omp parallel num_threads(threads)
    {
      int t = omp_get_thread_num();
      std::int64_t lo = total * t / threads;
      std::int64_t hi = total * (t + 1) / threads;
      if (lo < hi) {
        std::vector<int> comb = unrank_combination(n, k, lo);
        for (std::int64_t r = lo; r < hi; ++r) {
          bool stop;
#pragma omp atomic read
          stop = found;
          if (stop) break;
          if (pred(comb)) {
#pragma omp atomic write
            found = true;
            break;
          }
          if (r + 1 < hi) next_combination(comb, n);
        }
      }
    }
    return found;
  }
#endif
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  for (std::int64_t r = 0; r < total; ++r) {
    if (pred(comb)) return true;
    if (r + 1 < total) next_combination(comb, n);
  }
  return false;
}

bool subset_exists(int n, int k,
                   const std::function<bool(const std::vector<int>&)>& pred) {
  return subset_exists_parallel(n, k, pred);
}

}  // namespace rghw
