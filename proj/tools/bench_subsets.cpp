// Compares the serial and OpenMP subset scans on the kind of workload the
// bound searches produce, and checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <vector>

#include "rghw/combinatorics.hpp"
#include "rghw/semigroup.hpp"

using namespace rghw;

int main() {
  NumericalSemigroup h({8, 9});
  std::vector<long> shifts;
  for (long s = -30; s <= -1; ++s) shifts.push_back(s);

  auto eval = [&](const std::vector<int>& idx) -> std::int64_t {
    std::vector<long> chosen;
    for (int i : idx) chosen.push_back(shifts[i]);
    return shifted_difference_count(h, chosen);
  };

  std::printf("%4s %14s %12s %12s %8s\n", "k", "combinations", "serial(ms)",
              "parallel(ms)", "speedup");
  for (int k = 2; k <= 6; ++k) {
    int n = static_cast<int>(shifts.size());
    auto t0 = std::chrono::steady_clock::now();
    auto s = subset_min_serial(n, k, eval);
    auto t1 = std::chrono::steady_clock::now();
    auto p = subset_min_parallel(n, k, eval);
    auto t2 = std::chrono::steady_clock::now();
    if (s.value != p.value || s.argmin != p.argmin) {
      std::printf("MISMATCH at k=%d\n", k);
      return 1;
    }
    double ms_s = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_p = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("%4d %14lld %12.2f %12.2f %8.2f\n", k,
                static_cast<long long>(binomial(n, k)), ms_s, ms_p,
                ms_p > 0 ? ms_s / ms_p : 0.0);
  }
  return 0;
}
