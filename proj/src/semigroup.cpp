#include "rghw/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rghw/combinatorics.hpp"

namespace rghw {

NumericalSemigroup::NumericalSemigroup(std::vector<long> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("no generators");
  std::sort(gens_.begin(), gens_.end());
  long g = 0;
  for (long x : gens_) {
    if (x <= 0) throw std::invalid_argument("generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw std::invalid_argument("gcd of generators must be 1 (no conductor)");

  // membership sieve; with gcd 1 the Frobenius number is below g1*g2
  long window = gens_[0] * (gens_.size() > 1 ? gens_[1] : 1) + gens_[0] + 2;
  std::vector<char> mem(static_cast<size_t>(window), 0);
  mem[0] = 1;
  for (long x = 1; x < window; ++x)
    for (long gen : gens_)
      if (x >= gen && mem[static_cast<size_t>(x - gen)]) { mem[static_cast<size_t>(x)] = 1; break; }

  long frobenius = -1;
  for (long x = window - 1; x >= 0; --x)
    if (!mem[static_cast<size_t>(x)]) { frobenius = x; break; }
  if (frobenius == window - 1) throw std::logic_error("conductor window too small");
  conductor_ = frobenius + 1;
  member_.assign(mem.begin(), mem.begin() + conductor_);
  for (long x = 0; x < conductor_; ++x)
    if (!member_[static_cast<size_t>(x)]) gaps_.push_back(x);
  genus_ = static_cast<long>(gaps_.size());
}

long NumericalSemigroup::element(int m) const {
  if (m < 1) throw std::invalid_argument("element index is 1-based");
  int seen = 0;
  for (long x = 0;; ++x) {
    if (contains(x) && ++seen == m) return x;
  }
}

long shifted_difference_count(const NumericalSemigroup& g, const std::vector<long>& shifts) {
  for (size_t i = 0; i < shifts.size(); ++i) {
    if (shifts[i] >= 0) throw std::invalid_argument("shifts must be strictly negative");
    for (size_t j = i + 1; j < shifts.size(); ++j)
      if (shifts[i] == shifts[j]) throw std::invalid_argument("duplicate shift");
  }
  if (shifts.empty()) return 0;
  long lo = *std::min_element(shifts.begin(), shifts.end());
  long count = 0;
  // everything >= conductor is in G, so escapes live in [lo, conductor)
  for (long a = lo; a < g.conductor(); ++a) {
    if (g.contains(a)) continue;
    for (long s : shifts)
      if (g.contains(a - s)) { ++count; break; }
  }
  return count;
}

long z_function(const NumericalSemigroup& g, long mu, int m, const ZConfig& cfg) {
  if (mu < 1) throw std::invalid_argument("mu must be positive");
  if (m < 1 || m > mu) throw std::invalid_argument("m out of [1, mu]");
  if (m == 1) return 0;
  int pool = static_cast<int>(mu - 1);  // candidate shifts -mu+1 .. -1
  int pick = m - 1;
  if (binomial(pool, pick) > cfg.max_combinations)
    throw std::invalid_argument("Z brute force above combination cap; use the closed form");
  auto eval = [&](const std::vector<int>& idx) -> std::int64_t {
    std::vector<long> shifts(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) shifts[i] = -mu + 1 + idx[i];
    return shifted_difference_count(g, shifts);
  };
  auto r = cfg.parallel ? subset_min_parallel(pool, pick, eval)
                        : subset_min_serial(pool, pick, eval);
  return static_cast<long>(r.value);
}

long z_closed_form(long a, long mu, int m) {
  if (a < 2) throw std::invalid_argument("a must be >= 2");
  if (!(1 <= m && m <= mu && mu <= a + 1))
    throw std::invalid_argument("closed form needs 1 <= m <= mu <= a+1");
  return a * (m - 1) - static_cast<long>(m - 2) * (m - 1) / 2;
}

}  // namespace rghw
