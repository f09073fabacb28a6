#include "rghw/ag_bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "rghw/combinatorics.hpp"

namespace rghw {

namespace {

bool in_sorted(const std::vector<long>& v, long x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

OnePointCodeFamily OnePointCodeFamily::build(const FiniteField& f, int n,
                                             NumericalSemigroup h,
                                             const std::function<GfVector(long)>& eval,
                                             long max_lambda) {
  GfMatrix rows(f, n, n);        // original evaluation vectors, H* order
  GfMatrix work(f, 0, n);        // row-reduced copy for the rank oracle
  std::vector<GfVector> reduced;
  std::vector<int> lead;         // leading column of each reduced row
  std::vector<long> hstar;
  int rank = 0;

  for (long lambda = 0; lambda <= max_lambda && rank < n; ++lambda) {
    if (!h.contains(lambda)) continue;
    GfVector v = eval(lambda);
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("evaluation vector has wrong length");
    GfVector r = v;
    for (size_t i = 0; i < reduced.size(); ++i) {
      Word c = r[lead[i]];
      if (c) {
        Word scale = f.neg(c);
        for (int j = 0; j < n; ++j)
          if (reduced[i][j]) r[j] = f.add(r[j], f.mul(scale, reduced[i][j]));
      }
    }
    int pivot = -1;
    for (int j = 0; j < n; ++j)
      if (r[j]) { pivot = j; break; }
    if (pivot < 0) continue;  // rank unchanged: lambda not in H*
    Word inv = f.inv(r[pivot]);
    for (int j = 0; j < n; ++j)
      if (r[j]) r[j] = f.mul(inv, r[j]);
    std::copy(v.begin(), v.end(), rows.row(rank));
    reduced.push_back(std::move(r));
    lead.push_back(pivot);
    hstar.push_back(lambda);
    ++rank;
  }
  if (rank < n)
    throw std::invalid_argument("evaluation data exhausted before reaching rank n");

  // divisor-closedness of H*: alpha + beta in H* with alpha, beta in H
  // forces alpha, beta in H*
  for (long delta : hstar)
    for (long alpha = 0; 2 * alpha <= delta; ++alpha) {
      if (!h.contains(alpha) || !h.contains(delta - alpha)) continue;
      if (!in_sorted(hstar, alpha) || !in_sorted(hstar, delta - alpha))
        throw std::logic_error("H* is not divisor-closed; evaluation data inconsistent");
    }

  OrderedBasis basis = OrderedBasis::from_rows(rows);
  return OnePointCodeFamily(std::move(h), std::move(hstar), std::move(rows),
                            std::move(basis));
}

std::optional<long> OnePointCodeFamily::normalize_mu(long mu) const {
  auto it = std::upper_bound(hstar_.begin(), hstar_.end(), mu);
  if (it == hstar_.begin()) return std::nullopt;
  return *(it - 1);
}

LinearCode OnePointCodeFamily::code(long mu) const {
  int d = code_dim(mu);
  GfMatrix rows(field(), d, length());
  for (int i = 0; i < d; ++i)
    std::copy(eval_.row(i), eval_.row(i) + length(), rows.row(i));
  return LinearCode::from_rows(field(), length(), rows);
}

int OnePointCodeFamily::code_dim(long mu) const {
  return static_cast<int>(std::upper_bound(hstar_.begin(), hstar_.end(), mu) -
                          hstar_.begin());
}

GfVector OnePointCodeFamily::evaluation(long gamma) const {
  auto it = std::lower_bound(hstar_.begin(), hstar_.end(), gamma);
  if (it == hstar_.end() || *it != gamma)
    throw std::invalid_argument("pole order not in H*");
  int i = static_cast<int>(it - hstar_.begin());
  return GfVector(eval_.row(i), eval_.row(i) + length());
}

SupportBounds support_bound_ag(const std::vector<long>& hstar,
                               const NumericalSemigroup& h,
                               const std::vector<long>& gamma_set) {
  if (gamma_set.empty()) throw std::invalid_argument("empty gamma set");
  for (size_t s = 0; s < gamma_set.size(); ++s) {
    if (!in_sorted(hstar, gamma_set[s]))
      throw std::invalid_argument("gamma not in H*");
    if (s > 0 && gamma_set[s] <= gamma_set[s - 1])
      throw std::invalid_argument("gamma set must be strictly ascending");
  }
  long n = static_cast<long>(hstar.size());
  long tight = 0;
  for (long gamma : hstar)
    for (long gs : gamma_set)
      if (h.contains(gamma - gs)) { ++tight; break; }

  long gm = gamma_set.back();
  long extra = 0;
  // escapes from union_{s<m}(gamma_s + H) relative to gamma_m + H live
  // below gamma_m + conductor
  for (long x = gamma_set.front(); x < gm + h.conductor(); ++x) {
    if (h.contains(x - gm)) continue;
    for (size_t s = 0; s + 1 < gamma_set.size(); ++s)
      if (h.contains(x - gamma_set[s])) { ++extra; break; }
  }
  long relaxed = n - gm + extra;
  if (tight < relaxed) throw std::logic_error("support bound ordering violated");
  return {tight, relaxed};
}

namespace {

std::vector<long> candidate_gammas(const std::vector<long>& hstar, long mu1, long mu2) {
  std::vector<long> out;
  for (long g : hstar)
    if (g > mu2 && g <= mu1) out.push_back(g);
  return out;
}

void check_onepoint_args(const std::vector<long>& hstar, long mu1, long mu2, int m) {
  if (mu2 >= mu1) throw std::invalid_argument("need mu2 < mu1");
  long dim1 = std::upper_bound(hstar.begin(), hstar.end(), mu1) - hstar.begin();
  long dim2 = std::upper_bound(hstar.begin(), hstar.end(), mu2) - hstar.begin();
  if (m < 1 || m > dim1 - dim2)
    throw std::invalid_argument("m out of range for the code pair");
}

long min_over_gamma_subsets(const std::vector<long>& hstar, const NumericalSemigroup& h,
                            const std::vector<long>& cand, int m, bool tight) {
  auto r = subset_min(static_cast<int>(cand.size()), m,
                      [&](const std::vector<int>& idx) -> std::int64_t {
                        std::vector<long> gs(idx.size());
                        for (size_t i = 0; i < idx.size(); ++i) gs[i] = cand[idx[i]];
                        auto b = support_bound_ag(hstar, h, gs);
                        return tight ? b.tight : b.relaxed;
                      });
  return static_cast<long>(r.value);
}

}  // namespace

long rghw_bound_onepoint(const std::vector<long>& hstar, const NumericalSemigroup& h,
                         long mu1, long mu2, int m, BoundTier tier) {
  check_onepoint_args(hstar, mu1, mu2, m);
  if (tier == BoundTier::Closed) {
    long n = static_cast<long>(hstar.size());
    return n - mu1 + z_function(h, mu1 - mu2, m);
  }
  auto cand = candidate_gammas(hstar, mu1, mu2);
  if (static_cast<int>(cand.size()) < m)
    throw std::invalid_argument("candidate set smaller than m");
  return min_over_gamma_subsets(hstar, h, cand, m, tier == BoundTier::ExactSet);
}

long rghw_bound_onepoint_dual(const std::vector<long>& hstar, const NumericalSemigroup& h,
                              long mu1, long mu2, int m) {
  check_onepoint_args(hstar, mu1, mu2, m);
  auto cand = candidate_gammas(hstar, mu1, mu2);
  if (static_cast<int>(cand.size()) < m)
    throw std::invalid_argument("candidate set smaller than m");
  auto r = subset_min(static_cast<int>(cand.size()), m,
                      [&](const std::vector<int>& idx) -> std::int64_t {
                        // |H cap union(gamma_s - H)|, finite inside [0, gamma_m]
                        long count = 0;
                        long top = cand[idx.back()];
                        for (long x = 0; x <= top; ++x) {
                          if (!h.contains(x)) continue;
                          for (int i : idx)
                            if (h.contains(cand[i] - x)) { ++count; break; }
                        }
                        return count;
                      });
  return static_cast<long>(r.value);
}

}  // namespace rghw
