#include "rghw/fengrao.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rghw {

int IndexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

OrderedBasis OrderedBasis::from_rows(const GfMatrix& rows) {
  if (rows.rows() != rows.cols()) throw std::invalid_argument("basis must be square");
  GfMatrix inv = linalg::inverse(rows);  // throws if rank deficient
  return OrderedBasis(rows, std::move(inv));
}

OrderedBasis OrderedBasis::standard(const FiniteField& f, int n) {
  GfMatrix id(f, n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  return from_rows(id);
}

GfVector OrderedBasis::vector(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("basis index out of range");
  return GfVector(basis_.row(i - 1), basis_.row(i - 1) + n());
}

int OrderedBasis::rho_bar(const GfVector& v) const {
  if (static_cast<int>(v.size()) != n()) throw std::invalid_argument("dimension mismatch");
  GfVector coords = linalg::mul_vec(v, inv_);
  for (int i = n() - 1; i >= 0; --i)
    if (coords[i]) return i + 1;
  return 0;
}

std::vector<int> OrderedBasis::rho_set(const LinearCode& c) const {
  if (c.length() != n() || &c.field() != &field())
    throw std::invalid_argument("code does not match basis");
  GfMatrix coords = linalg::mul(c.generator(), inv_);
  std::vector<int> trailing;
  linalg::rref_trailing(coords, &trailing);
  for (int& t : trailing) ++t;  // 1-based
  return trailing;
}

OwbTable::OwbTable(const OrderedBasis& basis) : basis_(&basis), n_(basis.n()) {
  rho_.assign(static_cast<size_t>(n_) * n_, 0);
  owb_.assign(static_cast<size_t>(n_) * n_, 0);
  const FiniteField& f = basis.field();
  for (int i = 1; i <= n_; ++i) {
    GfVector bi = basis.vector(i);
    for (int j = 1; j <= n_; ++j) {
      GfVector prod = linalg::star_product(f, bi, basis.vector(j));
      rho_[(i - 1) * n_ + (j - 1)] = basis.rho_bar(prod);
    }
  }
  // (i, j) is OWB iff rho(b_i' * b_j) < rho(b_i * b_j) for every i' < i
  for (int j = 1; j <= n_; ++j) {
    int prefix_max = -1;
    for (int i = 1; i <= n_; ++i) {
      int r = rho_[(i - 1) * n_ + (j - 1)];
      owb_[(i - 1) * n_ + (j - 1)] = (r > prefix_max);
      prefix_max = std::max(prefix_max, r);
    }
  }
  lambda_.assign(n_, IndexSet(n_));
  v_.assign(n_, IndexSet(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      int l = rho_[(i - 1) * n_ + (j - 1)];
      if (l >= 1 && owb_[(i - 1) * n_ + (j - 1)]) {
        lambda_[i - 1].set(l - 1);
        v_[l - 1].set(i - 1);
      }
    }
}

int support_lower_bound(const OwbTable& t, const std::vector<int>& rho_set) {
  if (rho_set.empty()) throw std::invalid_argument("empty index set");
  IndexSet u(t.n());
  for (int i : rho_set) {
    if (i < 1 || i > t.n()) throw std::invalid_argument("index out of range");
    u.unite(t.lambda(i));
  }
  return u.count();
}

namespace {

void min_union_rec(const std::vector<const IndexSet*>& sets, int m, int next,
                   const IndexSet& running, int& best) {
  int have = running.count();
  if (have >= best) return;
  if (m == 0) {
    best = have;
    return;
  }
  int remaining = static_cast<int>(sets.size()) - next;
  if (remaining < m) return;
  for (int i = next; i + m <= static_cast<int>(sets.size()); ++i) {
    IndexSet u = running;
    u.unite(*sets[i]);
    min_union_rec(sets, m - 1, i + 1, u, best);
  }
}

}  // namespace

int min_union_over_subsets(const std::vector<const IndexSet*>& sets, int m) {
  if (m < 1 || m > static_cast<int>(sets.size()))
    throw std::invalid_argument("subset size out of range");
  int universe = sets[0]->universe();
  int best = universe + 1;
  IndexSet empty(universe);
  min_union_rec(sets, m, 0, empty, best);
  return best;
}

namespace {

void check_bound_inputs(const LinearCode& c1, const LinearCode& c2, int m,
                        const BoundConfig& cfg) {
  if (!c1.contains(c2) || c1 == c2)
    throw std::invalid_argument("need C2 strictly contained in C1");
  if (m < 1 || m > c1.dim() - c2.dim()) throw std::invalid_argument("m out of range");
  if (m > cfg.max_m) throw std::invalid_argument("m above bound-search cap");
}

bool is_prefix_pair(const std::vector<int>& rho1, const std::vector<int>& rho2) {
  // C2 spans the first dim(C2) vectors of C1's rho-sorted basis exactly when
  // rho(C2) consists of the smallest elements of rho(C1)
  if (rho2.size() > rho1.size()) return false;
  return std::equal(rho2.begin(), rho2.end(), rho1.begin());
}

}  // namespace

int rghw_bound_primary(const OwbTable& t, const LinearCode& c1, const LinearCode& c2,
                       int m, const BoundConfig& cfg) {
  check_bound_inputs(c1, c2, m, cfg);
  std::vector<int> rho1 = t.basis().rho_set(c1);
  std::vector<int> rho2 = t.basis().rho_set(c2);
  std::vector<int> candidates;
  if (is_prefix_pair(rho1, rho2)) {
    candidates.assign(rho1.begin() + rho2.size(), rho1.end());
  } else {
    std::vector<int> diff;
    std::set_difference(rho1.begin(), rho1.end(), rho2.begin(), rho2.end(),
                        std::back_inserter(diff));
    if (diff.empty()) throw std::logic_error("rho sets of nested codes coincide");
    int u = diff.front();
    for (int i : rho1)
      if (i >= u) candidates.push_back(i);
  }
  if (static_cast<int>(candidates.size()) > cfg.max_candidates)
    throw std::invalid_argument("candidate set above bound-search cap");
  std::vector<const IndexSet*> sets;
  sets.reserve(candidates.size());
  for (int i : candidates) sets.push_back(&t.lambda(i));
  return min_union_over_subsets(sets, m);
}

int rghw_bound_dual(const OwbTable& t, const LinearCode& c1, const LinearCode& c2,
                    int m, const BoundConfig& cfg) {
  check_bound_inputs(c1, c2, m, cfg);
  std::vector<int> rho1 = t.basis().rho_set(c1);
  std::vector<int> rho2 = t.basis().rho_set(c2);
  int u = rho1.back();  // largest element of rho(C1 \ {0})
  std::vector<int> candidates;
  for (int i = 1; i <= u; ++i)
    if (!std::binary_search(rho2.begin(), rho2.end(), i)) candidates.push_back(i);
  if (static_cast<int>(candidates.size()) > cfg.max_candidates)
    throw std::invalid_argument("candidate set above bound-search cap");
  if (static_cast<int>(candidates.size()) < m)
    throw std::invalid_argument("not enough admissible indices for m");
  std::vector<const IndexSet*> sets;
  sets.reserve(candidates.size());
  for (int i : candidates) sets.push_back(&t.v_set(i));
  return min_union_over_subsets(sets, m);
}

}  // namespace rghw
