#include "rghw/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rghw/combinatorics.hpp"

namespace rghw {

CoordinateSet::CoordinateSet(int n, std::vector<int> indices) : n_(n), idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 0 || idx_[i] >= n_) throw std::invalid_argument("index out of range");
    if (i > 0 && idx_[i] == idx_[i - 1]) throw std::invalid_argument("duplicate index");
  }
}

CoordinateSet CoordinateSet::full(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return CoordinateSet(n, std::move(all));
}

std::vector<int> CoordinateSet::complement() const {
  std::vector<int> out;
  out.reserve(n_ - idx_.size());
  size_t p = 0;
  for (int i = 0; i < n_; ++i) {
    if (p < idx_.size() && idx_[p] == i) ++p;
    else out.push_back(i);
  }
  return out;
}

bool CoordinateSet::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

LinearCode LinearCode::from_rows(const FiniteField& f, int n, const GfMatrix& rows) {
  if (&rows.field() != &f || rows.cols() != n)
    throw std::invalid_argument("generator shape/field mismatch");
  GfMatrix w = rows;
  int r = linalg::rref(w);
  GfMatrix gen(f, r, n);
  for (int i = 0; i < r; ++i) std::copy(w.row(i), w.row(i) + n, gen.row(i));
  return LinearCode(std::move(gen));
}

LinearCode LinearCode::zero(const FiniteField& f, int n) {
  return LinearCode(GfMatrix(f, 0, n));
}

LinearCode LinearCode::full(const FiniteField& f, int n) {
  GfMatrix id(f, n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  return LinearCode(std::move(id));
}

LinearCode LinearCode::dual() const {
  GfMatrix k = linalg::right_kernel(gen_);
  return from_rows(field(), length(), k);
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (&field() != &sub.field() || length() != sub.length()) return false;
  if (sub.dim() > dim()) return false;
  return linalg::rank(gen_.vstack(sub.generator())) == dim();
}

bool LinearCode::contains_word(const GfVector& w) const {
  GfMatrix one(field(), 1, length());
  std::copy(w.begin(), w.end(), one.row(0));
  return linalg::rank(gen_.vstack(one)) == dim();
}

namespace {

// dim(C cap V_I) via the columns outside I
int shortened_dim(const LinearCode& c, const std::vector<int>& outside) {
  return c.dim() - linalg::rank(c.generator().select_columns(outside));
}

int quotient_dim_by_outside(const LinearCode& c1, const LinearCode& c2,
                            const std::vector<int>& outside) {
  return shortened_dim(c1, outside) - shortened_dim(c2, outside);
}

std::vector<int> complement_of(const std::vector<int>& sorted_idx, int n) {
  std::vector<int> out;
  out.reserve(n - sorted_idx.size());
  size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < sorted_idx.size() && sorted_idx[p] == i) ++p;
    else out.push_back(i);
  }
  return out;
}

void require_nested(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.contains(c2)) throw std::invalid_argument("C2 is not contained in C1");
}

}  // namespace

int shortened_dim_quotient(const LinearCode& c1, const LinearCode& c2,
                           const CoordinateSet& i) {
  require_nested(c1, c2);
  if (i.length() != c1.length()) throw std::invalid_argument("length mismatch");
  auto outside = i.complement();
  return quotient_dim_by_outside(c1, c2, outside);
}

int rghw_oracle(const LinearCode& c1, const LinearCode& c2, int m,
                const OracleConfig& cfg) {
  require_nested(c1, c2);
  int n = c1.length();
  int ell = c1.dim() - c2.dim();
  if (m < 1 || m > ell) throw std::invalid_argument("m out of range");
  if (n > cfg.max_length) throw std::invalid_argument("length above oracle cap");
  auto exists = cfg.parallel ? subset_exists_parallel : subset_exists_serial;
  for (int j = m; j <= n; ++j) {
    bool reached_m = false;
    bool any = exists(n, j, [&](const std::vector<int>& idx) {
      int q = quotient_dim_by_outside(c1, c2, complement_of(idx, n));
      return q >= m;
    });
    if (any) {
      // the minimum cardinality reaching >= m also realizes exactly m
      reached_m = exists(n, j, [&](const std::vector<int>& idx) {
        return quotient_dim_by_outside(c1, c2, complement_of(idx, n)) == m;
      });
      if (!reached_m) throw std::logic_error("quotient skipped m; monotonicity violated");
      return j;
    }
  }
  throw std::logic_error("RGHW not reached; inputs inconsistent");
}

int rdlp(const LinearCode& c1, const LinearCode& c2, int j, const OracleConfig& cfg) {
  require_nested(c1, c2);
  int n = c1.length();
  if (j < 0 || j > n) throw std::invalid_argument("j out of range");
  if (n > cfg.max_length) throw std::invalid_argument("length above oracle cap");
  auto scan = cfg.parallel ? subset_min_parallel : subset_min_serial;
  auto r = scan(n, j, [&](const std::vector<int>& idx) -> std::int64_t {
    // minimize the negated quotient to reuse the min-reduction kernel
    return -quotient_dim_by_outside(c1, c2, complement_of(idx, n));
  });
  return static_cast<int>(-r.value);
}

LinearCode read_code(std::istream& in) {
  Word q;
  int n, k;
  if (!(in >> q >> n >> k)) throw std::invalid_argument("bad code file header");
  const FiniteField& f = FiniteField::get_order(q);
  GfMatrix rows(f, k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      Word v;
      if (!(in >> v)) throw std::invalid_argument("truncated code file");
      if (v >= q) throw std::invalid_argument("encoding out of range in code file");
      rows.at(r, c) = v;
    }
  auto code = LinearCode::from_rows(f, n, rows);
  if (code.dim() != k) throw std::invalid_argument("generator rows are dependent");
  return code;
}

void write_code(std::ostream& out, const LinearCode& c) {
  out << c.field().order() << ' ' << c.length() << ' ' << c.dim() << '\n';
  for (int r = 0; r < c.dim(); ++r) {
    for (int j = 0; j < c.length(); ++j) out << (j ? " " : "") << c.generator().at(r, j);
    out << '\n';
  }
}

}  // namespace rghw
