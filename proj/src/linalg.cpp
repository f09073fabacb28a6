#include "rghw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rghw {

GfMatrix GfMatrix::select_columns(const std::vector<int>& cols) const {
  GfMatrix out(*f_, rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (size_t j = 0; j < cols.size(); ++j) out.at(r, static_cast<int>(j)) = at(r, cols[j]);
  return out;
}

GfMatrix GfMatrix::vstack(const GfMatrix& below) const {
  if (f_ != below.f_ || cols_ != below.cols_)
    throw std::invalid_argument("vstack shape/field mismatch");
  GfMatrix out(*f_, rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    std::copy(row(r), row(r) + cols_, out.row(r));
  for (int r = 0; r < below.rows_; ++r)
    std::copy(below.row(r), below.row(r) + cols_, out.row(rows_ + r));
  return out;
}

namespace linalg {

namespace {

void axpy_row(const FiniteField& f, Word c, const Word* src, Word* dst, int n) {
  if (c == 0) return;
  for (int i = 0; i < n; ++i)
    if (src[i]) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

void scale_row(const FiniteField& f, Word c, Word* row, int n) {
  for (int i = 0; i < n; ++i)
    if (row[i]) row[i] = f.mul(c, row[i]);
}

int echelon(GfMatrix& m, std::vector<int>* pivots, bool from_right) {
  const FiniteField& f = m.field();
  int rank = 0;
  if (pivots) pivots->clear();
  int n = m.cols();
  for (int step = 0; step < n && rank < m.rows(); ++step) {
    int col = from_right ? n - 1 - step : step;
    int pr = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col)) { pr = r; break; }
    if (pr < 0) continue;
    if (pr != rank)
      std::swap_ranges(m.row(pr), m.row(pr) + n, m.row(rank));
    scale_row(f, f.inv(m.at(rank, col)), m.row(rank), n);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      Word c = m.at(r, col);
      if (c) axpy_row(f, f.neg(c), m.row(rank), m.row(r), n);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace

int rref(GfMatrix& m, std::vector<int>* pivots) { return echelon(m, pivots, false); }

int rref_trailing(GfMatrix& m, std::vector<int>* trailing) {
  int r = echelon(m, trailing, true);
  if (trailing) std::sort(trailing->begin(), trailing->end());
  return r;
}

int rank(GfMatrix m) { return echelon(m, nullptr, false); }

GfMatrix right_kernel(const GfMatrix& m) {
  const FiniteField& f = m.field();
  GfMatrix w = m;
  std::vector<int> pivots;
  int r = rref(w, &pivots);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : pivots) is_pivot[p] = 1;
  GfMatrix out(f, m.cols() - r, m.cols());
  int row = 0;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(row, free_col) = 1;
    for (int i = 0; i < r; ++i)
      out.at(row, pivots[i]) = f.neg(w.at(i, free_col));
    ++row;
  }
  return out;
}

GfMatrix mul(const GfMatrix& a, const GfMatrix& b) {
  if (&a.field() != &b.field() || a.cols() != b.rows())
    throw std::invalid_argument("matmul shape/field mismatch");
  const FiniteField& f = a.field();
  GfMatrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Word c = a.at(i, k);
      if (c) axpy_row(f, c, b.row(k), out.row(i), b.cols());
    }
  return out;
}

GfVector mul_vec(const GfVector& v, const GfMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("vec-mat shape mismatch");
  const FiniteField& f = m.field();
  GfVector out(m.cols(), 0);
  for (int k = 0; k < m.rows(); ++k)
    if (v[k]) axpy_row(f, v[k], m.row(k), out.data(), m.cols());
  return out;
}

GfMatrix inverse(const GfMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  const FiniteField& f = m.field();
  int n = m.rows();
  GfMatrix aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    std::copy(m.row(i), m.row(i) + n, aug.row(i));
    aug.at(i, n + i) = 1;
  }
  if (rref(aug) != n) throw std::domain_error("matrix is singular");
  GfMatrix out(f, n, n);
  for (int i = 0; i < n; ++i)
    std::copy(aug.row(i) + n, aug.row(i) + 2 * n, out.row(i));
  return out;
}

std::optional<GfVector> solve_left(const GfMatrix& m, const GfVector& rhs) {
  if (static_cast<int>(rhs.size()) != m.cols())
    throw std::invalid_argument("solve shape mismatch");
  const FiniteField& f = m.field();
  // columns of aug are the unknown multipliers; transpose to standard form
  GfMatrix aug(f, m.cols(), m.rows() + 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) aug.at(c, r) = m.at(r, c);
  for (int c = 0; c < m.cols(); ++c) aug.at(c, m.rows()) = rhs[c];
  std::vector<int> pivots;
  rref(aug, &pivots);
  for (int p : pivots)
    if (p == m.rows()) return std::nullopt;  // pivot in rhs column
  GfVector x(m.rows(), 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.rows());
  return x;
}

GfVector star_product(const FiniteField& f, const GfVector& u, const GfVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("star product length mismatch");
  GfVector out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = f.mul(u[i], v[i]);
  return out;
}

}  // namespace linalg
}  // namespace rghw
