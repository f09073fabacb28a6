#ifndef RGHW_LINALG_HPP
#define RGHW_LINALG_HPP

#include <optional>
#include <vector>

#include "rghw/field.hpp"

namespace rghw {

/// Dense row-major matrix of element encodings over a fixed field.
class GfMatrix {
 public:
  GfMatrix() : f_(nullptr), rows_(0), cols_(0) {}
  GfMatrix(const FiniteField& f, int rows, int cols)
      : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  const FiniteField& field() const { return *f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Word& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Word at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Word* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
  const Word* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }

  bool operator==(const GfMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  GfMatrix select_columns(const std::vector<int>& cols) const;
  GfMatrix vstack(const GfMatrix& below) const;

 private:
  const FiniteField* f_;
  int rows_, cols_;
  std::vector<Word> a_;
};

using GfVector = std::vector<Word>;

namespace linalg {

/// In-place reduced row echelon form, leftmost pivots. Returns rank and,
/// optionally, the pivot column list. Zero rows are moved to the bottom
/// but not removed.
int rref(GfMatrix& m, std::vector<int>* pivots = nullptr);

/// Echelon form with pivots chosen rightmost-first (columns scanned from
/// the right). The resulting rows have pairwise distinct trailing nonzero
/// positions; used for leading-index sets of codes.
int rref_trailing(GfMatrix& m, std::vector<int>* trailing_cols = nullptr);

int rank(GfMatrix m);

/// Basis (as rows) of the right kernel {v : m * v^T = 0}.
GfMatrix right_kernel(const GfMatrix& m);

GfMatrix mul(const GfMatrix& a, const GfMatrix& b);
GfVector mul_vec(const GfVector& v, const GfMatrix& m);  // row vector * matrix

GfMatrix inverse(const GfMatrix& m);  // throws if singular

/// One solution x (as row) of x * m = rhs, or nullopt if inconsistent.
std::optional<GfVector> solve_left(const GfMatrix& m, const GfVector& rhs);

GfVector star_product(const FiniteField& f, const GfVector& u, const GfVector& v);

}  // namespace linalg
}  // namespace rghw

#endif
