#ifndef RGHW_CODES_HPP
#define RGHW_CODES_HPP

#include <iosfwd>
#include <vector>

#include "rghw/linalg.hpp"

namespace rghw {

/// Sorted subset of coordinate positions of a length-n vector (0-based).
class CoordinateSet {
 public:
  CoordinateSet(int n, std::vector<int> indices);
  static CoordinateSet full(int n);

  int length() const { return n_; }
  int size() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  std::vector<int> complement() const;
  bool contains(int i) const;

 private:
  int n_;
  std::vector<int> idx_;  // strictly increasing, in [0, n)
};

/// Linear code as a canonical row space: the generator is kept in reduced
/// row echelon form, so code equality is matrix equality.
class LinearCode {
 public:
  /// Row space of the given spanning rows (need not be independent).
  static LinearCode from_rows(const FiniteField& f, int n, const GfMatrix& rows);
  static LinearCode zero(const FiniteField& f, int n);
  static LinearCode full(const FiniteField& f, int n);

  const FiniteField& field() const { return gen_.field(); }
  int length() const { return gen_.cols(); }
  int dim() const { return gen_.rows(); }
  const GfMatrix& generator() const { return gen_; }

  LinearCode dual() const;
  bool contains(const LinearCode& sub) const;
  bool contains_word(const GfVector& w) const;
  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

 private:
  explicit LinearCode(GfMatrix rref_gen) : gen_(std::move(rref_gen)) {}
  GfMatrix gen_;
};

struct OracleConfig {
  int max_length = 24;        // subset-search cap
  bool parallel = true;       // OpenMP partitioned scan (results identical)
};

/// dim(C1 cap V_I) - dim(C2 cap V_I); C cap V_I is the kernel of the
/// projection of C onto the coordinates outside I.
int shortened_dim_quotient(const LinearCode& c1, const LinearCode& c2,
                           const CoordinateSet& i);

/// Exact m-th relative generalized Hamming weight M_m(C1, C2) by subset
/// search in increasing cardinality.
int rghw_oracle(const LinearCode& c1, const LinearCode& c2, int m,
                const OracleConfig& cfg = {});

/// Exact relative dimension/length profile K_j(C1, C2).
int rdlp(const LinearCode& c1, const LinearCode& c2, int j,
         const OracleConfig& cfg = {});

/// Code file format: header "q n k" then k rows of n element encodings.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);

}  // namespace rghw

#endif
