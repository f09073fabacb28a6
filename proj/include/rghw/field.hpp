#ifndef RGHW_FIELD_HPP
#define RGHW_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rghw {

using Word = std::uint32_t;

/// Arithmetic in GF(p^k) for p^k <= 2^16. Elements are encoded as integers
/// in [0, q): the base-p digits of the encoding are the coefficients of the
/// polynomial residue, constant term first. Multiplication goes through
/// log/antilog tables built on a generator of the multiplicative group.
///
/// Instances are interned: get(p, k) always returns the same object, so
/// field identity is pointer identity. Immutable after construction.
class FiniteField {
 public:
  static const FiniteField& get(int p, int k);
  static const FiniteField& get_order(Word q);   // factors q = p^k
  static const FiniteField& parse(const std::string& spec);  // "p^k" or "q"

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  Word order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  Word generator() const { return generator_; }

  Word add(Word a, Word b) const;
  Word sub(Word a, Word b) const;
  Word neg(Word a) const;
  Word mul(Word a, Word b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Word inv(Word a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Word div(Word a, Word b) const { return mul(a, inv(b)); }
  Word pow(Word a, long long e) const;
  Word frobenius(Word a) const { return pow(a, p_); }

  /// True when this field was built as a quadratic extension GF(q0^2)
  /// with its GF(q0) subfield registered.
  bool has_quadratic_subfield() const { return subfield_ != nullptr; }
  const FiniteField& quadratic_subfield() const;
  /// Image of a subfield element inside this field.
  Word embed(Word sub_elem) const;
  /// Preimage under the embedding; throws if the element is outside GF(q0).
  Word unembed(Word elem) const;

  /// norm(e) = e^{q0+1}, trace(e) = e^{q0} + e, both returned as subfield
  /// encodings. Requires a registered quadratic subfield.
  Word norm(Word e) const;
  Word trace(Word e) const;

  std::string name() const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField(int p, int k);
  void build_tables();
  void register_subfield();
  Word mul_slow(Word a, Word b) const;  // polynomial product, table-free

  int p_, k_;
  Word q_;
  std::vector<int> modulus_;       // low-degree-first, length k+1, monic
  std::vector<Word> log_, antilog_;
  Word generator_ = 0;
  const FiniteField* subfield_ = nullptr;
  std::vector<Word> embed_;        // subfield encoding -> encoding here
  std::vector<Word> unembed_;      // encoding here -> subfield encoding + 1, 0 = none
};

/// A field element tied to its owning field. Binary operations require the
/// same owning field; mixing fields is an error, never a coercion.
class FieldElement {
 public:
  FieldElement() : f_(nullptr), v_(0) {}
  FieldElement(const FiniteField& f, Word v) : f_(&f), v_(v) {
    if (v >= f.order()) throw std::invalid_argument("encoding out of range");
  }

  Word value() const { return v_; }
  const FiniteField& field() const;

  FieldElement operator+(const FieldElement& o) const { return make(same(o).add(v_, o.v_)); }
  FieldElement operator-(const FieldElement& o) const { return make(same(o).sub(v_, o.v_)); }
  FieldElement operator*(const FieldElement& o) const { return make(same(o).mul(v_, o.v_)); }
  FieldElement operator/(const FieldElement& o) const { return make(same(o).div(v_, o.v_)); }
  FieldElement operator-() const { return make(field().neg(v_)); }
  FieldElement inverse() const { return make(field().inv(v_)); }
  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldElement make(Word v) const { return FieldElement(*f_, v); }
  const FiniteField& same(const FieldElement& o) const;
  const FiniteField* f_;
  Word v_;
};

/// (norm, trace) of an element of GF(q^2), both as elements of GF(q).
std::pair<FieldElement, FieldElement> norm_trace(const FieldElement& e);

}  // namespace rghw

#endif
