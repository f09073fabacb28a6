#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rghw/field.hpp"

using namespace rghw;

namespace {
const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
}

TEST_CASE("field axioms") {
  for (int q : kOrders) {
    const FiniteField& f = FiniteField::get_order(q);
    CAPTURE(q);
    REQUIRE(static_cast<int>(f.order()) == q);
    for (Word a = 0; a < f.order(); ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Word b = 0; b < f.order(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Word c = 0; c < f.order(); ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative generator has full order") {
  for (int q : kOrders) {
    const FiniteField& f = FiniteField::get_order(q);
    Word g = f.generator();
    Word cur = 1;
    int ord = 0;
    do {
      cur = f.mul(cur, g);
      ++ord;
    } while (cur != 1);
    CHECK(ord == q - 1);
  }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
  for (int q : kOrders) {
    const FiniteField& f = FiniteField::get_order(q);
    int fixed = 0;
    for (Word a = 0; a < f.order(); ++a) {
      // x -> x^p is additive and multiplicative
      for (Word b = 0; b < f.order(); ++b)
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      if (f.frobenius(a) == a) ++fixed;
      // k-fold frobenius is the identity
      Word it = a;
      for (int i = 0; i < f.degree(); ++i) it = f.frobenius(it);
      CHECK(it == a);
    }
    CHECK(fixed == f.characteristic());
  }
}

TEST_CASE("norm and trace fibers for quadratic extensions") {
  for (int q0 : {2, 3, 4, 5}) {
    const FiniteField& f = FiniteField::get_order(q0 * q0);
    REQUIRE(f.has_quadratic_subfield());
    const FiniteField& sub = f.quadratic_subfield();
    REQUIRE(static_cast<int>(sub.order()) == q0);

    // each trace value is hit exactly q0 times; norm 1 exactly q0+1 times
    std::vector<int> trace_count(q0, 0);
    int norm_one = 0;
    for (Word a = 0; a < f.order(); ++a) {
      ++trace_count[f.trace(a)];
      if (f.norm(a) == 1) ++norm_one;
    }
    for (int eps = 0; eps < q0; ++eps) CHECK(trace_count[eps] == q0);
    CHECK(norm_one == q0 + 1);

    // norm multiplicative, trace additive (values in the subfield)
    for (Word a = 0; a < f.order(); ++a)
      for (Word b = 0; b < f.order(); ++b) {
        CHECK(f.norm(f.mul(a, b)) == sub.mul(f.norm(a), f.norm(b)));
        CHECK(f.trace(f.add(a, b)) == sub.add(f.trace(a), f.trace(b)));
      }

    // embedding is a field homomorphism
    for (Word a = 0; a < sub.order(); ++a)
      for (Word b = 0; b < sub.order(); ++b) {
        CHECK(f.embed(sub.add(a, b)) == f.add(f.embed(a), f.embed(b)));
        CHECK(f.embed(sub.mul(a, b)) == f.mul(f.embed(a), f.embed(b)));
        CHECK(f.unembed(f.embed(a)) == a);
      }
  }
}

TEST_CASE("parse and interning") {
  CHECK(&FiniteField::parse("2^4") == &FiniteField::get_order(16));
  CHECK(&FiniteField::parse("16") == &FiniteField::get(2, 4));
  CHECK(&FiniteField::get(3, 2) == &FiniteField::get_order(9));
  CHECK_THROWS_AS(FiniteField::parse("6"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::get(4, 1), std::invalid_argument);
}

TEST_CASE("field elements reject cross-field arithmetic") {
  FieldElement a(FiniteField::get_order(4), 2);
  FieldElement b(FiniteField::get_order(8), 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  FieldElement c(FiniteField::get_order(4), 3);
  CHECK((a * c).value() == FiniteField::get_order(4).mul(2, 3));
}
