#include "doctest.h"

#include "peaklab/element.hpp"

#include <stdexcept>

using namespace peaklab;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
using Elt = Element<Rational>;
}  // namespace

TEST_SUITE_BEGIN("group_algebra");

TEST_CASE("element arithmetic erases zeros") {
  Elt a = Elt::basis(P({2, 1})) * Rational(3);
  Elt b = Elt::basis(P({2, 1})) * Rational(-3);
  CHECK((a + b).is_zero());
  CHECK(a.coefficient(P({2, 1})) == 3);
  CHECK(a.coefficient(P({1, 2})) == 0);
  Elt c = a + Elt::basis(P({1, 2, 3}));
  CHECK(c.term_count() == 2);
  CHECK(c.degrees() == std::vector<int>{2, 3});
  CHECK((c - c).is_zero());
  CHECK((c * Rational(0)).is_zero());
  CHECK(c.homogeneous_part(3) == Elt::basis(P({1, 2, 3})));
}

TEST_CASE("two-block shuffle sums") {
  Elt xi21 = two_block_shuffle_sum<Rational>(2, 1);
  Elt expect = Elt::basis(P({1, 2, 3})) + Elt::basis(P({1, 3, 2})) +
               Elt::basis(P({2, 3, 1}));
  CHECK(xi21 == expect);
  Elt xi32 = two_block_shuffle_sum<Rational>(3, 2);
  CHECK(xi32.term_count() == 10);
  for (const auto& [w, c] : xi32.degree_part(5)) {
    CHECK(c == 1);
    CHECK((descent_set(w) & ~parse_subset_key("3")) == 0u);
  }
}

TEST_CASE("inner product is the degree-wise group-algebra product") {
  CHECK(inner(Elt::basis(P({2, 1, 3})), Elt::basis(P({1, 3, 2}))) ==
        Elt::basis(P({3, 1, 2})));
  // Terms of different degrees multiply to zero.
  CHECK(inner(Elt::basis(P({1, 2})), Elt::basis(P({1}))).is_zero());
  // Identity acts as unit degree-wise.
  Elt mixed = Elt::basis(P({2, 1})) + Elt::basis(P({3, 1, 2}));
  Elt ids = Elt::basis(Permutation::identity(2)) +
            Elt::basis(Permutation::identity(3));
  CHECK(inner(mixed, ids) == mixed);
  CHECK(inner(ids, mixed) == mixed);
}

TEST_CASE("outer product: frozen example and unit") {
  // (21) . (1) = 213 + 312 + 321.
  Elt prod = outer(Elt::basis(P({2, 1})), Elt::basis(P({1})));
  Elt expect = Elt::basis(P({2, 1, 3})) + Elt::basis(P({3, 1, 2})) +
               Elt::basis(P({3, 2, 1}));
  CHECK(prod == expect);
  // The empty permutation is the unit.
  Elt a = Elt::basis(P({2, 1})) * Rational(5) + Elt::basis(P({1}));
  CHECK(outer(Elt::one(), a) == a);
  CHECK(outer(a, Elt::one()) == a);
}

TEST_CASE("outer product is associative") {
  Elt a = Elt::basis(P({2, 1}));
  Elt b = Elt::basis(P({1})) + Elt::basis(P({1, 2})) * Rational(2);
  Elt c = Elt::basis(P({2, 1}));
  CHECK(outer(outer(a, b), c) == outer(a, outer(b, c)));
  // Identities of each degree multiply to the two-block shuffle sum.
  CHECK(outer(Elt::basis(Permutation::identity(2)),
              Elt::basis(Permutation::identity(2))) ==
        two_block_shuffle_sum<Rational>(2, 2));
}

TEST_CASE("shifted concatenation product") {
  Elt h = hash_prod(Elt::basis(P({2, 1})), Elt::basis(P({1, 3, 2})));
  CHECK(h == Elt::basis(P({2, 1, 3, 5, 4})));
  CHECK(hash_prod(Elt::one(), h) == h);
}

TEST_CASE("degree cap guards whole-group enumeration") {
  CHECK_THROWS_AS(two_block_shuffle_sum<Rational>(8, 8), std::invalid_argument);
}

TEST_SUITE_END();
