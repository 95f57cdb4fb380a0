#include <vector>

#include "doctest.h"
#include "peaklab/free_lie.hpp"
#include "peaklab/lie_idempotents.hpp"

using namespace peaklab;

namespace {

Word W(std::initializer_list<int> letters) { return Word(letters); }

FreeElt word_elt(std::initializer_list<int> letters) {
  FreeElt x;
  x.emplace(Word(letters), Rational(1));
  return x;
}

FreeElt scaled(FreeElt x, const Rational& s) {
  for (auto& [w, c] : x) c *= s;
  return x;
}

// Relabels the letters of every word by adding a constant offset (an
// injective alphabet substitution).
FreeElt shift_letters(const FreeElt& x, int offset) {
  FreeElt out;
  for (const auto& [w, c] : x) {
    Word v = w;
    for (int& letter : v) letter += offset;
    free_add(out, v, c);
  }
  return out;
}

// The default Lie series member of degree m as a group-algebra element:
// omega_m in even degree, half the peak analogue in odd degree.
Element<Rational> gamma_elem_of_degree(int m) {
  if (m % 2 == 0) return omega_elem(m);
  const DnContext& ctx = DnContext::get(m);
  auto coords = peak_dynkin_pi_coords(ctx);
  for (auto& c : coords) c /= Rational(2);
  return pi_coords_to_elem(ctx, coords);
}

}  // namespace

TEST_SUITE_BEGIN("free_lie");

TEST_CASE("place permutation action") {
  // (pi w)_i = w_{i pi}: positions are permuted, letters kept.
  Permutation pi({2, 3, 1});
  CHECK(act(pi, W({7, 8, 9})) == W({8, 9, 7}));
  CHECK_THROWS_AS(act(pi, W({1, 2})), std::invalid_argument);

  // Compatibility with left-to-right composition: (ab)w = a(bw), on a
  // combination of words with repeated letters.
  FreeElt x = word_elt({1, 1, 2});
  free_add(x, W({3, 1, 2}), Rational(2, 3));
  for (const Permutation& a : all_permutations(3))
    for (const Permutation& b : all_permutations(3))
      CHECK(act(compose(a, b), x) == act(a, act(b, x)));
}

TEST_CASE("iota embedding is equivariant and injective") {
  for (int n = 1; n <= 4; ++n) {
    Word id_word(n);
    for (int i = 0; i < n; ++i) id_word[i] = i + 1;
    for (const Permutation& s : all_permutations(n)) {
      // iota(s) is the action of s on the identity word.
      CHECK(iota_word(s) == act(s, id_word));
      for (const Permutation& p : all_permutations(n))
        CHECK(iota_word(compose(p, s)) == act(p, iota_word(s)));
    }
  }
  // Linear injectivity: distinct permutations map to distinct words, so an
  // element is recoverable from its image.
  Element<Rational> a = xi_elem(Composition{2, 1});
  a -= xi_elem(Composition{3}) * Rational(5);
  CHECK(iota_elt(a).size() == a.term_count());
}

TEST_CASE("left-normed brackets and the Dynkin criterion") {
  // [1,2] = 12 - 21.
  FreeElt b2 = bracket(W({1, 2}));
  CHECK(b2.size() == 2);
  CHECK(b2.at(W({1, 2})) == 1);
  CHECK(b2.at(W({2, 1})) == -1);
  // [[1,2],3] = 123 - 213 - 312 + 321 as words.
  FreeElt b3 = bracket(W({1, 2, 3}));
  CHECK(b3.size() == 4);
  CHECK(b3.at(W({1, 2, 3})) == 1);
  CHECK(b3.at(W({2, 1, 3})) == -1);
  CHECK(b3.at(W({3, 1, 2})) == -1);
  CHECK(b3.at(W({3, 2, 1})) == 1);

  for (int m = 1; m <= 6; ++m) {
    Word u(m);
    for (int i = 0; i < m; ++i) u[i] = i + 1;
    // omega_m embeds to the left-normed bracket of the identity word ...
    CHECK(iota_elt(omega_elem(m)) == bracket(u));
    // ... which passes the Dynkin criterion.
    CHECK(is_lie_element(bracket(u), m));
  }
  // omega sends any multilinear word to the left-normed bracket of its
  // letters (in word order).
  for (int m : {3, 4})
    for (const Permutation& s : all_permutations(m)) {
      FreeElt w;
      w.emplace(iota_word(s), Rational(1));
      CHECK(act(omega_elem(m), w) == bracket(iota_word(s)));
    }
  // A bare word of degree >= 2 is not a Lie element.
  CHECK_FALSE(is_lie_element(word_elt({1, 2}), 2));
  CHECK(is_lie_element(FreeElt{}, 3));
}

TEST_CASE("block monomials, frozen shapes") {
  // Shape (2,1): [1,2] 3 = 123 - 213.
  FreeElt p21 = lie_monomial_product({2, 1});
  CHECK(p21.size() == 2);
  CHECK(p21.at(W({1, 2, 3})) == 1);
  CHECK(p21.at(W({2, 1, 3})) == -1);
  // ... and it is the image of omega_2 # omega_1 under iota (transfer in
  // its smallest case).
  CHECK(iota_elt(hash_prod(omega_elem(2), omega_elem(1))) == p21);
  CHECK(transfer_monomial_product({2, 1}) == p21);

  // Shape (1,2): 1 [2,3] = 123 - 132.
  FreeElt p12 = lie_monomial_product({1, 2});
  CHECK(p12.size() == 2);
  CHECK(p12.at(W({1, 2, 3})) == 1);
  CHECK(p12.at(W({1, 3, 2})) == -1);

  // Factor-permuted products: blocks of (2,1) in order 2,1: 3 [1,2].
  FreeElt swapped = permuted_monomial_product({2, 1}, Permutation({2, 1}));
  CHECK(swapped.size() == 2);
  CHECK(swapped.at(W({3, 1, 2})) == 1);
  CHECK(swapped.at(W({3, 2, 1})) == -1);
}

TEST_CASE("Xi action regroups Lie monomial products") {
  // Xi^r (P_1 ... P_k) = sum over ordered set partitions of the factors
  // with degree sums r of the regrouped products, for the canonical block
  // brackets, all r, q with n <= 5.
  for (int n = 1; n <= 5; ++n)
    for (const Composition& q : compositions(n)) {
      FreeElt monomials = lie_monomial_product(q);
      for (const Composition& r : compositions(n))
        CHECK(act(xi_elem(r), monomials) == xi_action_rhs(r, q));
    }

  // The identity is about arbitrary Lie monomial factors: repeat with
  // reversed-letter brackets and with the transfer factors at n = 4, 5.
  for (int n : {4, 5})
    for (const Composition& q : compositions(n)) {
      std::vector<FreeElt> reversed;
      std::vector<FreeElt> transfer;
      FreeElt prod_rev;
      prod_rev.emplace(Word{}, Rational(1));
      int offset = 0;
      for (int part : q) {
        Word block(part);
        for (int i = 0; i < part; ++i) block[i] = offset + part - i;
        reversed.push_back(bracket(block));
        prod_rev = free_concat(prod_rev, reversed.back());
        transfer.push_back(
            shift_letters(iota_elt(gamma_elem_of_degree(part)), offset));
        offset += part;
      }
      FreeElt prod_transfer = transfer_monomial_product(q);
      for (const Composition& r : compositions(n)) {
        CHECK(act(xi_elem(r), prod_rev) == xi_action_rhs(r, reversed, q));
        CHECK(act(xi_elem(r), prod_transfer) ==
              xi_action_rhs(r, transfer, q));
      }
    }
}

TEST_CASE("even-first Lie monomial products are annihilated") {
  // tilde-Xi^n kills P_1 ... P_k whenever the first degree q_1 is even,
  // for the canonical brackets (n <= 6) and the transfer monomials
  // (n <= 6); in odd-first shapes it does not in general.
  for (int n = 2; n <= 6; ++n) {
    Element<Rational> txi = tilde_xi_elem(n);
    bool some_odd_first_survives = false;
    for (const Composition& q : compositions(n)) {
      if (q[0] % 2 == 0) {
        CHECK(act(txi, lie_monomial_product(q)).empty());
        CHECK(act(txi, transfer_monomial_product(q)).empty());
      } else if (!act(txi, lie_monomial_product(q)).empty()) {
        some_odd_first_survives = true;
      }
    }
    CHECK(some_odd_first_survives);
  }
  // Non-canonical factors are killed as well.
  Element<Rational> txi4 = tilde_xi_elem(4);
  CHECK(act(txi4, free_concat(bracket(W({2, 1})), bracket(W({4, 3})))).empty());
  CHECK(act(txi4, free_concat(bracket(W({3, 1})), bracket(W({4, 2})))).empty());
}

TEST_CASE("transfer: iota(gamma^q) is a product of Lie monomials") {
  // Per block: iota(gamma_m) passes the Dynkin criterion.
  for (int m = 1; m <= 6; ++m)
    CHECK(is_lie_element(iota_elt(gamma_elem_of_degree(m)), m));
  // The embedded series product is the concatenation of the shifted block
  // images, hence a product of Lie monomials of shape q.
  for (int n = 1; n <= 6; ++n)
    for (const Composition& q : compositions(n)) {
      FreeElt expected;
      expected.emplace(Word{}, Rational(1));
      int offset = 0;
      for (int part : q) {
        expected = free_concat(
            expected,
            shift_letters(iota_elt(gamma_elem_of_degree(part)), offset));
        offset += part;
      }
      CHECK(transfer_monomial_product(q) == expected);
    }
}

TEST_CASE("membership by action matches the class-constancy criteria") {
  for (int n = 2; n <= 5; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto check_elem = [&](const Element<Rational>& e) {
      bool in_descent = elem_to_delta_coords(ctx, e).has_value();
      CHECK(descent_membership_by_action(e, n) == in_descent);
      bool in_peak = elem_to_pi_coords(ctx, e).has_value();
      CHECK(peak_membership_by_action(e, n) == in_peak);
    };

    // The full Xi basis (descent members; peak membership varies), the
    // odd tilde-Xi elements (peak members), and mixed sums.
    std::vector<Element<Rational>> xs;
    for (const Composition& q : compositions(n)) xs.push_back(xi_elem(q));
    for (std::size_t i = 0; i < xs.size(); ++i) check_elem(xs[i]);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      Element<Rational> sum = xs[i];
      sum += xs[i + 1] * Rational(3);
      check_elem(sum);
    }
    for (const Composition& q : odd_compositions(n)) {
      Element<Rational> t = tilde_xi_elem(q);
      CHECK(peak_membership_by_action(t, n));
      check_elem(t);
    }

    // Elements outside the descent algebra fail (single permutations whose
    // descent class is not a singleton), and the identity permutation is a
    // descent member that is not a peak member.
    if (n <= 4) {
      for (const Permutation& pi : all_permutations(n))
        check_elem(Element<Rational>::basis(pi));
    } else {
      check_elem(Element<Rational>::basis(Permutation({2, 1, 3, 4, 5})));
      check_elem(Element<Rational>::basis(Permutation::identity(5)));
    }
  }
}

TEST_CASE("annihilating gamma_q detects peak members inside the descent algebra") {
  // For a descent element, membership in the peak algebra is equivalent to
  // killing every gamma_q with even q_1 in the group algebra itself.
  for (int n = 2; n <= 5; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<std::vector<Rational>> gammas;
    for (const Composition& q : compositions(n))
      if (q[0] % 2 == 0) gammas.push_back(gamma_q_delta_coords(ctx, q));

    for (const Composition& q : compositions(n)) {
      std::vector<Rational> phi(ctx.num_subsets(), Rational(0));
      // Xi^q in delta coordinates.
      XiMap xm;
      xm.emplace(q, Rational(1));
      phi = xi_map_to_delta_coords_t<Rational>(ctx, xm);
      bool kills_all = true;
      for (const auto& g : gammas) {
        std::vector<Rational> prod = ctx.delta_mult(phi, g);
        for (const Rational& c : prod)
          if (c != 0) kills_all = false;
      }
      bool in_peak = elem_to_pi_coords(ctx, xi_elem(q)).has_value();
      CHECK(kills_all == in_peak);
    }
  }
}

TEST_SUITE_END();
