#pragma once
// The place-permutation action on words and the free-Lie-algebra membership
// criteria for the descent and peak algebras.
//
// Words over the alphabet {1, 2, ...} are integer vectors; an element of the
// free associative algebra is a finite rational combination of words, here
// always homogeneous (all words of one length).  A permutation pi in S_n
// acts on words of length n by place permutation,
//
//      (pi w)_i = w_{i pi},
//
// extended bilinearly to the group algebra; the action is compatible with
// the left-to-right composition used throughout: (ab)w = a(bw).  Mapping pi
// to the word (1pi, 2pi, ..., npi) embeds the group algebra equivariantly
// into words (iota); equivalently, iota(a) is the action of a on the
// identity word 12...n.
//
// For a composition q of n, splitting the letters 1..n into consecutive
// blocks of sizes q_i and bracketing each block left-normed,
// [[...[[b_1, b_2], b_3]...], b_m], gives Lie monomials P_i whose
// concatenation P_1...P_k is the canonical test vector of shape q.  The
// classical facts verified by the test suite:
//
//  * the Dynkin criterion: an element of degree m is a Lie element iff
//    omega_m acts on it as multiplication by m, and omega_m sends any
//    multilinear word to the left-normed bracket of its letters;
//  * the action of Xi^r on P_1...P_k is the sum of the products P_{S_1}...
//    P_{S_l} over ordered set partitions (S_1,...,S_l) of [k] with block
//    degree sums r_1,...,r_l;
//  * a group-algebra element lies in the descent algebra iff it maps each
//    P_1...P_k into the span of the factor-permuted products
//    P_{1 tau}...P_{k tau}, tau in S_k;
//  * tilde-Xi^n annihilates P_1...P_k whenever q_1 is even, and an element
//    of the descent algebra lies in the peak algebra iff it annihilates all
//    such products ("even-first" test vectors);
//  * transfer: iota(gamma^q) is itself a product of Lie monomials of shape
//    q, where gamma^q is the shifted-concatenation product of the members
//    of a Lie series.

#include <map>
#include <vector>

#include "peaklab/descent_peak.hpp"

namespace peaklab {

using Word = std::vector<int>;
using FreeElt = std::map<Word, Rational>;

void free_add(FreeElt& x, const Word& w, const Rational& c);

// Place permutation on a word / on a combination of words of length n(pi).
Word act(const Permutation& pi, const Word& w);
FreeElt act(const Permutation& pi, const FreeElt& x);
// Action of a homogeneous group-algebra element (degree must match the word
// length).
FreeElt act(const Element<Rational>& a, const FreeElt& x);

// The equivariant embedding pi -> (1pi, ..., npi).
Word iota_word(const Permutation& pi);
FreeElt iota_elt(const Element<Rational>& a);

// Concatenation product.
FreeElt free_concat(const FreeElt& a, const FreeElt& b);

// Left-normed bracket [[w_1, w_2], ..., w_m], expanded into words.
FreeElt bracket(const Word& w);

// P_1...P_k for the consecutive blocks of 1..n of sizes q_1, ..., q_k.
FreeElt lie_monomial_product(const Composition& q);
// The blocks bracketed in the order prescribed by tau in S_k:
// P_{1 tau} ... P_{k tau}.
FreeElt permuted_monomial_product(const Composition& q, const Permutation& tau);

// iota(gamma^q) for the default Lie series: a product of Lie monomials of
// shape q (transfer).
FreeElt transfer_monomial_product(const Composition& q);

// Dynkin criterion for membership in the free Lie algebra.
bool is_lie_element(const FreeElt& x, int m);

// Right-hand side of the Xi^r action on a product of Lie monomials
// P_1...P_k of degrees q_1, ..., q_k: the sum over ordered set partitions
// (S_1, ..., S_l) of the factor indices with degree sums r_1, ..., r_l of
// the regrouped products P_{S_1}...P_{S_l} (ascending index order within
// each group).
FreeElt xi_action_rhs(const Composition& r, const std::vector<FreeElt>& factors,
                      const Composition& q);
// The same with the canonical block brackets as factors.
FreeElt xi_action_rhs(const Composition& r, const Composition& q);

// Membership criteria via the action on Lie monomials.
bool descent_membership_by_action(const Element<Rational>& a, int n);
bool peak_membership_by_action(const Element<Rational>& a, int n);

}  // namespace peaklab
