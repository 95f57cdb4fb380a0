#pragma once

// Compositions, partitions, subsets of [n-1], and standard Young tableaux.
//
// Conventions used throughout the library:
//   * A composition q of n is a finite sequence of positive integers with sum
//     n, stored as std::vector<int>.  A partition is a weakly decreasing
//     composition.
//   * A subset D of [n-1] = {1, ..., n-1} is a bitmask (Subset): bit i-1 set
//     iff i is in D.  The descent set of a composition q = q_1...q_k is
//     D(q) = {q_1, q_1+q_2, ...} (partial sums except the last); this is a
//     bijection between compositions of n and subsets of [n-1].
//   * q refines r (written q |= r) iff D(r) is contained in D(q); then q cuts
//     into consecutive blocks summing to the parts of r.
//   * Odd compositions of n (all parts odd) biject with "peak sets": subsets
//     P of {2, ..., n-1} with no two adjacent elements.  The compressed form
//     of an odd composition q with parts q_i = 2 m_i + 1 is
//     tilde(q) = 2^{m_1}.1.2^{m_2}.1..., a composition of n, and
//     peak_set_of_odd(q) = ([n-1] \ D(tilde(q))) + 1, with inverse
//     D(q) = [n-1] \ (P u (P-1)).
//
// String keys: compositions, partitions and subsets print as dot-joined
// decimal parts / elements ("3.1.1", "2.4"); the empty one prints as "".

#include <string>
#include <vector>

namespace peaklab {

using Composition = std::vector<int>;
using Partition = std::vector<int>;
using Subset = unsigned;

// --- compositions -----------------------------------------------------------

// All compositions of n in lexicographic order on part sequences
// (for n = 3: 1.1.1, 1.2, 2.1, 3).  compositions(0) = { () }.
std::vector<Composition> compositions(int n);

// All compositions of n with every part odd, lexicographic order.
std::vector<Composition> odd_compositions(int n);

// All distinct rearrangements of q, lexicographic order.
std::vector<Composition> rearrangements(const Composition& q);

int comp_sum(const Composition& q);
int comp_length(const Composition& q);
bool is_composition(const Composition& q);
bool is_odd_composition(const Composition& q);

// Concatenation r.q.
Composition concat(const Composition& r, const Composition& q);

// Descent set of a composition (partial sums except the last).
Subset d_of(const Composition& q);

// Inverse of d_of: the composition of n with descent set D.
Composition comp_of(Subset D, int n);

// q refines r:  D(r) subset of D(q).  Throws if the sums differ.
bool refines(const Composition& q, const Composition& r);

// When q refines r, the consecutive blocks of q summing to r_1, ..., r_l.
std::vector<Composition> refinement_blocks(const Composition& q,
                                           const Composition& r);

// q and r are rearrangements of each other.
bool same_multiset(const Composition& q, const Composition& r);

// Some rearrangement of q refines r (the transitive "associated refinement"
// order on compositions up to rearrangement).
bool assoc_refines(const Composition& q, const Composition& r);

// --- odd compositions and peak sets -----------------------------------------

// Compressed form tilde(q) of an odd composition (see header comment).
Composition tilde_comp(const Composition& q);

// The peak set attached to an odd composition of n, and its inverse.
Subset peak_set_of_odd(const Composition& q);
Composition odd_comp_of_peak(Subset P, int n);

// P(D) = { i in D : i >= 2 and i-1 not in D }: the peak set of any
// permutation whose descent set is D.
Subset p_of_descents(Subset D, int n);

// P is a subset of {2, ..., n-1} with no two adjacent elements.
bool is_peak_set(Subset P, int n);

// All subsets of [n-1] (mask order 0, 1, 2, ...), and all peak sets.
std::vector<Subset> all_subsets(int n);
std::vector<Subset> peak_sets(int n);

int subset_sum(Subset D);
int subset_size(Subset D);

// (D + z) intersected with [n-1].
Subset shift_subset(Subset D, int z, int n);

// Number of peak sets in {2, ..., n-1}: 1, 1, 1, 2, 3, 5, 8, 13, 21 for
// n = 0, ..., 8 (the Fibonacci numbers).  Equals dim P_n.
long long fibonacci_dim(int n);

// --- partitions --------------------------------------------------------------

// All partitions of n, largest-first order ([n] first, [1^n] last).
std::vector<Partition> partitions(int n);
std::vector<Partition> odd_partitions(int n);

bool is_partition(const Partition& p);
Partition sorted_partition(const Composition& q);

// Order of the centralizer of a permutation of cycle type p (with a_i parts
// equal to i):  prod_i a_i! * i^{a_i}.  Written q? in the library's notation;
// defined for any composition via its sorted partition.
long long centralizer_order(const Composition& q);

// Moebius function of a positive integer.
int moebius(int m);

// sign(p) = moebius(p_1) if all parts of p are equal, else 0.
int sign_of_partition(const Partition& p);

// --- Lyndon factorisation -----------------------------------------------------

// w is strictly smaller (lexicographically, prefix-first) than every proper
// cyclic rotation of itself.
bool is_lyndon(const Composition& w);

// Duval factorisation: w = u_1 u_2 ... u_k with every u_i Lyndon and
// u_1 >= u_2 >= ... >= u_k lexicographically.
std::vector<Composition> lyndon_factorization(const Composition& w);

// Lyndon sum composition: the sums of the Lyndon factors of q, in order.
Composition lsc(const Composition& q);

// --- standard Young tableaux ---------------------------------------------------

// Rows are listed bottom-up: rows[0] is the longest (bottom) row, row lengths
// weakly decrease upwards.  Rows increase strictly left to right, columns
// strictly bottom to top.  Entries are 1..n.
struct StandardTableau {
  std::vector<std::vector<int>> rows;
  int size() const;
  auto operator<=>(const StandardTableau&) const = default;
};

// All standard Young tableaux with n cells (all shapes).
std::vector<StandardTableau> standard_tableaux(int n);

// Number of columns of odd length.
int odd_column_count(const StandardTableau& t);

// Descents of t: the i in [n-1] such that i+1 sits in a strictly higher row
// than i.  Peaks of t: the i with 2 <= i <= n-1, i a descent, i-1 not.
Subset tableau_descents(const StandardTableau& t);
Subset tableau_peaks(const StandardTableau& t);

// --- string keys ----------------------------------------------------------------

std::string comp_key(const Composition& q);       // "3.1.1"; empty -> ""
Composition parse_comp_key(const std::string& s); // throws on junk
std::string subset_key(Subset D);                 // "2.4"; empty -> ""
Subset parse_subset_key(const std::string& s);

long long binom(int n, int k);

}  // namespace peaklab
