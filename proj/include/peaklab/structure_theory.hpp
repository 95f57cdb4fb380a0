#pragma once
// Structure theory of the descent and peak algebras: the principal left
// ideals generated by the Lie-series idempotents, the Cartan invariants,
// and the radical filtration of the peak algebra.
//
// For the default Lie series gamma and a composition q of n, gamma_q is the
// image of the shifted-concatenation product gamma^q under right
// multiplication by Xi^q; gamma_q depends only on the multiset of parts up
// to a positive rational factor, and { gamma_q : q a partition } is a basis
// of the descent algebra.  For each partition p the left ideal
//
//      Lambda^p = D_n gamma_p = span{ gamma_q : q a rearrangement of p }
//
// gives a direct decomposition D_n = (+)_p Lambda^p, and restricting to odd
// partitions decomposes the peak algebra: P_n = (+)_{p odd} Lambda^p.
//
// The radical of the peak algebra has three equivalent descriptions, all
// computed here: the span of the differences tilde-Xi^q - tilde-Xi^{q'} over
// rearrangements q' of q (odd q), the kernel of the character map c
// restricted to P_n, and the span of the differences gamma_q - gamma_p over
// odd partitions p and their rearrangements q.  Its nilpotency index is 1
// for n <= 3 and floor((n-1)/2) + [n even] in general, i.e. (n-1)/2 for odd
// n >= 5 and n/2 for even n >= 4.
//
// The Cartan invariant c_{qp} = dim(gamma_q D_n gamma_p) counts the
// rearrangements r of q whose Lyndon factor degree multiset is a
// rearrangement of p; rows and columns are indexed by odd partitions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peaklab/descent_peak.hpp"

namespace peaklab {

// Degree sequence of the Lyndon factorisation of q read as a word (Duval's
// algorithm; factors are weakly decreasing lexicographically).
Composition lyndon_sum_composition(const Composition& q);

// dim(gamma_q D_n gamma_p) by brute force in delta coordinates.
int cartan_dim_brute(const DnContext& ctx, const Partition& q,
                     const Partition& p);
// #{ rearrangements r of q : lyndon_sum_composition(r) is a rearrangement
//    of p }.
int cartan_count_lyndon(const Partition& q, const Partition& p);

// Cartan matrix of the peak algebra via the Lyndon count; rows and columns
// are indexed by odd_partitions(n) (largest-first order).
std::vector<std::vector<int>> cartan_matrix(int n);

// Delta coordinates of a basis of Lambda^p = span{gamma_q : q ~ p}.
std::vector<std::vector<Rational>> lambda_ideal_basis(const DnContext& ctx,
                                                      const Partition& p);

// Radical of the peak algebra, as pi coordinates (three routes).
std::vector<std::vector<Rational>> radical_tilde_xi_differences(
    const DnContext& ctx);
std::vector<std::vector<Rational>> radical_character_kernel(
    const DnContext& ctx);
std::vector<std::vector<Rational>> radical_gamma_differences(
    const DnContext& ctx);

// Radical of the descent algebra in delta coordinates: the span of the
// differences Xi^q - Xi^{q'} over rearrangements (the kernel of the
// character map on D_n).
std::vector<std::vector<Rational>> radical_descent_differences(
    const DnContext& ctx);

// Dimensions of the ideal powers J, J^2, ... of the span J of the given
// vectors (pi coordinates), listed until (exclusive of) the first power
// that vanishes.
std::vector<int> radical_power_dims_peak(
    const DnContext& ctx, const std::vector<std::vector<Rational>>& j);

// Descending chain M, JM, J(JM), ... in delta coordinates, where J spans an
// ideal and M a left module; each entry is an echelon basis, and the chain
// stops with the first zero member omitted.  Entry 0 is M itself.
std::vector<std::vector<std::vector<Rational>>> module_radical_chain(
    const DnContext& ctx, const std::vector<std::vector<Rational>>& j,
    const std::vector<std::vector<Rational>>& m);

// Basis of the intersection of the spans of two families of dense vectors.
std::vector<std::vector<Rational>> span_intersection(
    std::size_t dim, const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b);

// Nilpotency index of Rad P_n: the least N with (Rad P_n)^N = 0.
int peak_radical_nilpotency_index(const DnContext& ctx);
// The closed form: 1 for n <= 3, else (n-1)/2 for odd n, n/2 for even n.
int peak_radical_nilpotency_formula(int n);

}  // namespace peaklab
