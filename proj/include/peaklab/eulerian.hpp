#pragma once
// Eulerian subalgebras and the orthogonal idempotent decompositions they
// carry.
//
// Grouping basis elements by the number of parts (or peaks) gives
//
//   Delta^{n,k} = sum over l(q) = k of Delta^q,     Xi^{n,k} likewise,
//   Pi^{n,k}    = sum over |P| = k of Pi^P,         Gamma^{n,k} likewise.
//
// The span E_n of the Delta^{n,k} is a commutative subalgebra of dimension n
// whose orthogonal idempotent basis is formed by the elements
//
//   rho_{n,k} = (1/k!) sum over l(q) = k of rho_{q_1} * ... * rho_{q_k}
//
// (external products of canonical idempotents); they sum to the identity.
// Right multiplication by tilde-Xi^n produces rho-tilde_{n,k}, which vanishes
// unless k has the parity of n; the scaled elements (1/2^k) rho-tilde_{n,k}
// form an orthogonal idempotent basis of the peak Eulerian algebra
// E-tilde_n = span of the Pi^{n,k}, a commutative subalgebra of the peak
// algebra of dimension floor((n+1)/2) generated by the powers of Pi^0.
// Their sum e is an idempotent with D_n e = P_n, exhibiting the peak algebra
// as a principal left ideal.
//
// Transition formulas between the graded sums:
//
//   Gamma^{n,k} = sum_{j >= k} binom(j,k) Pi^{n,j}
//   Pi^{n,k}    = sum_{j >= k} (-1)^{j-k} binom(j,k) Gamma^{n,j}
//   Xi^{n,k} tilde-Xi^n = 2^k sum_j (-1)^j binom(n-1-2j, k-1) Gamma^{n,j}.

#include <vector>

#include "peaklab/descent_peak.hpp"

namespace peaklab {

// Graded sums, as coordinate vectors (Delta/Xi coordinates are indexed by
// subsets, Pi/Gamma coordinates by peak sets).
std::vector<Rational> delta_nk_coords(const DnContext& ctx, int k);
std::vector<Rational> xi_nk_delta_coords(const DnContext& ctx, int k);
std::vector<Rational> pi_nk_coords(const DnContext& ctx, int k);
std::vector<Rational> gamma_nk_pi_coords(const DnContext& ctx, int k);

// Number of nonvanishing Pi^{n,k}, the dimension of E-tilde_n.
int peak_eulerian_dim(int n);

// The Eulerian idempotents and their peak shadows.
XiMap rho_q_xi_map(const Composition& q);  // rho_{q_1} * ... * rho_{q_k}
XiMap rho_nk_xi_map(int n, int k);
std::vector<Rational> rho_nk_delta_coords(const DnContext& ctx, int k);
std::vector<Rational> rho_tilde_nk_pi_coords(const DnContext& ctx, int k);

// e = sum_k (1/2^k) rho-tilde_{n,k}, the idempotent generator of the peak
// algebra as a left ideal.
std::vector<Rational> peak_projector_pi_coords(const DnContext& ctx);

// Xi^{n,k} tilde-Xi^n, by the product route and by the binomial formula.
std::vector<Rational> tilde_xi_nk_pi_coords(const DnContext& ctx, int k);
std::vector<Rational> tilde_xi_nk_formula_pi_coords(const DnContext& ctx, int k);

// Structure constants of E-tilde_n on the Pi^{n,k} basis: entry [j][k][m] is
// the coefficient of Pi^{n,m} in Pi^{n,j} Pi^{n,k} (indices 0-based, sizes
// peak_eulerian_dim(n)).
std::vector<std::vector<std::vector<Rational>>> peak_eulerian_table(
    const DnContext& ctx);

}  // namespace peaklab
