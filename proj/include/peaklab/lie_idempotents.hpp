#pragma once
// Lie idempotents in the descent algebra and their shadows in the peak
// algebra.
//
// An element a of degree n is certified here as a Lie idempotent by the pair
// of identities
//
//      omega_n * a = n a      and      a * omega_n = omega_n,
//
// where omega_n is the Dynkin element; together they force a * a = a, and
// any two Lie idempotents e, f satisfy e * f = f.  The classical examples
// are (1/n) omega_n, the canonical idempotent rho_n, and the Klyachko
// element (1/n) kappa_n(eps) over the cyclotomic field of order n.
//
// Right multiplication by tilde-Xi^n sends a Lie idempotent a to
// a-tilde = a * tilde-Xi^n, and for odd n the element (1/2) a-tilde is again
// a Lie idempotent lying in the peak algebra ("peak Lie idempotent"); for
// even n the peak algebra contains no Lie idempotents at all, and indeed
// tilde-Xi^n * a equals 2a for odd n but 0 for even n.  Closed forms for the
// two rational peak idempotents:
//
//   omega-tilde_n = 2 Pi^0 + 4 sum_{k=2}^{n-1} (-1)^{k-1} Pi^{{k}}
//   rho-tilde_n   = 2 sum_P ((-1)^{|P|} / (n-2|P|)) Gamma^P     (n odd)
//
// and at permutation level the coefficient of pi in (1/2) rho-tilde_n
// depends only on k = #Peak(pi):
//
//   f_{n,k} = sum_j binom(k,j) (-1)^j / (n-2j)
//           = (-1)^k (2*4*...*2k) / (n(n-2)...(n-2k)).
//
// The Klyachko elements for all powers of eps span a left ideal of D_n after
// multiplication by tilde-Xi^n; its dimension is computed exactly as the
// rational rank of the elements M-tilde_z (sums over major-index classes).
//
// A Lie series picks one Lie element gamma_n per degree; the default series
// here is gamma_n = omega_n for even n and (1/2) omega-tilde_n for odd n, so
// that the odd members lie in the peak algebra.  gamma_q denotes the
// external product of the gamma_{q_i}, an element of degree |q|.

#include <optional>
#include <vector>

#include "peaklab/cyclotomic.hpp"
#include "peaklab/descent_peak.hpp"

namespace peaklab {

// --- classical Lie idempotents ------------------------------------------------------

// Dynkin element omega_n = sum_{k=0}^{n-1} (-1)^k Delta^{1^k.(n-k)}.
std::vector<Rational> omega_delta_coords(const DnContext& ctx);
Element<Rational> omega_elem(int n);

// Canonical idempotent rho_n = sum_{q |= n} ((-1)^{l(q)-1} / l(q)) Xi^q.
XiMap rho_xi_map(int n);
Element<Rational> rho_elem(int n);

// Klyachko element kappa_n(eps^i) = sum_D eps^{i sum D} Delta^D, over the
// cyclotomic field of order n.
std::vector<Cyclo> klyachko_delta_coords(const DnContext& ctx, long long i);
Element<Cyclo> klyachko_elem(int n, long long i);

// M_z: sum of Delta^D over subsets with sum D congruent to z mod n; kappa_n
// decomposes as sum_z eps^z M_z.
std::vector<Rational> m_z_delta_coords(const DnContext& ctx, int z);

// The certificate pair omega a = n a, a omega = omega.
template <class K>
bool is_lie_idempotent(const DnContext& ctx, const std::vector<K>& a) {
  std::vector<Rational> wq = omega_delta_coords(ctx);
  std::vector<K> w(wq.size(), K(0));
  for (std::size_t i = 0; i < wq.size(); ++i) w[i] = K(wq[i]);
  std::vector<K> left = ctx.delta_mult(w, a);
  K nn = K(Rational(ctx.n()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    K want = a[i];
    want *= nn;
    if (!(left[i] == want)) return false;
  }
  std::vector<K> right = ctx.delta_mult(a, w);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!(right[i] == w[i])) return false;
  return true;
}

// --- peak variants ------------------------------------------------------------------

// omega-tilde_n = omega_n * tilde-Xi^n, in Pi coordinates, and its closed
// hook form.
std::vector<Rational> peak_dynkin_pi_coords(const DnContext& ctx);
std::vector<Rational> peak_dynkin_closed_pi_coords(const DnContext& ctx);
Element<Rational> peak_dynkin_elem(int n);

// rho-tilde_n = rho_n * tilde-Xi^n, in Pi coordinates; its Gamma-coordinate
// closed form (zero vector for even n); and the peak-count coefficient
// f_{n,k} of the permutation-level closed form of (1/2) rho-tilde_n.
std::vector<Rational> peak_canonical_pi_coords(const DnContext& ctx);
std::vector<Rational> peak_canonical_gamma_coords(const DnContext& ctx);
Rational peak_canonical_coeff(int n, int k);
Element<Rational> peak_canonical_elem(int n);

// Solve the certificate pair inside the peak algebra: returns Pi coordinates
// of a peak Lie idempotent if one exists (exactly the odd degrees).
std::optional<std::vector<Rational>> peak_lie_idempotent_solve(const DnContext& ctx);

// --- the peak Klyachko span ---------------------------------------------------------

// M-tilde_z = M_z * tilde-Xi^n in Pi coordinates, and the counting form
// coeff(Pi^P) = 2^{|P|+1} #{D : sum D == z mod n, P contained in the
// symmetric difference of D and D+1}.
std::vector<Rational> m_tilde_pi_coords(const DnContext& ctx, int z);
std::vector<Rational> m_tilde_pi_coords_formula(const DnContext& ctx, int z);

// kappa-tilde_n(eps^i) = kappa_n(eps^i) * tilde-Xi^n, in Pi coordinates over
// the cyclotomic field of order n.
std::vector<Cyclo> klyachko_tilde_pi_coords(const DnContext& ctx, long long i);

// Dimension of the span of all kappa-tilde_n(eps^i): the rational rank of
// { M-tilde_z : z }.
int klyachko_peak_span_dim(int n);

// --- Lie series ---------------------------------------------------------------------

// Default series: gamma_n = omega_n (n even), (1/2) omega-tilde_n (n odd).
XiMap gamma_n_xi_map(int n);
// gamma_q = gamma_{q_1} * ... * gamma_{q_k} (external product).
XiMap gamma_q_xi_map(const Composition& q);
std::vector<Rational> gamma_q_delta_coords(const DnContext& ctx,
                                           const Composition& q);
// gamma^q = gamma_{q_1} # ... # gamma_{q_k} (shifted concatenation), at
// permutation level; gamma_q = gamma^q * Xi^q.
Element<Rational> gamma_hash_elem(const Composition& q);
Element<Rational> gamma_q_elem(const Composition& q);

// The omega series (gamma_n = omega_n in every degree), for cross-series
// identities.
XiMap omega_q_xi_map(const Composition& q);

// --- class-wise coefficient sums and peak parity counts ------------------------------

// Sum of the coefficients of a over the conjugacy class C_p.
Rational class_coefficient_sum(const Element<Rational>& a, const Partition& p);

// Counts over the class C_p of permutations with no peak, with exactly one
// peak at an even position, and with exactly one peak at an odd position.
struct PeakParityCounts {
  long long none = 0;
  long long one_even = 0;
  long long one_odd = 0;
};
PeakParityCounts peak_parity_counts(const Partition& p);

}  // namespace peaklab
