#pragma once

// The descent algebra D_n inside Q S_n, and the peak algebra P_n inside D_n.
//
// Bases.  For D a subset of [n-1] and q a composition of n with D(q) = D:
//   Delta^D = Delta^q = sum of the permutations with descent set exactly D,
//   Xi^D    = Xi^q    = sum of those with descent set contained in D
//                     = sum over subsets E of D of Delta^E.
// For P a peak set (subset of {2..n-1} without adjacent elements) and q the
// odd composition attached to it:
//   Pi^P    = sum of the permutations with peak set exactly P,
//   Gamma^P = Gamma^q = sum over peak sets Q containing P of Pi^Q,
//   and tilde-Xi^n = 2 Pi^{empty}, tilde-Xi^q = tilde-Xi^{q_1} . tilde-Xi^{q_2} ...
// (outer product).  D_n = span{Delta^D}; P_n = span{Pi^P}; dim P_n = f_n
// (Fibonacci).  P_n is a left ideal of (D_n, inner product) and a subalgebra
// of the direct sum over n of the D_n under the outer product.
//
// Coordinates.  A D_n element is a dense vector indexed by the 2^{n-1}
// subsets D (mask order) in the Delta or Xi basis; a P_n element is a dense
// vector indexed by peak_sets(n) in the Pi or Gamma basis.  DnContext caches,
// per degree, the permutation classes and the structure constants of the
// inner product in these coordinates:
//   Delta^D * Delta^E = sum_F  delta_table[D][E][F] Delta^F,
//   Delta^D * Pi^Q    = sum_R  mixed_table[D][Q][R] Pi^R,
//   Pi^P    * Pi^Q    = sum_R  pi_table[P][Q][R]    Pi^R
// (the last two make sense because P_n is a left ideal).  The tables are
// computed from one representative permutation per class.

#include "peaklab/combinatorics.hpp"
#include "peaklab/element.hpp"
#include "peaklab/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace peaklab {

class DnContext {
 public:
  // Cached per degree; references stay valid for the program's lifetime.
  static const DnContext& get(int n);

  int n() const { return n_; }
  int num_subsets() const { return static_cast<int>(subset_count_); }
  int num_peak_sets() const { return static_cast<int>(peak_list_.size()); }

  const std::vector<Permutation>& perms() const { return perms_; }
  Subset des_of(std::size_t perm_index) const { return des_[perm_index]; }
  Subset peak_of(std::size_t perm_index) const { return peak_[perm_index]; }

  const std::vector<Subset>& peak_list() const { return peak_list_; }
  int peak_index(Subset P) const;  // throws when P is not a peak set of [n-1]

  long long descent_class_size(Subset D) const { return dclass_size_[D]; }
  long long peak_class_size(Subset P) const;
  const Permutation& descent_rep(Subset D) const { return perms_[dclass_rep_[D]]; }
  const Permutation& peak_rep(Subset P) const;

  // --- inner products on coordinates ---------------------------------------

  // Delta-basis coordinates (size num_subsets) on both sides.
  template <class K>
  std::vector<K> delta_mult(const std::vector<K>& a,
                            const std::vector<K>& b) const {
    const auto& table = delta_table();
    std::size_t m = subset_count_;
    std::vector<K> out(m, K(0));
    for (std::size_t D = 0; D < m; ++D) {
      if (a[D] == K(0)) continue;
      for (std::size_t E = 0; E < m; ++E) {
        if (b[E] == K(0)) continue;
        K c = a[D];
        c *= b[E];
        const std::int32_t* row = table.data() + (D * m + E) * m;
        for (std::size_t F = 0; F < m; ++F)
          if (row[F]) {
            K t = c;
            t *= K(row[F]);
            out[F] += t;
          }
      }
    }
    return out;
  }

  // Left action of a Delta-coordinate vector on Pi-basis coordinates.
  template <class K>
  std::vector<K> delta_act_pi(const std::vector<K>& a,
                              const std::vector<K>& y) const {
    std::size_t m = subset_count_, f = peak_list_.size();
    std::vector<K> out(f, K(0));
    for (std::size_t D = 0; D < m; ++D) {
      if (a[D] == K(0)) continue;
      for (std::size_t Q = 0; Q < f; ++Q) {
        if (y[Q] == K(0)) continue;
        K c = a[D];
        c *= y[Q];
        const std::int32_t* row = mixed_table_.data() + (D * f + Q) * f;
        for (std::size_t R = 0; R < f; ++R)
          if (row[R]) {
            K t = c;
            t *= K(row[R]);
            out[R] += t;
          }
      }
    }
    return out;
  }

  // Pi-basis coordinates on both sides.
  template <class K>
  std::vector<K> pi_mult(const std::vector<K>& a,
                         const std::vector<K>& b) const {
    std::size_t f = peak_list_.size();
    std::vector<K> out(f, K(0));
    for (std::size_t P = 0; P < f; ++P) {
      if (a[P] == K(0)) continue;
      for (std::size_t Q = 0; Q < f; ++Q) {
        if (b[Q] == K(0)) continue;
        K c = a[P];
        c *= b[Q];
        const std::int32_t* row = pi_table_.data() + (P * f + Q) * f;
        for (std::size_t R = 0; R < f; ++R)
          if (row[R]) {
            K t = c;
            t *= K(row[R]);
            out[R] += t;
          }
      }
    }
    return out;
  }

  const std::vector<std::int32_t>& delta_table() const;  // built on demand

 private:
  explicit DnContext(int n);
  void build_classes();
  void build_mixed_and_pi_tables();

  int n_;
  std::size_t subset_count_;
  std::vector<Permutation> perms_;
  std::vector<Subset> des_, peak_;
  std::vector<long long> dclass_size_;
  std::vector<std::size_t> dclass_rep_;
  std::vector<Subset> peak_list_;
  std::vector<long long> pclass_size_;
  std::vector<std::size_t> pclass_rep_;
  std::vector<std::int32_t> mixed_table_, pi_table_;
  mutable std::vector<std::int32_t> delta_table_;
};

// --- basis elements (permutation level) --------------------------------------

Element<Rational> delta_elem(int n, Subset D);
Element<Rational> delta_elem(const Composition& q);
Element<Rational> xi_elem(int n, Subset D);
Element<Rational> xi_elem(const Composition& q);
Element<Rational> pi_elem(int n, Subset P);
Element<Rational> gamma_elem(int n, Subset P);
Element<Rational> gamma_elem(const Composition& odd_q);

// tilde-Xi^n = 2 Pi^{empty set} for n >= 1; the unit for n = 0.
Element<Rational> tilde_xi_elem(int n);
// tilde-Xi^q as the outer product of the tilde-Xi^{q_i}.
Element<Rational> tilde_xi_elem(const Composition& q);

// The identity permutation of S_n as an element (Delta^{empty set}).
Element<Rational> id_elem(int n);

// --- membership ---------------------------------------------------------------

// On failure, witness holds two permutations of the same class (descent class
// or peak class respectively) carrying different coefficients.
struct Membership {
  bool ok = false;
  std::optional<std::pair<Permutation, Permutation>> witness;
  explicit operator bool() const { return ok; }
};

Membership in_descent_algebra(const Element<Rational>& a);
Membership in_peak_algebra(const Element<Rational>& a);

// Does a * tau(n, 1) = a hold degree-wise?  (The combinatorial peak-algebra
// characterisation:  a in P_n  iff  a in D_n and this holds.)  On failure the
// witness pair is (pi, pi tau) with differing coefficients.
Membership tau_one_fixed(const Element<Rational>& a);

// --- element <-> coordinate conversions ------------------------------------------

Element<Rational> delta_coords_to_elem(const DnContext& ctx,
                                       const std::vector<Rational>& x);
Element<Rational> pi_coords_to_elem(const DnContext& ctx,
                                    const std::vector<Rational>& x);
// Null when the degree-n homogeneous element is not in D_n (resp. P_n).
std::optional<std::vector<Rational>> elem_to_delta_coords(
    const DnContext& ctx, const Element<Rational>& a);
std::optional<std::vector<Rational>> elem_to_pi_coords(
    const DnContext& ctx, const Element<Rational>& a);

// Scalar-generic versions of the two extractions above.
template <class K>
std::optional<std::vector<K>> elem_to_delta_coords_t(const DnContext& ctx,
                                                     const Element<K>& a) {
  for (int d : a.degrees())
    if (d != ctx.n()) return std::nullopt;
  std::vector<K> out(ctx.num_subsets(), K(0));
  std::vector<bool> seen(ctx.num_subsets(), false);
  for (std::size_t i = 0; i < ctx.perms().size(); ++i) {
    K c = a.coefficient(ctx.perms()[i]);
    Subset D = ctx.des_of(i);
    if (!seen[D]) {
      seen[D] = true;
      out[D] = c;
    } else if (!(out[D] == c)) {
      return std::nullopt;
    }
  }
  return out;
}

template <class K>
std::optional<std::vector<K>> elem_to_pi_coords_t(const DnContext& ctx,
                                                  const Element<K>& a) {
  for (int d : a.degrees())
    if (d != ctx.n()) return std::nullopt;
  std::vector<K> out(ctx.num_peak_sets(), K(0));
  std::vector<bool> seen(ctx.num_peak_sets(), false);
  for (std::size_t i = 0; i < ctx.perms().size(); ++i) {
    K c = a.coefficient(ctx.perms()[i]);
    int P = ctx.peak_index(ctx.peak_of(i));
    if (!seen[P]) {
      seen[P] = true;
      out[P] = c;
    } else if (!(out[P] == c)) {
      return std::nullopt;
    }
  }
  return out;
}

template <class K>
Element<K> pi_coords_to_elem_t(const DnContext& ctx, const std::vector<K>& x) {
  Element<K> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    out.add(ctx.perms()[i], x[ctx.peak_index(ctx.peak_of(i))]);
  return out;
}

template <class K>
Element<K> delta_coords_to_elem_t(const DnContext& ctx, const std::vector<K>& x) {
  Element<K> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    out.add(ctx.perms()[i], x[ctx.des_of(i)]);
  return out;
}

// --- coordinate changes (basis transitions) ---------------------------------------

// Element = sum_D x[D] Xi^D  ->  Delta coordinates, and back.
template <class K>
std::vector<K> xi_to_delta(const DnContext& ctx, const std::vector<K>& x) {
  std::size_t m = ctx.num_subsets();
  Subset full = static_cast<Subset>(m - 1);
  std::vector<K> out(m, K(0));
  for (Subset E = 0; E < m; ++E) {
    // Delta^E occurs in Xi^D exactly when D contains E.
    Subset free = full & ~E;
    Subset sub = free;
    while (true) {
      out[E] += x[E | sub];
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return out;
}

template <class K>
std::vector<K> delta_to_xi(const DnContext& ctx, const std::vector<K>& x) {
  std::size_t m = ctx.num_subsets();
  Subset full = static_cast<Subset>(m - 1);
  std::vector<K> out(m, K(0));
  for (Subset D = 0; D < m; ++D) {
    Subset free = full & ~D;
    Subset sub = free;
    while (true) {
      K term = x[D | sub];
      if (subset_size(sub) % 2) {
        out[D] -= term;
      } else {
        out[D] += term;
      }
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return out;
}

// Pi coordinates -> Delta coordinates (Pi^P = sum of the Delta^D with peak
// set P), and the partial inverse (null when not constant on the fibers).
template <class K>
std::vector<K> pi_to_delta(const DnContext& ctx, const std::vector<K>& x) {
  std::size_t m = ctx.num_subsets();
  std::vector<K> out(m, K(0));
  for (Subset D = 0; D < m; ++D)
    out[D] = x[ctx.peak_index(p_of_descents(D, ctx.n()))];
  return out;
}

template <class K>
std::optional<std::vector<K>> delta_to_pi(const DnContext& ctx,
                                          const std::vector<K>& x) {
  std::vector<K> out(ctx.num_peak_sets(), K(0));
  std::vector<bool> seen(ctx.num_peak_sets(), false);
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
    int idx = ctx.peak_index(p_of_descents(D, ctx.n()));
    if (!seen[idx]) {
      out[idx] = x[D];
      seen[idx] = true;
    } else if (!(out[idx] == x[D])) {
      return std::nullopt;
    }
  }
  return out;
}

// Gamma coordinates <-> Pi coordinates:  Gamma^P = sum_{Q peak, Q >= P} Pi^Q.
template <class K>
std::vector<K> gamma_to_pi(const DnContext& ctx, const std::vector<K>& g) {
  std::vector<K> out(ctx.num_peak_sets(), K(0));
  for (int qi = 0; qi < ctx.num_peak_sets(); ++qi) {
    Subset Q = ctx.peak_list()[qi];
    Subset sub = Q;
    while (true) {
      out[qi] += g[ctx.peak_index(sub)];
      if (sub == 0) break;
      sub = (sub - 1) & Q;
    }
  }
  return out;
}

template <class K>
std::vector<K> pi_to_gamma(const DnContext& ctx, const std::vector<K>& x) {
  std::vector<K> out(ctx.num_peak_sets(), K(0));
  for (int qi = 0; qi < ctx.num_peak_sets(); ++qi) {
    Subset Q = ctx.peak_list()[qi];
    Subset sub = Q;
    while (true) {
      K term = x[ctx.peak_index(sub)];
      if ((subset_size(Q) - subset_size(sub)) % 2) {
        out[qi] -= term;
      } else {
        out[qi] += term;
      }
      if (sub == 0) break;
      sub = (sub - 1) & Q;
    }
  }
  return out;
}

// Xi coordinates as a sparse composition-keyed map (used by the coproduct,
// the Solomon homomorphism, and the convolution shortcut  Xi^r . Xi^q =
// Xi^{r.q}  for building outer products of coordinate vectors).
using XiMap = std::map<Composition, Rational>;

XiMap delta_coords_to_xi_map(const DnContext& ctx,
                             const std::vector<Rational>& delta);
std::vector<Rational> xi_map_to_delta_coords(const DnContext& ctx,
                                             const XiMap& m);
// Concatenation convolution: the Xi map of the outer product.
XiMap xi_map_outer(const XiMap& a, const XiMap& b);

// Scalar-generic versions of the Xi-map plumbing, for cyclotomic elements.
template <class K>
std::map<Composition, K> xi_map_outer_t(const std::map<Composition, K>& a,
                                        const std::map<Composition, K>& b) {
  std::map<Composition, K> out;
  for (const auto& [qa, ca] : a)
    for (const auto& [qb, cb] : b) {
      K c = ca;
      c *= cb;
      auto it = out.try_emplace(concat(qa, qb), K(0)).first;
      it->second += c;
      if (it->second == K(0)) out.erase(it);
    }
  return out;
}

template <class K>
std::vector<K> xi_map_to_delta_coords_t(const DnContext& ctx,
                                        const std::map<Composition, K>& m) {
  std::vector<K> xi(ctx.num_subsets(), K(0));
  for (const auto& [q, c] : m) {
    if (comp_sum(q) != ctx.n())
      throw std::invalid_argument("xi map degree does not match the context");
    xi[d_of(q)] += c;
  }
  return xi_to_delta(ctx, xi);
}

// --- coproduct --------------------------------------------------------------------

// The coproduct splits every part of q in two:  Xi^q |-> sum over
// (k_1, ..., k_l), 0 <= k_i <= q_i, of Xi^{left} (x) Xi^{right}, where left
// keeps the nonzero k_i and right the nonzero q_i - k_i.  Extended linearly
// to Xi maps.  Keys are (left, right) composition pairs.
using TensorMap = std::map<std::pair<Composition, Composition>, Rational>;

TensorMap coproduct_xi(const Composition& q);
TensorMap coproduct(const XiMap& m);

// --- the projection iota: phi |-> phi * tilde-Xi^n ---------------------------------

Element<Rational> iota_tilde(const Element<Rational>& a);  // degree-wise
// Pi coordinates of (Delta-coordinate vector) * tilde-Xi^n.
std::vector<Rational> iota_tilde_coords(const DnContext& ctx,
                                        const std::vector<Rational>& delta);

// --- closed forms used by several theorems -----------------------------------------

// Right-hand side of  Delta^D * tilde-Xi^n  =  sum over peak sets P contained
// in (D symmetric-difference (D+1)) of 2^{|P|+1} Pi^P.
Element<Rational> tilde_delta_rhs(int n, Subset D);

// Gamma^q expanded in the Xi basis:  for q odd of length l,
// Gamma^q = (-1)^{(n-l)/2} sum over s with tilde(q) refining s refining q of
// (-1)^{l(s)-l(q)} Xi^s.
XiMap gamma_xi_map(const Composition& odd_q);

// The four expansions of tilde-Xi^r (r any composition of n):
//   in the Pi basis    : 2^{l(r)} sum over peak sets P inside D(r) u (D(r)+1),
//   in the Gamma basis : 2^{l(r)} sum over peak sets P outside that set,
//                        with sign (-1)^{|P|},
//   over odd refinements q of r: 2^{l(r)} (-1)^{(n-l(q))/2} Gamma^q,
//   in the Xi basis    : 2^{l(r)} sum over refinements q of r whose blockwise
//                        final-letter product F_r(q) is odd, sign (-1)^{n-l(q)}.
std::vector<Rational> tilde_xi_pi_coords(const DnContext& ctx,
                                         const Composition& r);
std::vector<Rational> tilde_xi_gamma_coords(const DnContext& ctx,
                                            const Composition& r);
std::vector<Rational> tilde_xi_gamma_coords_odd(const DnContext& ctx,
                                                const Composition& r);
XiMap tilde_xi_xi_map(const Composition& r);

// --- neighbour closures -------------------------------------------------------------

// Class label per permutation (indexed as in ctx.perms()) of the transitive
// closure of each neighbour relation:
//   descent:     sigma = pi tau(n, i), the values i, i+1 not adjacent in pi;
//   peak:        descent neighbour, or sigma = pi tau(n, 1);
//   peak count:  peak neighbour, or sigma = pi tau(n, n-1) with the values
//                n-1, n both at positions 2..n-1 of pi.
enum class NeighbourKind { Descent, Peak, PeakCount };
std::vector<int> neighbour_closure(const DnContext& ctx, NeighbourKind kind);

}  // namespace peaklab
