#pragma once
// Class functions on symmetric groups and the character map of the descent
// algebra.
//
// A class function on S_n is stored by its values on the conjugacy classes
// C_p, one for each partition p of n.  Two products matter here:
//
//  * the Kronecker (pointwise) product, mirroring the internal product of
//    characters, and
//  * the induction product, where f on S_n and g on S_m combine to a class
//    function on S_{n+m} by inducing f x g from the Young subgroup
//    S_n x S_m.  On the spanning functions ch_q = q? char_{sort q} (with
//    q? the centralizer order of the cycle type q) the induction product is
//    plain concatenation: ch_r . ch_q = ch_{r.q}.
//
// The map c sends an element of the descent algebra D_n to a class function:
// on the Xi basis, c(Xi^q) is the function whose value on C_p counts the
// colorings of the (labeled) parts of p with colors 1..l(q) such that the
// parts of color i sum to q_i.  It is a homomorphism for both products,
// carrying the internal product to the Kronecker product and the external
// product to the induction product.  Its kernel on D_n is spanned by the
// differences Xi^q - Xi^{q'} over rearrangement-equivalent compositions, and
// its kernel on the peak algebra P_n by the analogous tilde-Xi differences.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "peaklab/combinatorics.hpp"
#include "peaklab/descent_peak.hpp"

namespace peaklab {

template <class K = Rational>
struct ClassFunctionT {
  int n = 0;
  std::map<Partition, K> values;  // partitions absent from the map carry 0

  K at(const Partition& p) const {
    auto it = values.find(p);
    return it == values.end() ? K(0) : it->second;
  }

  void add(const Partition& p, const K& v) {
    auto it = values.try_emplace(p, K(0)).first;
    it->second += v;
    if (it->second == K(0)) values.erase(it);
  }

  bool is_zero() const { return values.empty(); }

  ClassFunctionT& operator+=(const ClassFunctionT& o) {
    if (n != o.n) throw std::invalid_argument("class functions of unequal degree");
    for (const auto& [p, v] : o.values) add(p, v);
    return *this;
  }
  ClassFunctionT& operator-=(const ClassFunctionT& o) {
    if (n != o.n) throw std::invalid_argument("class functions of unequal degree");
    for (const auto& [p, v] : o.values) add(p, K(-v));
    return *this;
  }
  ClassFunctionT& operator*=(const K& s) {
    if (s == K(0)) {
      values.clear();
      return *this;
    }
    for (auto& [p, v] : values) v *= s;
    return *this;
  }
  friend ClassFunctionT operator+(ClassFunctionT a, const ClassFunctionT& b) {
    a += b;
    return a;
  }
  friend ClassFunctionT operator-(ClassFunctionT a, const ClassFunctionT& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const ClassFunctionT& a, const ClassFunctionT& b) {
    return a.n == b.n && a.values == b.values;
  }
};

using ClassFunction = ClassFunctionT<Rational>;

// Indicator of the conjugacy class C_p (the input may be any composition;
// it is sorted into a partition).
template <class K = Rational>
ClassFunctionT<K> class_indicator(const Composition& p) {
  ClassFunctionT<K> out;
  out.n = comp_sum(p);
  out.values[sorted_partition(p)] = K(1);
  return out;
}

// ch_q = q? char_{sort q}, the induced character basis indexed by cycle type.
template <class K = Rational>
ClassFunctionT<K> ch_function(const Composition& q) {
  ClassFunctionT<K> out = class_indicator<K>(q);
  out *= K(Rational(centralizer_order(q)));
  return out;
}

// Pointwise product of class functions of the same degree.
template <class K>
ClassFunctionT<K> kronecker_product(const ClassFunctionT<K>& f,
                                    const ClassFunctionT<K>& g) {
  if (f.n != g.n) throw std::invalid_argument("kronecker product needs equal degree");
  ClassFunctionT<K> out;
  out.n = f.n;
  for (const auto& [p, v] : f.values) {
    auto it = g.values.find(p);
    if (it == g.values.end()) continue;
    K c = v;
    c *= it->second;
    out.add(p, c);
  }
  return out;
}

// Induction product: bilinear in ch coordinates with ch_r . ch_q = ch_{r.q}.
// Expanding both sides over classes gives, for f on S_n and g on S_m,
//   f . g = sum_{p,r} f(C_p) g(C_r) (p.r)? / (p? r?)  char_{sort(p.r)}.
template <class K>
ClassFunctionT<K> induction_product(const ClassFunctionT<K>& f,
                                    const ClassFunctionT<K>& g) {
  ClassFunctionT<K> out;
  out.n = f.n + g.n;
  for (const auto& [p, a] : f.values) {
    for (const auto& [r, b] : g.values) {
      Partition t = sorted_partition(concat(p, r));
      Rational scale(centralizer_order(t));
      scale /= Rational(centralizer_order(p)) * Rational(centralizer_order(r));
      K c = a;
      c *= b;
      c *= K(scale);
      out.add(t, c);
    }
  }
  return out;
}

// Number of ways to color the parts of p (as a labeled list) with colors
// 1..l(q) so that the parts of color i sum to q_i.  This is the value of
// the class function c(Xi^q) on the class C_p.
long long count_colorings(const Partition& p, const Composition& q);

// c(Xi^q) as a class function on S_n, n = |q|.
ClassFunction xi_character(const Composition& q);

// The right-hand side of c(tilde-Xi^n) = sum over odd partitions p of n of
// 2^{l(p)} char_p.
ClassFunction tilde_xi_character(int n);

// The character map on Delta coordinates: c(sum_D x_D Delta^D) expands over
// the Xi basis and sums the coloring counts.
template <class K>
ClassFunctionT<K> solomon_c(const DnContext& ctx, const std::vector<K>& delta) {
  std::vector<K> xi = delta_to_xi(ctx, delta);
  ClassFunctionT<K> out;
  out.n = ctx.n();
  const std::vector<Partition> ps = partitions(ctx.n());
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
    if (xi[D] == K(0)) continue;
    Composition q = comp_of(D, ctx.n());
    for (const Partition& p : ps) {
      long long cnt = count_colorings(p, q);
      if (cnt == 0) continue;
      K c = xi[D];
      c *= K(Rational(cnt));
      out.add(p, c);
    }
  }
  return out;
}

// The character map on a homogeneous element, which must lie in the descent
// algebra of its degree.
template <class K>
ClassFunctionT<K> solomon_c(const Element<K>& a, int n) {
  const DnContext& ctx = DnContext::get(n);
  auto delta = elem_to_delta_coords_t<K>(ctx, a);
  if (!delta) throw std::invalid_argument("solomon_c: element is not descent-class constant");
  return solomon_c<K>(ctx, *delta);
}

// Rank of { c(Xi^q) : q composition of n } inside class functions; this is
// the dimension of the image of the descent algebra, i.e. the number of
// partitions of n.
int solomon_image_rank(int n);

// Rank of { c(tilde-Xi^q) : q odd composition of n }; the image of the peak
// algebra has dimension the number of odd partitions of n.
int solomon_peak_image_rank(int n);

// Dimension of span{ Xi^q - Xi^{q'} : q' a rearrangement of q }, the kernel
// of c on D_n, expected to be 2^{n-1} - #partitions(n).
int xi_difference_rank(int n);

// Dimension of span{ tilde-Xi^q - tilde-Xi^{q'} : q odd, q' a rearrangement },
// the kernel of c on P_n, expected to be fib(n) - #odd partitions(n).
int tilde_xi_difference_rank(int n);

// Pi coordinates of tilde-Xi^q for an odd composition q, computed as
// Xi^q * tilde-Xi^n (cheap: no permutation-level external products).
std::vector<Rational> tilde_xi_comp_pi_coords(const DnContext& ctx,
                                              const Composition& q);

}  // namespace peaklab
