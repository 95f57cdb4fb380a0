#pragma once

// Elements of the direct sum over n of the group algebras K S_n: formal
// K-linear combinations of permutations, graded by degree.  Three products
// live here:
//
//   * inner(a, b): the group-algebra product, extended degree-wise (terms of
//     different degrees multiply to zero).  Written a * b in the maths.
//   * shifted_concat on terms, written a # b: S_n x S_m -> S_{n+m}.
//   * outer(a, b): the convolution product a . b = (a # b) * Xi^{n.m}, where
//     Xi^{n.m} is the sum of all permutations of n+m whose descent set is
//     contained in {n} (the two-block shuffle sum).  On degree-0 factors it
//     reduces to scalar multiplication, making the empty permutation the unit.
//
// Scalars K are exact (Rational or Cyclo); zero coefficients are erased, so
// two elements are equal iff their term maps are equal.

#include "peaklab/permutation.hpp"
#include "peaklab/scalar.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace peaklab {

template <class K>
class Element {
 public:
  using Terms = std::map<Permutation, K>;

  Element() = default;

  static Element basis(const Permutation& p) {
    Element e;
    e.add(p, K(1));
    return e;
  }

  // The unit for the outer product: the empty permutation.
  static Element one() { return basis(Permutation::identity(0)); }

  void add(const Permutation& p, const K& c) {
    if (c == K(0)) return;
    auto& slot = parts_[p.n()];
    auto [it, fresh] = slot.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == K(0)) {
        slot.erase(it);
        if (slot.empty()) parts_.erase(p.n());
      }
    }
  }

  K coefficient(const Permutation& p) const {
    auto dit = parts_.find(p.n());
    if (dit == parts_.end()) return K(0);
    auto it = dit->second.find(p);
    return it == dit->second.end() ? K(0) : it->second;
  }

  bool is_zero() const { return parts_.empty(); }
  bool is_homogeneous() const { return parts_.size() <= 1; }

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [n, terms] : parts_) out.push_back(n);
    return out;
  }

  const Terms& degree_part(int n) const {
    static const Terms empty;
    auto it = parts_.find(n);
    return it == parts_.end() ? empty : it->second;
  }

  Element homogeneous_part(int n) const {
    Element out;
    auto it = parts_.find(n);
    if (it != parts_.end()) out.parts_.insert(*it);
    return out;
  }

  const std::map<int, Terms>& parts() const { return parts_; }

  std::size_t term_count() const {
    std::size_t c = 0;
    for (const auto& [n, terms] : parts_) c += terms.size();
    return c;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [n, terms] : o.parts_)
      for (const auto& [p, c] : terms) add(p, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [n, terms] : o.parts_)
      for (const auto& [p, c] : terms) add(p, -c);
    return *this;
  }
  Element& operator*=(const K& s) {
    if (s == K(0)) {
      parts_.clear();
      return *this;
    }
    for (auto& [n, terms] : parts_)
      for (auto& [p, c] : terms) c *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) {
    Element out;
    return out -= a;
  }
  friend Element operator*(Element a, const K& s) { return a *= s; }
  friend Element operator*(const K& s, Element a) { return a *= s; }
  friend Element operator/(Element a, const K& s) {
    for (auto& [n, terms] : a.parts_)
      for (auto& [p, c] : terms) c /= s;
    return a;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::map<int, Terms> parts_;
};

// The two-block shuffle sum Xi^{n.m}: all permutations of n+m with descent
// set contained in {n}, i.e. increasing on the first n and the last m
// positions.  There are binom(n+m, n) of them.
template <class K>
Element<K> two_block_shuffle_sum(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative block size");
  require_degree(n + m);
  Element<K> out;
  // Choose which of the values 1..n+m land in the first block, in order.
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i + 1;
  while (true) {
    std::vector<int> img(n + m);
    std::vector<bool> used(n + m + 1, false);
    for (int i = 0; i < n; ++i) {
      img[i] = pick[i];
      used[pick[i]] = true;
    }
    int pos = n;
    for (int v = 1; v <= n + m; ++v)
      if (!used[v]) img[pos++] = v;
    out.add(Permutation(img), K(1));
    // Next combination in lexicographic order.
    int i = n - 1;
    while (i >= 0 && pick[i] == m + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Group-algebra (inner) product, degree-wise.
template <class K>
Element<K> inner(const Element<K>& a, const Element<K>& b) {
  Element<K> out;
  for (const auto& [n, aterms] : a.parts()) {
    const auto& bterms = b.degree_part(n);
    for (const auto& [p, c] : aterms)
      for (const auto& [q, d] : bterms) out.add(compose(p, q), c * d);
  }
  return out;
}

// Term-wise shifted concatenation a # b.
template <class K>
Element<K> hash_prod(const Element<K>& a, const Element<K>& b) {
  Element<K> out;
  for (const auto& [n, aterms] : a.parts())
    for (const auto& [m, bterms] : b.parts())
      for (const auto& [p, c] : aterms)
        for (const auto& [q, d] : bterms)
          out.add(shifted_concat(p, q), c * d);
  return out;
}

// Outer product a . b = (a # b) * Xi^{n.m} per degree pair.
template <class K>
Element<K> outer(const Element<K>& a, const Element<K>& b) {
  Element<K> out;
  for (const auto& [n, aterms] : a.parts())
    for (const auto& [m, bterms] : b.parts()) {
      if (n == 0 || m == 0) {
        for (const auto& [p, c] : aterms)
          for (const auto& [q, d] : bterms)
            out.add(shifted_concat(p, q), c * d);
        continue;
      }
      Element<K> shuffles = two_block_shuffle_sum<K>(n, m);
      for (const auto& [p, c] : aterms)
        for (const auto& [q, d] : bterms) {
          Permutation h = shifted_concat(p, q);
          for (const auto& [w, one] : shuffles.degree_part(n + m))
            out.add(compose(h, w), c * d);
        }
    }
  return out;
}

// Change of scalars, e.g. Rational -> Cyclo.
template <class L, class K, class F>
Element<L> map_coefficients(const Element<K>& a, F&& f) {
  Element<L> out;
  for (const auto& [n, terms] : a.parts())
    for (const auto& [p, c] : terms) out.add(p, f(c));
  return out;
}

}  // namespace peaklab
