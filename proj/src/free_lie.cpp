#include "peaklab/free_lie.hpp"

#include <numeric>
#include <stdexcept>

#include "peaklab/lie_idempotents.hpp"
#include "peaklab/linalg.hpp"

namespace peaklab {

void free_add(FreeElt& x, const Word& w, const Rational& c) {
  if (c == Rational(0)) return;
  auto [it, fresh] = x.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Rational(0)) x.erase(it);
  }
}

Word act(const Permutation& pi, const Word& w) {
  if (static_cast<int>(w.size()) != pi.n())
    throw std::invalid_argument("act: word length differs from degree");
  Word v(w.size());
  for (int i = 1; i <= pi.n(); ++i) v[i - 1] = w[pi.of(i) - 1];
  return v;
}

FreeElt act(const Permutation& pi, const FreeElt& x) {
  FreeElt out;
  for (const auto& [w, c] : x) free_add(out, act(pi, w), c);
  return out;
}

FreeElt act(const Element<Rational>& a, const FreeElt& x) {
  // Terms of a whose degree differs from a word's length act as zero.
  FreeElt out;
  for (const auto& [w, c] : x) {
    const auto& terms = a.degree_part(static_cast<int>(w.size()));
    for (const auto& [pi, d] : terms) {
      Rational cd = c;
      cd *= d;
      free_add(out, act(pi, w), cd);
    }
  }
  return out;
}

Word iota_word(const Permutation& pi) {
  Word v(pi.n());
  for (int i = 1; i <= pi.n(); ++i) v[i - 1] = pi.of(i);
  return v;
}

FreeElt iota_elt(const Element<Rational>& a) {
  FreeElt out;
  for (const auto& [n, terms] : a.parts())
    for (const auto& [pi, c] : terms) free_add(out, iota_word(pi), c);
  return out;
}

FreeElt free_concat(const FreeElt& a, const FreeElt& b) {
  FreeElt out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      Rational cd = c;
      cd *= d;
      free_add(out, w, cd);
    }
  return out;
}

FreeElt bracket(const Word& w) {
  if (w.empty()) throw std::invalid_argument("bracket: empty word");
  FreeElt cur;
  cur.emplace(Word{w[0]}, Rational(1));
  for (std::size_t i = 1; i < w.size(); ++i) {
    FreeElt next;
    for (const auto& [u, c] : cur) {
      Word left = u;
      left.push_back(w[i]);
      free_add(next, left, c);
      Word right{w[i]};
      right.insert(right.end(), u.begin(), u.end());
      free_add(next, right, -c);
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

Word block_letters(const Composition& q, int j) {
  int offset = std::accumulate(q.begin(), q.begin() + j, 0);
  Word w(q[j]);
  std::iota(w.begin(), w.end(), offset + 1);
  return w;
}

}  // namespace

FreeElt lie_monomial_product(const Composition& q) {
  FreeElt out;
  out.emplace(Word{}, Rational(1));
  for (std::size_t j = 0; j < q.size(); ++j)
    out = free_concat(out, bracket(block_letters(q, static_cast<int>(j))));
  return out;
}

FreeElt permuted_monomial_product(const Composition& q,
                                  const Permutation& tau) {
  if (tau.n() != static_cast<int>(q.size()))
    throw std::invalid_argument("permuted_monomial_product: degree mismatch");
  FreeElt out;
  out.emplace(Word{}, Rational(1));
  for (int pos = 1; pos <= tau.n(); ++pos)
    out = free_concat(out, bracket(block_letters(q, tau.of(pos) - 1)));
  return out;
}

FreeElt transfer_monomial_product(const Composition& q) {
  return iota_elt(gamma_hash_elem(q));
}

bool is_lie_element(const FreeElt& x, int m) {
  FreeElt lhs = act(omega_elem(m), x);
  FreeElt rhs;
  for (const auto& [w, c] : x) {
    Rational mc = c;
    mc *= Rational(m);
    rhs.emplace(w, mc);
  }
  return lhs == rhs;
}

FreeElt xi_action_rhs(const Composition& r, const std::vector<FreeElt>& p,
                      const Composition& q) {
  const int k = static_cast<int>(q.size());
  const int l = static_cast<int>(r.size());
  if (static_cast<int>(p.size()) != k)
    throw std::invalid_argument("xi_action_rhs: factor count mismatch");

  FreeElt total;
  std::vector<int> assign(k, 0);
  std::vector<int> rem(r.begin(), r.end());
  // Assign each factor index j to one of the l ordered blocks, keeping the
  // required degree sums; complete assignments contribute the product of
  // the factors grouped by block, ascending within each block.
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == k) {
      for (int i = 0; i < l; ++i)
        if (rem[i] != 0) return;
      FreeElt term;
      term.emplace(Word{}, Rational(1));
      for (int i = 0; i < l; ++i)
        for (int jj = 0; jj < k; ++jj)
          if (assign[jj] == i) term = free_concat(term, p[jj]);
      for (const auto& [w, c] : term) free_add(total, w, c);
      return;
    }
    for (int i = 0; i < l; ++i) {
      if (rem[i] < q[j]) continue;
      rem[i] -= q[j];
      assign[j] = i;
      self(self, j + 1);
      rem[i] += q[j];
    }
  };
  recurse(recurse, 0);
  return total;
}

FreeElt xi_action_rhs(const Composition& r, const Composition& q) {
  std::vector<FreeElt> p(q.size());
  for (std::size_t j = 0; j < q.size(); ++j)
    p[j] = bracket(block_letters(q, static_cast<int>(j)));
  return xi_action_rhs(r, p, q);
}

bool descent_membership_by_action(const Element<Rational>& a, int n) {
  for (int d : a.degrees())
    if (d != n)
      throw std::invalid_argument(
          "descent_membership_by_action: element not homogeneous of the "
          "given degree");
  for (const Composition& q : compositions(n)) {
    FreeElt image = act(a, lie_monomial_product(q));
    if (image.empty()) continue;
    RowSpace<Rational, Word> span;
    for (const Permutation& tau :
         all_permutations(static_cast<int>(q.size())))
      span.insert(permuted_monomial_product(q, tau));
    if (!span.contains(image)) return false;
  }
  return true;
}

bool peak_membership_by_action(const Element<Rational>& a, int n) {
  if (!descent_membership_by_action(a, n)) return false;
  // Annihilating the even-first transfer monomials iota(gamma^q) is
  // equivalent, by equivariance and injectivity of iota, to killing the
  // elements gamma^q themselves, which characterises the peak algebra
  // inside the descent algebra.
  for (const Composition& q : compositions(n)) {
    if (q.empty() || q[0] % 2 != 0) continue;
    if (!act(a, transfer_monomial_product(q)).empty()) return false;
  }
  return true;
}

}  // namespace peaklab
