#pragma once

// Permutations of {1, ..., n} in one-line notation, with the statistics the
// library is built on.
//
// Conventions:
//   * img[i-1] is the image of i, written i pi.  Products read left to right:
//     i (pi sigma) = (i pi) sigma, so compose(a, b) applies a first.
//   * Des(pi)  = { i in [n-1] : i pi > (i+1) pi }.
//   * Peak(pi) = { i : 2 <= i <= n-1, (i-1) pi < i pi > (i+1) pi }.
//   * tau(n, i) for 1 <= i <= n-1 is the transposition exchanging the values
//     i and i+1; right multiplication by it swaps those two values in the
//     one-line image.  Additionally tau(1, 1) = id, so that tau(n, 1) makes
//     sense for every n >= 1.

#include "peaklab/combinatorics.hpp"

#include <compare>
#include <string>
#include <vector>

namespace peaklab {

struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  int n() const { return static_cast<int>(img.size()); }
  int of(int i) const { return img[i - 1]; }

  static Permutation identity(int n);
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
};

// Left-to-right product: i (a b) = (i a) b.
Permutation compose(const Permutation& a, const Permutation& b);

// The transposition of the values i and i+1 (see header comment).
Permutation tau(int n, int i);

Subset descent_set(const Permutation& p);
Subset peak_set(const Permutation& p);
int peak_count(const Permutation& p);
int major_index(const Permutation& p);  // sum of the descents
Partition cycle_type(const Permutation& p);

// The order-reversing permutation i -> n+1-i.
Permutation reverse_perm(int n);

// All of S_n in lexicographic order of the one-line notation; perm_rank gives
// a permutation's position in that order (via its Lehmer code).
std::vector<Permutation> all_permutations(int n);
long long perm_rank(const Permutation& p);
long long factorial(int n);

// Shifted concatenation pi # sigma in S_{n+m}:  i -> i pi for i <= n,
// i -> (i - n) sigma + n for i > n.
Permutation shifted_concat(const Permutation& a, const Permutation& b);

// One-line notation: "2431" for n <= 9, dot-separated ("11.2.1...") above.
std::string perm_key(const Permutation& p);

}  // namespace peaklab
