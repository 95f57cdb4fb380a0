#include "peaklab/permutation.hpp"

#include "peaklab/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace peaklab {

Permutation::Permutation(std::vector<int> one_line) : img(std::move(one_line)) {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 1 || v > n() || seen[v - 1])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 1; i <= n; ++i) p.img[i - 1] = i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) q.img[of(i) - 1] = i;
  return q;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (of(i) != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("compose: degrees differ");
  Permutation c;
  c.img.resize(a.img.size());
  for (int i = 1; i <= a.n(); ++i) c.img[i - 1] = b.of(a.of(i));
  return c;
}

Permutation tau(int n, int i) {
  if (n == 1 && i == 1) return Permutation::identity(1);
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("tau: index out of range");
  Permutation t = Permutation::identity(n);
  std::swap(t.img[i - 1], t.img[i]);
  return t;
}

Subset descent_set(const Permutation& p) {
  Subset D = 0;
  for (int i = 1; i <= p.n() - 1; ++i)
    if (p.of(i) > p.of(i + 1)) D |= Subset{1} << (i - 1);
  return D;
}

Subset peak_set(const Permutation& p) {
  Subset P = 0;
  for (int i = 2; i <= p.n() - 1; ++i)
    if (p.of(i - 1) < p.of(i) && p.of(i) > p.of(i + 1))
      P |= Subset{1} << (i - 1);
  return P;
}

int peak_count(const Permutation& p) { return subset_size(peak_set(p)); }

int major_index(const Permutation& p) { return subset_sum(descent_set(p)); }

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.n(), false);
  Partition type;
  for (int i = 1; i <= p.n(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = true;
      ++len;
      j = p.of(j);
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

Permutation reverse_perm(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 1; i <= n; ++i) p.img[i - 1] = n + 1 - i;
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  require_degree(n);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = Permutation::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

long long perm_rank(const Permutation& p) {
  int n = p.n();
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.img[j] < p.img[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Permutation shifted_concat(const Permutation& a, const Permutation& b) {
  Permutation c;
  c.img.reserve(a.img.size() + b.img.size());
  for (int v : a.img) c.img.push_back(v);
  for (int v : b.img) c.img.push_back(v + a.n());
  return c;
}

std::string perm_key(const Permutation& p) {
  std::string out;
  bool dotted = p.n() >= 10;
  for (int i = 1; i <= p.n(); ++i) {
    if (dotted && i > 1) out += '.';
    out += std::to_string(p.of(i));
  }
  return out;
}

}  // namespace peaklab
