#include "peaklab/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace peaklab {

// --- compositions -----------------------------------------------------------

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions of a negative integer");
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Build recursively in lexicographic order: first part ascending.
  Composition cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Composition> odd_compositions(int n) {
  std::vector<Composition> out;
  for (const auto& q : compositions(n))
    if (is_odd_composition(q)) out.push_back(q);
  return out;
}

std::vector<Composition> rearrangements(const Composition& q) {
  Composition s = q;
  std::sort(s.begin(), s.end());
  std::vector<Composition> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

int comp_sum(const Composition& q) {
  return std::accumulate(q.begin(), q.end(), 0);
}

int comp_length(const Composition& q) { return static_cast<int>(q.size()); }

bool is_composition(const Composition& q) {
  return std::all_of(q.begin(), q.end(), [](int a) { return a >= 1; });
}

bool is_odd_composition(const Composition& q) {
  return is_composition(q) &&
         std::all_of(q.begin(), q.end(), [](int a) { return a % 2 == 1; });
}

Composition concat(const Composition& r, const Composition& q) {
  Composition out = r;
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

Subset d_of(const Composition& q) {
  if (!is_composition(q)) throw std::invalid_argument("not a composition");
  Subset D = 0;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    acc += q[i];
    D |= Subset{1} << (acc - 1);
  }
  return D;
}

Composition comp_of(Subset D, int n) {
  if (n < 0) throw std::invalid_argument("comp_of: negative n");
  if (n == 0) {
    if (D != 0) throw std::invalid_argument("comp_of: subset out of range");
    return {};
  }
  if (D >> (n - 1)) throw std::invalid_argument("comp_of: subset out of range");
  Composition q;
  int prev = 0;
  for (int i = 1; i <= n - 1; ++i)
    if (D & (Subset{1} << (i - 1))) {
      q.push_back(i - prev);
      prev = i;
    }
  q.push_back(n - prev);
  return q;
}

bool refines(const Composition& q, const Composition& r) {
  if (comp_sum(q) != comp_sum(r))
    throw std::invalid_argument("refines: compositions of different integers");
  Subset dq = d_of(q), dr = d_of(r);
  return (dr & ~dq) == 0;
}

std::vector<Composition> refinement_blocks(const Composition& q,
                                           const Composition& r) {
  if (!refines(q, r))
    throw std::invalid_argument("refinement_blocks: q does not refine r");
  std::vector<Composition> blocks;
  std::size_t pos = 0;
  for (int target : r) {
    Composition block;
    int acc = 0;
    while (acc < target) {
      block.push_back(q[pos]);
      acc += q[pos];
      ++pos;
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool same_multiset(const Composition& q, const Composition& r) {
  return sorted_partition(q) == sorted_partition(r);
}

bool assoc_refines(const Composition& q, const Composition& r) {
  if (comp_sum(q) != comp_sum(r))
    throw std::invalid_argument("assoc_refines: different sums");
  // Distribute the multiset of parts of q over the parts of r.  Backtracking
  // on the sorted parts, largest first, is plenty fast at the sizes we use.
  Composition parts = q;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<int> room(r.begin(), r.end());
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == parts.size()) return true;
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < parts[i]) continue;
      // Skip boxes with identical remaining room (symmetry pruning).
      bool dup = false;
      for (std::size_t c = 0; c < b; ++c)
        if (room[c] == room[b]) {
          dup = true;
          break;
        }
      if (dup) continue;
      room[b] -= parts[i];
      if (self(self, i + 1)) {
        room[b] += parts[i];
        return true;
      }
      room[b] += parts[i];
    }
    return false;
  };
  return rec(rec, 0);
}

// --- odd compositions and peak sets -----------------------------------------

Composition tilde_comp(const Composition& q) {
  if (!is_odd_composition(q))
    throw std::invalid_argument("tilde_comp: composition has an even part");
  Composition out;
  for (int part : q) {
    for (int j = 0; j < (part - 1) / 2; ++j) out.push_back(2);
    out.push_back(1);
  }
  return out;
}

Subset peak_set_of_odd(const Composition& q) {
  int n = comp_sum(q);
  Subset dt = d_of(tilde_comp(q));
  Subset full = (n >= 1) ? ((Subset{1} << (n - 1)) - 1) : 0;
  Subset complement = full & ~dt;
  return shift_subset(complement, 1, n);
}

Composition odd_comp_of_peak(Subset P, int n) {
  if (!is_peak_set(P, n))
    throw std::invalid_argument("odd_comp_of_peak: not a peak set");
  Subset full = (n >= 1) ? ((Subset{1} << (n - 1)) - 1) : 0;
  Subset D = full & ~(P | (P >> 1));
  Composition q = comp_of(D, n);
  if (!is_odd_composition(q))
    throw std::logic_error("odd_comp_of_peak: result not odd");
  return q;
}

Subset p_of_descents(Subset D, int n) {
  Subset P = 0;
  for (int i = 2; i <= n - 1; ++i)
    if ((D & (Subset{1} << (i - 1))) && !(D & (Subset{1} << (i - 2))))
      P |= Subset{1} << (i - 1);
  return P;
}

bool is_peak_set(Subset P, int n) {
  if (n < 0) return false;
  // Inside {2, ..., n-1}:
  Subset allowed = 0;
  for (int i = 2; i <= n - 1; ++i) allowed |= Subset{1} << (i - 1);
  if (P & ~allowed) return false;
  // No two adjacent elements.
  return (P & (P >> 1)) == 0;
}

std::vector<Subset> all_subsets(int n) {
  if (n < 0) throw std::invalid_argument("all_subsets: negative n");
  Subset count = (n >= 1) ? (Subset{1} << (n - 1)) : 1;
  std::vector<Subset> out;
  out.reserve(count);
  for (Subset D = 0; D < count; ++D) out.push_back(D);
  return out;
}

std::vector<Subset> peak_sets(int n) {
  std::vector<Subset> out;
  for (Subset D : all_subsets(n))
    if (is_peak_set(D, n)) out.push_back(D);
  return out;
}

int subset_sum(Subset D) {
  int s = 0;
  for (int i = 1; D; ++i, D >>= 1)
    if (D & 1) s += i;
  return s;
}

int subset_size(Subset D) { return __builtin_popcount(D); }

Subset shift_subset(Subset D, int z, int n) {
  Subset full = (n >= 1) ? ((Subset{1} << (n - 1)) - 1) : 0;
  if (z >= 0) return (D << z) & full;
  return (D >> (-z)) & full;
}

long long fibonacci_dim(int n) {
  // f_0 = f_1 = f_2 = 1, f_n = f_{n-1} + f_{n-2} afterwards.
  if (n < 0) throw std::invalid_argument("fibonacci_dim: negative n");
  if (n <= 2) return 1;
  long long x = 1, y = 1;
  for (int i = 3; i <= n; ++i) {
    long long c = x + y;
    x = y;
    y = c;
  }
  return y;
}

// --- partitions ----------------------------------------------------------------

namespace {

void partitions_rec(int rest, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> odd_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions(n))
    if (is_odd_composition(p)) out.push_back(p);
  return out;
}

bool is_partition(const Partition& p) {
  if (!is_composition(p)) return false;
  return std::is_sorted(p.begin(), p.end(), std::greater<>());
}

Partition sorted_partition(const Composition& q) {
  Partition p = q;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

long long centralizer_order(const Composition& q) {
  std::map<int, int> mult;
  for (int part : q) {
    if (part < 1) throw std::invalid_argument("centralizer_order: bad part");
    ++mult[part];
  }
  long long out = 1;
  for (auto [part, a] : mult) {
    for (int j = 1; j <= a; ++j) out *= j;
    for (int j = 0; j < a; ++j) out *= part;
  }
  return out;
}

int moebius(int m) {
  if (m < 1) throw std::invalid_argument("moebius: argument must be positive");
  int result = 1;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

int sign_of_partition(const Partition& p) {
  if (p.empty()) return 1;
  if (!std::all_of(p.begin(), p.end(), [&](int a) { return a == p[0]; }))
    return 0;
  return moebius(p[0]);
}

// --- Lyndon factorisation --------------------------------------------------------

bool is_lyndon(const Composition& w) {
  if (w.empty()) return false;
  auto fac = lyndon_factorization(w);
  return fac.size() == 1;
}

std::vector<Composition> lyndon_factorization(const Composition& w) {
  // Duval's algorithm.  Factors come out weakly decreasing lexicographically.
  std::vector<Composition> out;
  std::size_t i = 0, n = w.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      if (w[k] < w[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      out.push_back(Composition(w.begin() + i, w.begin() + i + (j - k)));
      i += j - k;
    }
  }
  return out;
}

Composition lsc(const Composition& q) {
  Composition out;
  for (const auto& factor : lyndon_factorization(q))
    out.push_back(comp_sum(factor));
  return out;
}

// --- standard Young tableaux ------------------------------------------------------

int StandardTableau::size() const {
  int s = 0;
  for (const auto& row : rows) s += static_cast<int>(row.size());
  return s;
}

std::vector<StandardTableau> standard_tableaux(int n) {
  if (n < 0) throw std::invalid_argument("standard_tableaux: negative n");
  std::vector<StandardTableau> out;
  StandardTableau t;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(t);
      return;
    }
    // k may extend any existing row that stays within the shape (strictly
    // shorter than the row below), or start a new top row.
    for (std::size_t r = 0; r <= t.rows.size(); ++r) {
      if (r == t.rows.size()) {
        if (r > 0 && t.rows[r - 1].empty()) break;
        t.rows.push_back({k});
        self(self, k + 1);
        t.rows.pop_back();
        break;  // only one way to start a new row
      }
      std::size_t len = t.rows[r].size();
      std::size_t limit = (r == 0) ? static_cast<std::size_t>(n)
                                   : t.rows[r - 1].size();
      if (len < limit) {
        t.rows[r].push_back(k);
        self(self, k + 1);
        t.rows[r].pop_back();
      }
    }
  };
  rec(rec, 1);
  return out;
}

int odd_column_count(const StandardTableau& t) {
  if (t.rows.empty()) return 0;
  int count = 0;
  for (std::size_t c = 0; c < t.rows[0].size(); ++c) {
    int height = 0;
    for (const auto& row : t.rows)
      if (c < row.size()) ++height;
    if (height % 2 == 1) ++count;
  }
  return count;
}

Subset tableau_descents(const StandardTableau& t) {
  int n = t.size();
  std::vector<int> row_of(n + 1, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int entry : t.rows[r]) row_of[entry] = static_cast<int>(r);
  Subset D = 0;
  for (int i = 1; i <= n - 1; ++i)
    if (row_of[i + 1] > row_of[i]) D |= Subset{1} << (i - 1);
  return D;
}

Subset tableau_peaks(const StandardTableau& t) {
  return p_of_descents(tableau_descents(t), t.size());
}

// --- string keys ---------------------------------------------------------------------

namespace {

std::string join_dotted(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::vector<int> split_dotted(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string token =
        s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("bad dotted key: " + s);
    out.push_back(std::stoi(token));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return out;
}

}  // namespace

std::string comp_key(const Composition& q) { return join_dotted(q); }

Composition parse_comp_key(const std::string& s) {
  Composition q = split_dotted(s);
  if (!is_composition(q)) throw std::invalid_argument("bad composition: " + s);
  return q;
}

std::string subset_key(Subset D) {
  std::vector<int> elems;
  for (int i = 1; D; ++i, D >>= 1)
    if (D & 1) elems.push_back(i);
  return join_dotted(elems);
}

Subset parse_subset_key(const std::string& s) {
  Subset D = 0;
  int prev = 0;
  for (int e : split_dotted(s)) {
    if (e < 1 || e <= prev)
      throw std::invalid_argument("bad subset key (want ascending): " + s);
    D |= Subset{1} << (e - 1);
    prev = e;
  }
  return D;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace peaklab
