#include "peaklab/class_functions.hpp"

#include <functional>

#include "peaklab/linalg.hpp"

namespace peaklab {

long long count_colorings(const Partition& p, const Composition& q) {
  if (comp_sum(p) != comp_sum(q)) return 0;
  const int colors = static_cast<int>(q.size());
  std::vector<int> rem(q.begin(), q.end());
  long long total = 0;
  // The parts of p are treated as a labeled list; identical parts in
  // different positions count separately.
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == p.size()) {
      ++total;
      return;
    }
    for (int c = 0; c < colors; ++c) {
      if (rem[c] < p[i]) continue;
      rem[c] -= p[i];
      go(i + 1);
      rem[c] += p[i];
    }
  };
  go(0);
  return total;
}

ClassFunction xi_character(const Composition& q) {
  ClassFunction out;
  out.n = comp_sum(q);
  for (const Partition& p : partitions(out.n)) {
    long long cnt = count_colorings(p, q);
    if (cnt != 0) out.values[p] = Rational(cnt);
  }
  return out;
}

ClassFunction tilde_xi_character(int n) {
  ClassFunction out;
  out.n = n;
  for (const Partition& p : odd_partitions(n)) {
    Rational c(1);
    for (std::size_t i = 0; i < p.size(); ++i) c *= 2;
    out.values[p] = c;
  }
  return out;
}

namespace {

// Index partitions of n so class functions can become sparse rows.
std::map<Partition, int> partition_index(int n) {
  std::map<Partition, int> idx;
  int k = 0;
  for (const Partition& p : partitions(n)) idx[p] = k++;
  return idx;
}

std::map<int, Rational> as_row(const ClassFunction& f,
                               const std::map<Partition, int>& idx) {
  std::map<int, Rational> row;
  for (const auto& [p, v] : f.values) row[idx.at(p)] = v;
  return row;
}

}  // namespace

int solomon_image_rank(int n) {
  auto idx = partition_index(n);
  RowSpace<Rational, int> space;
  for (const Composition& q : compositions(n))
    space.insert(as_row(xi_character(q), idx));
  return space.rank();
}

std::vector<Rational> tilde_xi_comp_pi_coords(const DnContext& ctx,
                                              const Composition& q) {
  // tilde-Xi^q = Xi^q * tilde-Xi^n, since Xi^{(m)} is the identity of S_m and
  // the external product of right multiples of tilde-Xi factors collapses to
  // one right multiplication in the top degree.
  std::vector<Rational> xi(ctx.num_subsets(), Rational(0));
  xi[d_of(q)] = 1;
  return iota_tilde_coords(ctx, xi_to_delta(ctx, xi));
}

int solomon_peak_image_rank(int n) {
  auto idx = partition_index(n);
  const DnContext& ctx = DnContext::get(n);
  RowSpace<Rational, int> space;
  for (const Composition& q : odd_compositions(n)) {
    Element<Rational> e = pi_coords_to_elem(ctx, tilde_xi_comp_pi_coords(ctx, q));
    space.insert(as_row(solomon_c<Rational>(e, n), idx));
  }
  return space.rank();
}

int xi_difference_rank(int n) {
  RowSpace<Rational, int> space;
  for (const Composition& q : compositions(n)) {
    Subset base = d_of(q);
    for (const Composition& r : rearrangements(q)) {
      Subset other = d_of(r);
      if (other == base) continue;
      std::map<int, Rational> row;
      row[static_cast<int>(base)] = 1;
      row[static_cast<int>(other)] = -1;
      space.insert(row);
    }
  }
  return space.rank();
}

int tilde_xi_difference_rank(int n) {
  const DnContext& ctx = DnContext::get(n);
  RowSpace<Rational, int> space;
  for (const Composition& q : odd_compositions(n)) {
    std::vector<Rational> base = tilde_xi_comp_pi_coords(ctx, q);
    for (const Composition& r : rearrangements(q)) {
      if (r == q) continue;
      std::vector<Rational> other = tilde_xi_comp_pi_coords(ctx, r);
      std::map<int, Rational> row;
      for (int i = 0; i < ctx.num_peak_sets(); ++i) {
        Rational d = base[i] - other[i];
        if (d != 0) row[i] = d;
      }
      space.insert(row);
    }
  }
  return space.rank();
}

}  // namespace peaklab
