#include "peaklab/structure_theory.hpp"

#include <stdexcept>

#include "peaklab/class_functions.hpp"
#include "peaklab/lie_idempotents.hpp"
#include "peaklab/linalg.hpp"

namespace peaklab {

namespace {

std::map<int, Rational> as_row(const std::vector<Rational>& v) {
  std::map<int, Rational> row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) row.emplace(static_cast<int>(i), v[i]);
  return row;
}

std::vector<Rational> as_vec(const std::map<int, Rational>& row,
                             std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (const auto& [i, c] : row) v[static_cast<std::size_t>(i)] = c;
  return v;
}

std::vector<std::vector<Rational>> echelon_vecs(
    const std::vector<std::vector<Rational>>& rows, std::size_t dim) {
  RowSpace<Rational, int> space;
  for (const auto& r : rows) space.insert(as_row(r));
  std::vector<std::vector<Rational>> out;
  for (const auto& r : space.rows()) out.push_back(as_vec(r, dim));
  return out;
}

}  // namespace

Composition lyndon_sum_composition(const Composition& q) {
  // Duval's algorithm: factorises q into Lyndon words, weakly decreasing
  // lexicographically; record the sum of each factor.
  Composition sums;
  const int n = static_cast<int>(q.size());
  int i = 0;
  while (i < n) {
    int j = i + 1;
    int k = i;
    while (j < n && q[k] <= q[j]) {
      if (q[k] < q[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      int sum = 0;
      for (int t = i; t < i + (j - k); ++t) sum += q[t];
      sums.push_back(sum);
      i += j - k;
    }
  }
  return sums;
}

int cartan_dim_brute(const DnContext& ctx, const Partition& q,
                     const Partition& p) {
  std::vector<Rational> gq = gamma_q_delta_coords(ctx, q);
  std::vector<Rational> gp = gamma_q_delta_coords(ctx, p);
  RowSpace<Rational, int> space;
  for (Subset d = 0; d < static_cast<Subset>(ctx.num_subsets()); ++d) {
    std::vector<Rational> mid(ctx.num_subsets(), Rational(0));
    mid[d] = Rational(1);
    space.insert(as_row(ctx.delta_mult(ctx.delta_mult(gq, mid), gp)));
  }
  return space.rank();
}

int cartan_count_lyndon(const Partition& q, const Partition& p) {
  int count = 0;
  for (const Composition& r : rearrangements(q))
    if (sorted_partition(lyndon_sum_composition(r)) == p) ++count;
  return count;
}

std::vector<std::vector<int>> cartan_matrix(int n) {
  std::vector<Partition> odd = odd_partitions(n);
  std::vector<std::vector<int>> m(odd.size(), std::vector<int>(odd.size()));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      m[i][j] = cartan_count_lyndon(odd[i], odd[j]);
  return m;
}

std::vector<std::vector<Rational>> lambda_ideal_basis(const DnContext& ctx,
                                                      const Partition& p) {
  std::vector<std::vector<Rational>> rows;
  for (const Composition& q : rearrangements(p))
    rows.push_back(gamma_q_delta_coords(ctx, q));
  return rows;
}

std::vector<std::vector<Rational>> radical_tilde_xi_differences(
    const DnContext& ctx) {
  std::vector<std::vector<Rational>> rows;
  for (const Partition& p : odd_partitions(ctx.n())) {
    std::vector<Composition> qs = rearrangements(p);
    std::vector<Rational> base = tilde_xi_comp_pi_coords(ctx, qs[0]);
    for (std::size_t i = 1; i < qs.size(); ++i) {
      std::vector<Rational> row = tilde_xi_comp_pi_coords(ctx, qs[i]);
      for (std::size_t k = 0; k < row.size(); ++k) row[k] -= base[k];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::vector<Rational>> radical_character_kernel(
    const DnContext& ctx) {
  // Rows: the class-function images of the peak class sums; the kernel of
  // the stacked matrix, tracked through elimination, is ker c on P_n.
  const std::vector<Partition> parts = partitions(ctx.n());
  const int npart = static_cast<int>(parts.size());
  const int npeak = ctx.num_peak_sets();
  RowSpace<Rational, int> tracked;
  for (int i = 0; i < npeak; ++i) {
    std::vector<Rational> pi(npeak, Rational(0));
    pi[i] = Rational(1);
    ClassFunctionT<Rational> cf = solomon_c<Rational>(ctx, pi_to_delta(ctx, pi));
    std::map<int, Rational> row;
    for (int j = 0; j < npart; ++j) {
      Rational v = cf.at(parts[j]);
      if (v != 0) row.emplace(j, v);
    }
    row.emplace(npart + i, Rational(1));
    tracked.insert(std::move(row));
  }
  std::vector<std::vector<Rational>> kernel;
  for (const auto& row : tracked.rows()) {
    if (row.begin()->first < npart) continue;
    std::vector<Rational> v(npeak, Rational(0));
    for (const auto& [key, c] : row) v[key - npart] = c;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<std::vector<Rational>> radical_gamma_differences(
    const DnContext& ctx) {
  std::vector<std::vector<Rational>> rows;
  for (const Partition& p : odd_partitions(ctx.n())) {
    std::vector<Composition> qs = rearrangements(p);
    std::vector<Rational> base = gamma_q_delta_coords(ctx, p);
    for (const Composition& q : qs) {
      if (q == p) continue;
      std::vector<Rational> diff = gamma_q_delta_coords(ctx, q);
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= base[k];
      auto pi = elem_to_pi_coords(ctx, delta_coords_to_elem(ctx, diff));
      if (!pi)
        throw std::logic_error(
            "radical_gamma_differences: difference not peak-class constant");
      rows.push_back(std::move(*pi));
    }
  }
  return rows;
}

std::vector<std::vector<Rational>> radical_descent_differences(
    const DnContext& ctx) {
  std::vector<std::vector<Rational>> rows;
  for (const Partition& p : partitions(ctx.n())) {
    std::vector<Composition> qs = rearrangements(p);
    std::vector<Rational> xi(ctx.num_subsets(), Rational(0));
    xi[d_of(qs[0])] = Rational(1);
    std::vector<Rational> base = xi_to_delta(ctx, xi);
    for (std::size_t i = 1; i < qs.size(); ++i) {
      std::vector<Rational> other(ctx.num_subsets(), Rational(0));
      other[d_of(qs[i])] = Rational(1);
      std::vector<Rational> row = xi_to_delta(ctx, other);
      for (std::size_t k = 0; k < row.size(); ++k) row[k] -= base[k];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<int> radical_power_dims_peak(
    const DnContext& ctx, const std::vector<std::vector<Rational>>& j) {
  const std::size_t dim = static_cast<std::size_t>(ctx.num_peak_sets());
  std::vector<std::vector<Rational>> gens = echelon_vecs(j, dim);
  std::vector<std::vector<Rational>> power = gens;
  std::vector<int> dims;
  while (!power.empty()) {
    dims.push_back(static_cast<int>(power.size()));
    std::vector<std::vector<Rational>> next;
    for (const auto& a : power)
      for (const auto& b : gens) next.push_back(ctx.pi_mult(a, b));
    power = echelon_vecs(next, dim);
  }
  return dims;
}

std::vector<std::vector<std::vector<Rational>>> module_radical_chain(
    const DnContext& ctx, const std::vector<std::vector<Rational>>& j,
    const std::vector<std::vector<Rational>>& m) {
  const std::size_t dim = static_cast<std::size_t>(ctx.num_subsets());
  std::vector<std::vector<Rational>> gens = echelon_vecs(j, dim);
  std::vector<std::vector<std::vector<Rational>>> chain;
  chain.push_back(echelon_vecs(m, dim));
  while (!chain.back().empty()) {
    std::vector<std::vector<Rational>> next;
    for (const auto& a : gens)
      for (const auto& b : chain.back()) next.push_back(ctx.delta_mult(a, b));
    std::vector<std::vector<Rational>> reduced = echelon_vecs(next, dim);
    if (reduced.empty()) break;
    chain.push_back(std::move(reduced));
  }
  return chain;
}

std::vector<std::vector<Rational>> span_intersection(
    std::size_t dim, const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b) {
  // Zassenhaus: echelonise rows (x | x) for x in a and (y | 0) for y in b;
  // rows whose first block vanished carry intersection vectors in the
  // second block.
  const int off = static_cast<int>(dim);
  RowSpace<Rational, int> space;
  for (const auto& x : a) {
    std::map<int, Rational> row;
    for (std::size_t i = 0; i < dim; ++i)
      if (x[i] != 0) {
        row.emplace(static_cast<int>(i), x[i]);
        row.emplace(off + static_cast<int>(i), x[i]);
      }
    space.insert(std::move(row));
  }
  for (const auto& y : b) space.insert(as_row(y));
  std::vector<std::vector<Rational>> out;
  for (const auto& row : space.rows()) {
    if (row.begin()->first < off) continue;
    std::vector<Rational> v(dim, Rational(0));
    for (const auto& [key, c] : row) v[key - off] = c;
    out.push_back(std::move(v));
  }
  return out;
}

int peak_radical_nilpotency_index(const DnContext& ctx) {
  std::vector<int> dims =
      radical_power_dims_peak(ctx, radical_tilde_xi_differences(ctx));
  return static_cast<int>(dims.size()) + 1;
}

int peak_radical_nilpotency_formula(int n) {
  if (n <= 3) return 1;
  return (n % 2 == 1) ? (n - 1) / 2 : n / 2;
}

}  // namespace peaklab
