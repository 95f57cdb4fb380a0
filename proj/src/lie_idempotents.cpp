#include "peaklab/lie_idempotents.hpp"

#include <stdexcept>

#include "peaklab/linalg.hpp"

namespace peaklab {

std::vector<Rational> omega_delta_coords(const DnContext& ctx) {
  int n = ctx.n();
  std::vector<Rational> out(ctx.num_subsets(), Rational(0));
  for (int k = 0; k < n; ++k) {
    Composition hook(k, 1);
    hook.push_back(n - k);
    out[d_of(hook)] = (k % 2 == 0) ? 1 : -1;
  }
  return out;
}

Element<Rational> omega_elem(int n) {
  const DnContext& ctx = DnContext::get(n);
  return delta_coords_to_elem(ctx, omega_delta_coords(ctx));
}

XiMap rho_xi_map(int n) {
  XiMap out;
  for (const Composition& q : compositions(n)) {
    int l = comp_length(q);
    Rational c(l % 2 == 1 ? 1 : -1, l);
    out[q] = c;
  }
  return out;
}

Element<Rational> rho_elem(int n) {
  const DnContext& ctx = DnContext::get(n);
  return delta_coords_to_elem(ctx, xi_map_to_delta_coords(ctx, rho_xi_map(n)));
}

std::vector<Cyclo> klyachko_delta_coords(const DnContext& ctx, long long i) {
  const CycloField& field = CycloField::get(ctx.n());
  std::vector<Cyclo> out(ctx.num_subsets(), Cyclo(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    out[D] = Cyclo::root_of_unity(field, i * subset_sum(D));
  return out;
}

Element<Cyclo> klyachko_elem(int n, long long i) {
  const DnContext& ctx = DnContext::get(n);
  return delta_coords_to_elem_t<Cyclo>(ctx, klyachko_delta_coords(ctx, i));
}

std::vector<Rational> m_z_delta_coords(const DnContext& ctx, int z) {
  int n = ctx.n();
  int want = ((z % n) + n) % n;
  std::vector<Rational> out(ctx.num_subsets(), Rational(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    if (subset_sum(D) % n == want) out[D] = 1;
  return out;
}

std::vector<Rational> peak_dynkin_pi_coords(const DnContext& ctx) {
  return iota_tilde_coords(ctx, omega_delta_coords(ctx));
}

std::vector<Rational> peak_dynkin_closed_pi_coords(const DnContext& ctx) {
  int n = ctx.n();
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  out[ctx.peak_index(0)] = 2;
  for (int k = 2; k <= n - 1; ++k) {
    Subset P = Subset{1} << (k - 1);
    out[ctx.peak_index(P)] = (k % 2 == 0) ? -4 : 4;
  }
  return out;
}

Element<Rational> peak_dynkin_elem(int n) {
  const DnContext& ctx = DnContext::get(n);
  return pi_coords_to_elem(ctx, peak_dynkin_pi_coords(ctx));
}

std::vector<Rational> peak_canonical_pi_coords(const DnContext& ctx) {
  return iota_tilde_coords(
      ctx, xi_map_to_delta_coords(ctx, rho_xi_map(ctx.n())));
}

std::vector<Rational> peak_canonical_gamma_coords(const DnContext& ctx) {
  int n = ctx.n();
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  if (n % 2 == 0) return out;
  for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
    int size = subset_size(ctx.peak_list()[idx]);
    Rational c(size % 2 == 0 ? 2 : -2, n - 2 * size);
    out[idx] = c;
  }
  return out;
}

Rational peak_canonical_coeff(int n, int k) {
  if (n % 2 == 0) throw std::invalid_argument("peak-count coefficients need odd degree");
  Rational sum(0);
  for (int j = 0; j <= k; ++j) {
    Rational term(binom(k, j), n - 2 * j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Element<Rational> peak_canonical_elem(int n) {
  const DnContext& ctx = DnContext::get(n);
  return pi_coords_to_elem(ctx, peak_canonical_pi_coords(ctx));
}

std::optional<std::vector<Rational>> peak_lie_idempotent_solve(
    const DnContext& ctx) {
  // Unknown alpha = sum_P x_P Pi^P subject to omega alpha = n alpha and
  // alpha omega = omega; solve the affine system with one generator column
  // per peak set, stacking the Pi block on top of the Delta block.
  int np = ctx.num_peak_sets(), ns = ctx.num_subsets();
  std::vector<Rational> omega = omega_delta_coords(ctx);
  std::vector<std::map<int, Rational>> gens;
  for (int p = 0; p < np; ++p) {
    std::vector<Rational> unit(np, Rational(0));
    unit[p] = 1;
    std::vector<Rational> left = ctx.delta_act_pi(omega, unit);
    left[p] -= Rational(ctx.n());
    std::vector<Rational> right = ctx.delta_mult(pi_to_delta(ctx, unit), omega);
    std::map<int, Rational> col;
    for (int i = 0; i < np; ++i)
      if (left[i] != 0) col[i] = left[i];
    for (int i = 0; i < ns; ++i)
      if (right[i] != 0) col[np + i] = right[i];
    gens.push_back(std::move(col));
  }
  std::map<int, Rational> target;
  for (int i = 0; i < ns; ++i)
    if (omega[i] != 0) target[np + i] = omega[i];
  return solve_in_span<Rational, int>(gens, target);
}

std::vector<Rational> m_tilde_pi_coords(const DnContext& ctx, int z) {
  return iota_tilde_coords(ctx, m_z_delta_coords(ctx, z));
}

std::vector<Rational> m_tilde_pi_coords_formula(const DnContext& ctx, int z) {
  int n = ctx.n();
  int want = ((z % n) + n) % n;
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
    if (subset_sum(D) % n != want) continue;
    Subset A = D ^ shift_subset(D, 1, n);
    for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
      Subset P = ctx.peak_list()[idx];
      if ((P & ~A) != 0) continue;
      out[idx] += Rational(Integer(1) << (subset_size(P) + 1));
    }
  }
  return out;
}

std::vector<Cyclo> klyachko_tilde_pi_coords(const DnContext& ctx, long long i) {
  const CycloField& field = CycloField::get(ctx.n());
  std::vector<Cyclo> out(ctx.num_peak_sets(), Cyclo(0));
  for (int z = 0; z < ctx.n(); ++z) {
    Cyclo root = Cyclo::root_of_unity(field, i * z);
    std::vector<Rational> m = m_tilde_pi_coords(ctx, z);
    for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
      if (m[idx] == 0) continue;
      Cyclo t = root;
      t *= Cyclo(m[idx]);
      out[idx] += t;
    }
  }
  return out;
}

int klyachko_peak_span_dim(int n) {
  const DnContext& ctx = DnContext::get(n);
  RowSpace<Rational, int> space;
  for (int z = 0; z < n; ++z) {
    std::vector<Rational> m = m_tilde_pi_coords(ctx, z);
    std::map<int, Rational> row;
    for (int i = 0; i < ctx.num_peak_sets(); ++i)
      if (m[i] != 0) row[i] = m[i];
    space.insert(row);
  }
  return space.rank();
}

XiMap gamma_n_xi_map(int n) {
  const DnContext& ctx = DnContext::get(n);
  if (n % 2 == 0) return delta_coords_to_xi_map(ctx, omega_delta_coords(ctx));
  std::vector<Rational> delta = pi_to_delta(ctx, peak_dynkin_pi_coords(ctx));
  XiMap out = delta_coords_to_xi_map(ctx, delta);
  for (auto& [q, c] : out) c /= 2;
  return out;
}

XiMap gamma_q_xi_map(const Composition& q) {
  XiMap out;
  out[Composition{}] = 1;
  for (int part : q) out = xi_map_outer(out, gamma_n_xi_map(part));
  return out;
}

std::vector<Rational> gamma_q_delta_coords(const DnContext& ctx,
                                           const Composition& q) {
  return xi_map_to_delta_coords(ctx, gamma_q_xi_map(q));
}

XiMap omega_q_xi_map(const Composition& q) {
  XiMap out;
  out[Composition{}] = 1;
  for (int part : q) {
    const DnContext& ctx = DnContext::get(part);
    out = xi_map_outer(out, delta_coords_to_xi_map(ctx, omega_delta_coords(ctx)));
  }
  return out;
}

namespace {

Element<Rational> gamma_n_elem(int n) {
  const DnContext& ctx = DnContext::get(n);
  if (n % 2 == 0) return omega_elem(n);
  std::vector<Rational> half = peak_dynkin_pi_coords(ctx);
  for (auto& c : half) c /= 2;
  return pi_coords_to_elem(ctx, half);
}

}  // namespace

Element<Rational> gamma_hash_elem(const Composition& q) {
  Element<Rational> out = Element<Rational>::one();
  for (int part : q) out = hash_prod(out, gamma_n_elem(part));
  return out;
}

Element<Rational> gamma_q_elem(const Composition& q) {
  const DnContext& ctx = DnContext::get(comp_sum(q));
  return delta_coords_to_elem(ctx, gamma_q_delta_coords(ctx, q));
}

Rational class_coefficient_sum(const Element<Rational>& a, const Partition& p) {
  int n = comp_sum(p);
  Rational sum(0);
  for (const auto& [pi, c] : a.degree_part(n))
    if (cycle_type(pi) == p) sum += c;
  return sum;
}

PeakParityCounts peak_parity_counts(const Partition& p) {
  int n = comp_sum(p);
  PeakParityCounts counts;
  for (const Permutation& pi : all_permutations(n)) {
    if (cycle_type(pi) != p) continue;
    Subset P = peak_set(pi);
    int size = subset_size(P);
    if (size == 0) {
      ++counts.none;
    } else if (size == 1) {
      int pos = subset_sum(P);
      if (pos % 2 == 0)
        ++counts.one_even;
      else
        ++counts.one_odd;
    }
  }
  return counts;
}

}  // namespace peaklab
