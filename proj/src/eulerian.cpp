#include "peaklab/eulerian.hpp"

#include <stdexcept>

#include "peaklab/lie_idempotents.hpp"
#include "peaklab/linalg.hpp"

namespace peaklab {

std::vector<Rational> delta_nk_coords(const DnContext& ctx, int k) {
  std::vector<Rational> out(ctx.num_subsets(), Rational(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    if (subset_size(D) + 1 == k) out[D] = 1;
  return out;
}

std::vector<Rational> xi_nk_delta_coords(const DnContext& ctx, int k) {
  std::vector<Rational> xi(ctx.num_subsets(), Rational(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    if (subset_size(D) + 1 == k) xi[D] = 1;
  return xi_to_delta(ctx, xi);
}

std::vector<Rational> pi_nk_coords(const DnContext& ctx, int k) {
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  for (int idx = 0; idx < ctx.num_peak_sets(); ++idx)
    if (subset_size(ctx.peak_list()[idx]) == k) out[idx] = 1;
  return out;
}

std::vector<Rational> gamma_nk_pi_coords(const DnContext& ctx, int k) {
  std::vector<Rational> g(ctx.num_peak_sets(), Rational(0));
  for (int idx = 0; idx < ctx.num_peak_sets(); ++idx)
    if (subset_size(ctx.peak_list()[idx]) == k) g[idx] = 1;
  return gamma_to_pi(ctx, g);
}

int peak_eulerian_dim(int n) { return (n + 1) / 2; }

XiMap rho_q_xi_map(const Composition& q) {
  XiMap out;
  out[Composition{}] = 1;
  for (int part : q) out = xi_map_outer(out, rho_xi_map(part));
  return out;
}

XiMap rho_nk_xi_map(int n, int k) {
  XiMap out;
  Rational scale(1);
  for (int j = 2; j <= k; ++j) scale /= j;
  for (const Composition& q : compositions(n)) {
    if (comp_length(q) != k) continue;
    for (const auto& [r, c] : rho_q_xi_map(q)) {
      Rational v = c;
      v *= scale;
      auto it = out.try_emplace(r, Rational(0)).first;
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::vector<Rational> rho_nk_delta_coords(const DnContext& ctx, int k) {
  XiMap m = rho_nk_xi_map(ctx.n(), k);
  if (m.empty()) return std::vector<Rational>(ctx.num_subsets(), Rational(0));
  return xi_map_to_delta_coords(ctx, m);
}

std::vector<Rational> rho_tilde_nk_pi_coords(const DnContext& ctx, int k) {
  return iota_tilde_coords(ctx, rho_nk_delta_coords(ctx, k));
}

std::vector<Rational> peak_projector_pi_coords(const DnContext& ctx) {
  int n = ctx.n();
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  Rational scale(1);
  for (int k = 1; k <= n; ++k) {
    scale /= 2;
    if ((n - k) % 2 != 0) continue;
    std::vector<Rational> term = rho_tilde_nk_pi_coords(ctx, k);
    for (int i = 0; i < ctx.num_peak_sets(); ++i) {
      Rational t = term[i];
      t *= scale;
      out[i] += t;
    }
  }
  return out;
}

std::vector<Rational> tilde_xi_nk_pi_coords(const DnContext& ctx, int k) {
  return iota_tilde_coords(ctx, xi_nk_delta_coords(ctx, k));
}

std::vector<Rational> tilde_xi_nk_formula_pi_coords(const DnContext& ctx,
                                                    int k) {
  int n = ctx.n();
  std::vector<Rational> g(ctx.num_peak_sets(), Rational(0));
  for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
    int j = subset_size(ctx.peak_list()[idx]);
    if (n - 1 - 2 * j < k - 1) continue;
    Rational c(binom(n - 1 - 2 * j, k - 1));
    c *= Rational(Integer(1) << k);
    if (j % 2 == 1) c = -c;
    g[idx] = c;
  }
  return gamma_to_pi(ctx, g);
}

std::vector<std::vector<std::vector<Rational>>> peak_eulerian_table(
    const DnContext& ctx) {
  int dim = peak_eulerian_dim(ctx.n());
  std::vector<std::vector<Rational>> basis;
  std::vector<std::map<int, Rational>> gens;
  for (int k = 0; k < dim; ++k) {
    basis.push_back(pi_nk_coords(ctx, k));
    std::map<int, Rational> row;
    for (int i = 0; i < ctx.num_peak_sets(); ++i)
      if (basis.back()[i] != 0) row[i] = basis.back()[i];
    gens.push_back(std::move(row));
  }
  std::vector<std::vector<std::vector<Rational>>> table(
      dim, std::vector<std::vector<Rational>>(dim));
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) {
      std::vector<Rational> prod = ctx.pi_mult(basis[j], basis[k]);
      std::map<int, Rational> target;
      for (int i = 0; i < ctx.num_peak_sets(); ++i)
        if (prod[i] != 0) target[i] = prod[i];
      auto coeffs = solve_in_span<Rational, int>(gens, target);
      if (!coeffs)
        throw std::logic_error("peak Eulerian span is not closed under products");
      table[j][k] = *coeffs;
    }
  return table;
}

}  // namespace peaklab
