#include "peaklab/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "peaklab/class_functions.hpp"
#include "peaklab/combinatorics.hpp"
#include "peaklab/cyclotomic.hpp"
#include "peaklab/descent_peak.hpp"
#include "peaklab/element.hpp"
#include "peaklab/eulerian.hpp"
#include "peaklab/free_lie.hpp"
#include "peaklab/lie_idempotents.hpp"
#include "peaklab/linalg.hpp"
#include "peaklab/permutation.hpp"
#include "peaklab/scalar.hpp"
#include "peaklab/structure_theory.hpp"

namespace peaklab::checks {
namespace {

using Elt = Element<Rational>;

CheckResult failure(std::string detail) { return {false, std::move(detail)}; }

CheckResult ok(long long count, int bound, const std::string& extra = "") {
  std::ostringstream os;
  os << count << " instance" << (count == 1 ? "" : "s") << " verified (n <= "
     << bound << ")";
  if (!extra.empty()) os << "; " << extra;
  return {true, os.str()};
}

std::map<int, Rational> as_row(const std::vector<Rational>& v) {
  std::map<int, Rational> row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) row.emplace(static_cast<int>(i), v[i]);
  return row;
}

RowSpace<Rational, int> space_of(
    const std::vector<std::vector<Rational>>& rows) {
  RowSpace<Rational, int> s;
  for (const auto& r : rows) s.insert(as_row(r));
  return s;
}

bool span_contains_all(const RowSpace<Rational, int>& sup,
                       const std::vector<std::vector<Rational>>& sub) {
  for (const auto& r : sub)
    if (!sup.contains(as_row(r))) return false;
  return true;
}

bool spans_equal(const std::vector<std::vector<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b) {
  RowSpace<Rational, int> sa = space_of(a);
  RowSpace<Rational, int> sb = space_of(b);
  return sa.rank() == sb.rank() && span_contains_all(sa, b);
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

std::vector<Rational> scaled(std::vector<Rational> v, const Rational& s) {
  for (auto& c : v) c *= s;
  return v;
}

bool is_hook(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 1) return false;
  return true;
}

std::vector<Rational> unit_delta(const DnContext& ctx, Subset d) {
  std::vector<Rational> v(ctx.num_subsets(), Rational(0));
  v[d] = Rational(1);
  return v;
}

// tilde-Xi^n in Pi and Delta coordinates (2 on the empty peak set).
std::vector<Rational> txi_pi(const DnContext& ctx) {
  std::vector<Rational> v(ctx.num_peak_sets(), Rational(0));
  v[ctx.peak_index(0)] = Rational(2);
  return v;
}

std::vector<Rational> txi_delta(const DnContext& ctx) {
  return pi_to_delta(ctx, txi_pi(ctx));
}

std::vector<std::vector<Rational>> peak_radical_delta(const DnContext& ctx) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : radical_tilde_xi_differences(ctx))
    rows.push_back(pi_to_delta(ctx, r));
  return rows;
}

Element<Cyclo> to_cyclo(const Elt& a) {
  return map_coefficients<Cyclo>(a, [](const Rational& c) { return Cyclo(c); });
}

// Klyachko element of degree d whose root of unity lives in the cyclotomic
// field of order `order` (allows d < order).
Element<Cyclo> kappa_over(int order, int d, long long i) {
  const CycloField& field = CycloField::get(order);
  const DnContext& ctx = DnContext::get(d);
  std::vector<Cyclo> coords(ctx.num_subsets(), Cyclo(0));
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    coords[D] = Cyclo::root_of_unity(field, i * subset_sum(D));
  return delta_coords_to_elem_t<Cyclo>(ctx, coords);
}

// Relabels the letters of every word by a constant offset.
FreeElt shift_letters(const FreeElt& x, int offset) {
  FreeElt out;
  for (const auto& [w, c] : x) {
    Word v = w;
    for (int& letter : v) letter += offset;
    free_add(out, v, c);
  }
  return out;
}

// Default Lie series member of degree m as a group-algebra element.
Elt gamma_elem_of_degree(int m) {
  if (m % 2 == 0) return omega_elem(m);
  const DnContext& ctx = DnContext::get(m);
  auto coords = peak_dynkin_pi_coords(ctx);
  for (auto& c : coords) c /= Rational(2);
  return pi_coords_to_elem(ctx, coords);
}

bool has_even_part(const Composition& q) {
  for (int part : q)
    if (part % 2 == 0) return true;
  return false;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

std::string at_n(int n) { return "n=" + std::to_string(n); }

// ---------------------------------------------------------------------------
// 1. The peak span is a left ideal; its dimension is Fibonacci, matching the
//    tau-fixed subspace of the descent algebra.
// ---------------------------------------------------------------------------

CheckResult chk_left_ideal(int bound) {
  long long count = 0;
  int dims_bound = std::min(bound, 8);
  for (int n = 1; n <= dims_bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    if (ctx.num_peak_sets() != fibonacci_dim(n))
      return failure(at_n(n) + ": number of peak sets " +
                     std::to_string(ctx.num_peak_sets()) + " != f_n " +
                     std::to_string(fibonacci_dim(n)));
    ++count;
    // dim{phi in D_n : phi tau(n,1) = phi}: the Delta coefficients must be
    // constant on the components of D ~ Des(sigma tau) over sigma with
    // Des(sigma) = D, so the dimension is the number of components.
    Dsu dsu(ctx.num_subsets());
    Permutation t = tau(n, 1);
    for (std::size_t i = 0; i < ctx.perms().size(); ++i)
      dsu.unite(static_cast<int>(ctx.des_of(i)),
                static_cast<int>(descent_set(compose(ctx.perms()[i], t))));
    if (dsu.components() != fibonacci_dim(n))
      return failure(at_n(n) + ": tau-fixed subspace of D_n has dimension " +
                     std::to_string(dsu.components()) + ", expected f_n = " +
                     std::to_string(fibonacci_dim(n)));
    ++count;
  }
  int prod_bound = std::min(bound, 6);
  for (int n = 1; n <= prod_bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
      for (Subset P : ctx.peak_list()) {
        Elt prod = inner(delta_elem(n, D), pi_elem(n, P));
        Membership m = in_peak_algebra(prod);
        if (!m.ok)
          return failure(at_n(n) + ": Delta^{" + subset_key(D) + "} * Pi^{" +
                         subset_key(P) + "} is not peak-class constant");
        ++count;
      }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 2. Combinatorial characterisation: phi in D_n lies in P_n iff
//    phi tau(n,1) = phi.
// ---------------------------------------------------------------------------

CheckResult chk_comb_char(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    for (Subset D = 0; D < (Subset{1} << std::max(0, n - 1)); ++D) {
      Elt a = xi_elem(n, D);
      bool fixed = tau_one_fixed(a).ok;
      bool peak = in_peak_algebra(a).ok;
      if (fixed != peak)
        return failure(at_n(n) + ": Xi^{" + subset_key(D) +
                       "}: tau-fixed=" + (fixed ? "yes" : "no") +
                       " but peak membership=" + (peak ? "yes" : "no"));
      ++count;
    }
  }
  for (int n = 2; n <= std::min(bound, 5); ++n) {
    Subset m = Subset{1} << (n - 1);
    for (Subset D = 0; D < m; ++D)
      for (Subset E = D + 1; E < m; ++E) {
        Elt a = xi_elem(n, D) + xi_elem(n, E) * Rational(3);
        if (tau_one_fixed(a).ok != in_peak_algebra(a).ok)
          return failure(at_n(n) + ": Xi^{" + subset_key(D) + "} + 3 Xi^{" +
                         subset_key(E) +
                         "} breaks the tau-fixed characterisation");
        ++count;
      }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 3. The descent span is closed under the group-algebra product; the
//    character map c is multiplicative with image of dimension #partitions.
// ---------------------------------------------------------------------------

CheckResult chk_sol_result(int bound) {
  long long count = 0;
  for (int n = 1; n <= std::min(bound, 5); ++n) {
    const DnContext& ctx = DnContext::get(n);
    Subset m = static_cast<Subset>(ctx.num_subsets());
    for (Subset D = 0; D < m; ++D)
      for (Subset E = 0; E < m; ++E) {
        Elt prod = inner(delta_elem(n, D), delta_elem(n, E));
        auto coords = elem_to_delta_coords(ctx, prod);
        if (!coords)
          return failure(at_n(n) + ": Delta^{" + subset_key(D) +
                         "} * Delta^{" + subset_key(E) +
                         "} left the descent span");
        if (*coords != ctx.delta_mult(unit_delta(ctx, D), unit_delta(ctx, E)))
          return failure(at_n(n) + ": structure constants at Delta^{" +
                         subset_key(D) + "} * Delta^{" + subset_key(E) +
                         "} disagree with the permutation-level product");
        ++count;
      }
    for (const Composition& q : compositions(n)) {
      std::vector<Rational> xq(ctx.num_subsets(), Rational(0));
      xq[d_of(q)] = 1;
      std::vector<Rational> dq = xi_to_delta(ctx, xq);
      for (const Composition& r : compositions(n)) {
        std::vector<Rational> xr(ctx.num_subsets(), Rational(0));
        xr[d_of(r)] = 1;
        std::vector<Rational> dr = xi_to_delta(ctx, xr);
        ClassFunction lhs = solomon_c(ctx, ctx.delta_mult(dq, dr));
        ClassFunction rhs =
            kronecker_product(solomon_c(ctx, dq), solomon_c(ctx, dr));
        if (!(lhs == rhs))
          return failure(at_n(n) + ": c(Xi^{" + comp_key(q) + "} * Xi^{" +
                         comp_key(r) + "}) != c(Xi^q) . c(Xi^r) pointwise");
        ++count;
      }
    }
  }
  for (int n = 1; n <= std::min(bound, 7); ++n) {
    if (solomon_image_rank(n) != static_cast<int>(partitions(n).size()))
      return failure(at_n(n) + ": image rank of c is " +
                     std::to_string(solomon_image_rank(n)) + ", expected " +
                     std::to_string(partitions(n).size()));
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 4. Bialgebra on the descent side: Xi^r . Xi^q = Xi^{r.q}; the coproduct is
//    multiplicative and coassociative.
// ---------------------------------------------------------------------------

CheckResult chk_bialg_d(int bound) {
  long long count = 0;
  for (int a = 1; a < bound; ++a)
    for (int b = 1; a + b <= bound; ++b)
      for (const Composition& r : compositions(a))
        for (const Composition& q : compositions(b)) {
          if (outer(xi_elem(r), xi_elem(q)) != xi_elem(concat(r, q)))
            return failure("Xi^{" + comp_key(r) + "} . Xi^{" + comp_key(q) +
                           "} != Xi^{" + comp_key(concat(r, q)) + "}");
          ++count;
        }
  // Coordinate route (Xi-map convolution) on non-basis elements.
  for (int a = 1; a < std::min(bound, 6); ++a)
    for (int b = 1; a + b <= std::min(bound, 6); ++b) {
      const DnContext& ctx = DnContext::get(a + b);
      std::vector<Rational> lhs = xi_map_to_delta_coords(
          ctx, xi_map_outer(rho_xi_map(a), rho_xi_map(b)));
      auto rhs = elem_to_delta_coords(ctx, outer(rho_elem(a), rho_elem(b)));
      if (!rhs || lhs != *rhs)
        return failure("Xi-map convolution disagrees with the outer product "
                       "of rho_" +
                       std::to_string(a) + " and rho_" + std::to_string(b));
      ++count;
    }
  // Multiplicativity of the coproduct on the Xi basis.
  for (int a = 1; a < std::min(bound, 6); ++a)
    for (int b = 1; a + b <= std::min(bound, 6); ++b)
      for (const Composition& r : compositions(a))
        for (const Composition& q : compositions(b)) {
          TensorMap lhs = coproduct_xi(concat(r, q));
          TensorMap rhs;
          for (const auto& [pr, c] : coproduct_xi(r))
            for (const auto& [pq, d] : coproduct_xi(q)) {
              Rational v = c * d;
              rhs[{concat(pr.first, pq.first), concat(pr.second, pq.second)}] +=
                  v;
            }
          if (lhs != rhs)
            return failure("coproduct not multiplicative at Xi^{" +
                           comp_key(r) + "}, Xi^{" + comp_key(q) + "}");
          ++count;
        }
  // Coassociativity via triple expansions.
  using Triple = std::tuple<Composition, Composition, Composition>;
  for (int n = 1; n <= std::min(bound, 5); ++n)
    for (const Composition& q : compositions(n)) {
      std::map<Triple, Rational> left, right;
      for (const auto& [pr, c] : coproduct_xi(q)) {
        for (const auto& [pr2, d] : coproduct_xi(pr.first)) {
          Rational v = c * d;
          left[{pr2.first, pr2.second, pr.second}] += v;
        }
        for (const auto& [pr2, d] : coproduct_xi(pr.second)) {
          Rational v = c * d;
          right[{pr.first, pr2.first, pr2.second}] += v;
        }
      }
      if (left != right)
        return failure("coproduct not coassociative at Xi^{" + comp_key(q) +
                       "}");
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 5. Vertical-horizontal exchange.
// ---------------------------------------------------------------------------

CheckResult chk_vert_hor(int bound) {
  long long count = 0;
  for (int k = 1; k < bound; ++k)
    for (int m = 1; k + m <= bound; ++m) {
      Elt lhs = outer(Elt::basis(reverse_perm(k)), id_elem(m));
      Composition a(k, 1);
      a.push_back(m);
      Composition b(k - 1, 1);
      b.push_back(m + 1);
      if (lhs != delta_elem(a) + delta_elem(b))
        return failure("Delta^{1^" + std::to_string(k) + "} . Delta^{(" +
                       std::to_string(m) + ")} != Delta^{" + comp_key(a) +
                       "} + Delta^{" + comp_key(b) + "}");
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 6. Peaks are computed from descents; peak sets biject with odd
//    compositions; Pi collects whole descent classes.
// ---------------------------------------------------------------------------

CheckResult chk_peak_comp(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (std::size_t i = 0; i < ctx.perms().size(); ++i) {
      if (ctx.peak_of(i) != p_of_descents(ctx.des_of(i), n))
        return failure(at_n(n) + ": Peak(" + perm_key(ctx.perms()[i]) +
                       ") is not {i in Des : i >= 2, i-1 not in Des}");
      ++count;
    }
    // Pi^P in Delta coordinates is the 0/1 indicator of the descent fiber.
    for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
      Subset P = ctx.peak_list()[idx];
      std::vector<Rational> x(ctx.num_peak_sets(), Rational(0));
      x[idx] = 1;
      std::vector<Rational> d = pi_to_delta(ctx, x);
      for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
        Rational want(p_of_descents(D, n) == P ? 1 : 0);
        if (d[D] != want)
          return failure(at_n(n) + ": Pi^{" + subset_key(P) +
                         "} has Delta coefficient != indicator at D={" +
                         subset_key(D) + "}");
      }
      ++count;
    }
    // Bijection between peak sets and odd compositions.
    std::set<Composition> images;
    for (Subset P : ctx.peak_list()) {
      Composition q = odd_comp_of_peak(P, n);
      if (!is_odd_composition(q) || comp_sum(q) != n)
        return failure(at_n(n) + ": odd composition attached to peak set {" +
                       subset_key(P) + "} is invalid");
      if (peak_set_of_odd(q) != P)
        return failure(at_n(n) + ": peak set of the odd composition " +
                       comp_key(q) + " is not {" + subset_key(P) + "}");
      images.insert(q);
      ++count;
    }
    if (static_cast<long long>(images.size()) != fibonacci_dim(n) ||
        static_cast<long long>(odd_compositions(n).size()) !=
            fibonacci_dim(n))
      return failure(at_n(n) +
                     ": peak sets and odd compositions do not both count f_n");
    ++count;
  }
  for (int n = 1; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (Subset P : ctx.peak_list()) {
      Elt sum;
      for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
        if (p_of_descents(D, n) == P) sum += delta_elem(n, D);
      if (sum != pi_elem(n, P))
        return failure(at_n(n) + ": Pi^{" + subset_key(P) +
                       "} is not the sum of its descent classes");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 7. Gamma in the Xi basis, with coordinate round trips.
// ---------------------------------------------------------------------------

CheckResult chk_gamma_xi(int bound) {
  long long count = 0;
  XiMap g3 = gamma_xi_map({3});
  if (g3.size() != 2 || g3[{2, 1}] != 1 || g3[{3}] != -1)
    return failure("frozen expansion Gamma^{(3)} = Xi^{2.1} - Xi^{3} broken");
  ++count;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Composition& q : odd_compositions(n)) {
      Elt fromxi = delta_coords_to_elem(
          ctx, xi_map_to_delta_coords(ctx, gamma_xi_map(q)));
      if (fromxi != gamma_elem(q))
        return failure(at_n(n) + ": Xi expansion of Gamma^{" + comp_key(q) +
                       "} disagrees with the peak-class sum");
      ++count;
    }
    // Round trips between Pi and Gamma coordinates.
    std::vector<Rational> x(ctx.num_peak_sets(), Rational(0));
    for (int i = 0; i < ctx.num_peak_sets(); ++i) x[i] = Rational(i + 1, 2);
    if (pi_to_gamma(ctx, gamma_to_pi(ctx, x)) != x ||
        gamma_to_pi(ctx, pi_to_gamma(ctx, x)) != x)
      return failure(at_n(n) + ": Pi <-> Gamma coordinate maps are not "
                     "mutually inverse");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 8. The peak spans multiply under the outer product; Gamma concatenates.
// ---------------------------------------------------------------------------

CheckResult chk_out_prod_p(int bound) {
  long long count = 0;
  for (int a = 1; a < bound; ++a)
    for (int b = 1; a + b <= bound; ++b)
      for (const Composition& r : odd_compositions(a))
        for (const Composition& q : odd_compositions(b)) {
          if (outer(gamma_elem(r), gamma_elem(q)) != gamma_elem(concat(r, q)))
            return failure("Gamma^{" + comp_key(r) + "} . Gamma^{" +
                           comp_key(q) + "} != Gamma^{" +
                           comp_key(concat(r, q)) + "}");
          ++count;
        }
  for (int a = 1; a < std::min(bound, 6); ++a)
    for (int b = 1; a + b <= std::min(bound, 6); ++b)
      for (Subset P : peak_sets(a))
        for (Subset Q : peak_sets(b)) {
          if (!in_peak_algebra(outer(pi_elem(a, P), pi_elem(b, Q))).ok)
            return failure("Pi^{" + subset_key(P) + "} (deg " +
                           std::to_string(a) + ") . Pi^{" + subset_key(Q) +
                           "} (deg " + std::to_string(b) +
                           ") is not peak-class constant");
          ++count;
        }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 9. Hook expansion and star form of tilde-Xi^n.
// ---------------------------------------------------------------------------

CheckResult chk_re_xi_tilde(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    Elt hooks;
    for (int k = 0; k <= n - 1; ++k) {
      Composition hook(k, 1);
      hook.push_back(n - k);
      hooks += delta_elem(hook);
    }
    if (tilde_xi_elem(n) != hooks * Rational(2))
      return failure(at_n(n) +
                     ": tilde-Xi^n != 2 sum_k Delta^{1^k.(n-k)}");
    ++count;
    Elt star;
    for (int k = 0; k <= n; ++k) {
      Elt left = (k == 0) ? Elt::one() : Elt::basis(reverse_perm(k));
      Elt right = (n - k == 0) ? Elt::one() : id_elem(n - k);
      star += outer(left, right);
    }
    if (tilde_xi_elem(n) != star)
      return failure(at_n(n) +
                     ": tilde-Xi^n != sum_k Delta^{1^k} . Delta^{(n-k)}");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 10. The four expansions of tilde-Xi^r.
// ---------------------------------------------------------------------------

CheckResult chk_transition_tilde_xi(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Composition& r : compositions(n)) {
      Elt direct = tilde_xi_elem(r);
      if (pi_coords_to_elem(ctx, tilde_xi_pi_coords(ctx, r)) != direct)
        return failure(at_n(n) + ": Pi expansion of tilde-Xi^{" + comp_key(r) +
                       "} disagrees with the outer product");
      if (pi_coords_to_elem(
              ctx, gamma_to_pi(ctx, tilde_xi_gamma_coords(ctx, r))) != direct)
        return failure(at_n(n) + ": signed Gamma expansion of tilde-Xi^{" +
                       comp_key(r) + "} disagrees");
      if (pi_coords_to_elem(ctx, gamma_to_pi(
                                     ctx, tilde_xi_gamma_coords_odd(ctx, r))) !=
          direct)
        return failure(at_n(n) + ": odd-refinement Gamma expansion of "
                       "tilde-Xi^{" +
                       comp_key(r) + "} disagrees");
      if (delta_coords_to_elem(
              ctx, xi_map_to_delta_coords(ctx, tilde_xi_xi_map(r))) != direct)
        return failure(at_n(n) + ": Xi expansion of tilde-Xi^{" + comp_key(r) +
                       "} disagrees");
      count += 4;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 11. Inner products by tilde-Xi^n.
// ---------------------------------------------------------------------------

CheckResult chk_multi_tilde_xi(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    Composition ones(n, 1);
    if (inner(delta_elem(ones), tilde_xi_elem(n)) != tilde_xi_elem(n))
      return failure(at_n(n) + ": Delta^{1^n} * tilde-Xi^n != tilde-Xi^n");
    ++count;
    Elt rhs = tilde_xi_elem(n) * Rational(2);
    for (int k = 1; k <= n - 1; ++k)
      rhs += tilde_xi_elem(Composition{k, n - k});
    if (inner(tilde_xi_elem(n), tilde_xi_elem(n)) != rhs)
      return failure(at_n(n) + ": tilde-Xi^n * tilde-Xi^n != 2 tilde-Xi^n + "
                     "sum_k tilde-Xi^{k.(n-k)}");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 12. Delta^D * tilde-Xi^n and its closed form.
// ---------------------------------------------------------------------------

CheckResult chk_tilde_delta(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
      Elt lhs = inner(delta_elem(n, D), tilde_xi_elem(n));
      if (lhs != tilde_delta_rhs(n, D))
        return failure(at_n(n) + ": Delta^{" + subset_key(D) +
                       "} * tilde-Xi^n != sum over peak sets inside "
                       "sym-diff(D, D+1) of 2^{|P|+1} Pi^P");
      if (pi_coords_to_elem(ctx, iota_tilde_coords(ctx, unit_delta(ctx, D))) !=
          lhs)
        return failure(at_n(n) + ": coordinate route of Delta^{" +
                       subset_key(D) + "} * tilde-Xi^n disagrees");
      count += 2;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 13. Right multiplication by tilde-Xi^n: onto P_n, injective on P_n.
// ---------------------------------------------------------------------------

CheckResult chk_outer_epi(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    RowSpace<Rational, int> image;
    for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
      image.insert(as_row(iota_tilde_coords(ctx, unit_delta(ctx, D))));
    if (image.rank() != fibonacci_dim(n))
      return failure(at_n(n) + ": image of D_n under right multiplication by "
                     "tilde-Xi^n has rank " +
                     std::to_string(image.rank()) + ", expected f_n");
    ++count;
    RowSpace<Rational, int> restricted;
    for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
      std::vector<Rational> x(ctx.num_peak_sets(), Rational(0));
      x[idx] = 1;
      restricted.insert(
          as_row(iota_tilde_coords(ctx, pi_to_delta(ctx, x))));
    }
    if (restricted.rank() != fibonacci_dim(n))
      return failure(at_n(n) +
                     ": restriction to P_n is not injective (rank " +
                     std::to_string(restricted.rank()) + ")");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 14. Bialgebra on the peak side: products, basis, coproduct of tilde-Xi^n.
// ---------------------------------------------------------------------------

CheckResult chk_bialg_p(int bound) {
  long long count = 0;
  for (int a = 1; a < bound; ++a)
    for (int b = 1; a + b <= bound; ++b)
      for (const Composition& r : odd_compositions(a))
        for (const Composition& q : odd_compositions(b)) {
          if (outer(tilde_xi_elem(r), tilde_xi_elem(q)) !=
              tilde_xi_elem(concat(r, q)))
            return failure("tilde-Xi^{" + comp_key(r) + "} . tilde-Xi^{" +
                           comp_key(q) + "} != tilde-Xi^{" +
                           comp_key(concat(r, q)) + "}");
          ++count;
        }
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<std::map<int, Rational>> rows;
    for (const Composition& q : odd_compositions(n))
      rows.push_back(as_row(tilde_xi_comp_pi_coords(ctx, q)));
    if (rank_of(rows) != fibonacci_dim(n))
      return failure(at_n(n) +
                     ": {tilde-Xi^q : q odd} does not span P_n (rank " +
                     std::to_string(rank_of(rows)) + ")");
    ++count;
  }
  for (int n = 1; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    XiMap m = delta_coords_to_xi_map(
        ctx, *elem_to_delta_coords(ctx, tilde_xi_elem(n)));
    TensorMap lhs = coproduct(m);
    TensorMap rhs;
    for (int k = 0; k <= n; ++k) {
      XiMap mk, mnk;
      if (k == 0) {
        mk[{}] = 1;
      } else {
        const DnContext& ck = DnContext::get(k);
        mk = delta_coords_to_xi_map(
            ck, *elem_to_delta_coords(ck, tilde_xi_elem(k)));
      }
      if (n - k == 0) {
        mnk[{}] = 1;
      } else {
        const DnContext& cnk = DnContext::get(n - k);
        mnk = delta_coords_to_xi_map(
            cnk, *elem_to_delta_coords(cnk, tilde_xi_elem(n - k)));
      }
      for (const auto& [a, c] : mk)
        for (const auto& [b, d] : mnk) {
          Rational v = c * d;
          rhs[{a, b}] += v;
        }
    }
    for (auto it = rhs.begin(); it != rhs.end();)
      it = (it->second == 0) ? rhs.erase(it) : std::next(it);
    if (lhs != rhs)
      return failure(at_n(n) + ": coproduct(tilde-Xi^n) != sum_k tilde-Xi^k "
                     "(x) tilde-Xi^{n-k}");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 15. Kernel of the character map on the descent side.
// ---------------------------------------------------------------------------

CheckResult chk_sol_rad(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    int parts = static_cast<int>(partitions(n).size());
    if (solomon_image_rank(n) != parts)
      return failure(at_n(n) + ": image rank of c != #partitions");
    int kernel = xi_difference_rank(n);
    if (kernel != (1 << (n - 1)) - parts)
      return failure(at_n(n) + ": span of the Xi rearrangement differences "
                     "has dimension " +
                     std::to_string(kernel) + ", expected 2^{n-1} - " +
                     std::to_string(parts));
    count += 2;
  }
  // The differences do lie in the kernel: c(Xi^q) only depends on the
  // multiset of parts.
  for (int n = 1; n <= std::min(bound, 6); ++n)
    for (const Composition& q : compositions(n)) {
      if (!(xi_character(q) == xi_character(sorted_partition(q))))
        return failure(at_n(n) + ": c(Xi^{" + comp_key(q) +
                       "}) is not rearrangement invariant");
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 16. Image and kernel of the character map on the peak side.
// ---------------------------------------------------------------------------

CheckResult chk_p_c_im(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    int odd = static_cast<int>(odd_partitions(n).size());
    if (solomon_peak_image_rank(n) != odd)
      return failure(at_n(n) + ": image rank of c on P_n != #odd partitions");
    if (tilde_xi_difference_rank(n) !=
        static_cast<int>(fibonacci_dim(n)) - odd)
      return failure(at_n(n) + ": tilde-Xi rearrangement differences have "
                     "dimension != f_n - #odd partitions");
    ClassFunction cf = solomon_c(ctx, txi_delta(ctx));
    ClassFunction expl;
    expl.n = n;
    for (const Partition& p : odd_partitions(n))
      expl.add(p, Rational(Integer(1) << p.size()));
    if (!(cf == tilde_xi_character(n)) || !(cf == expl))
      return failure(at_n(n) + ": c(tilde-Xi^n) != sum over odd partitions p "
                     "of 2^{l(p)} char_p");
    count += 3;
  }
  for (int n = 1; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Composition& q : odd_compositions(n)) {
      ClassFunction a = solomon_c(
          ctx, pi_to_delta(ctx, tilde_xi_comp_pi_coords(ctx, q)));
      ClassFunction b = solomon_c(
          ctx, pi_to_delta(
                   ctx, tilde_xi_comp_pi_coords(ctx, sorted_partition(q))));
      if (!(a == b))
        return failure(at_n(n) + ": c(tilde-Xi^{" + comp_key(q) +
                       "}) is not rearrangement invariant");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 17. ch concatenation and the two multiplicativity laws of c.
// ---------------------------------------------------------------------------

CheckResult chk_chqchr(int bound) {
  long long count = 0;
  int cap = std::min(bound, 6);
  for (int a = 1; a < cap; ++a)
    for (int b = 1; a + b <= cap; ++b)
      for (const Composition& q : compositions(a))
        for (const Composition& r : compositions(b)) {
          if (!(induction_product(ch_function<Rational>(q),
                                  ch_function<Rational>(r)) ==
                ch_function<Rational>(concat(q, r))))
            return failure("ch_{" + comp_key(q) + "} . ch_{" + comp_key(r) +
                           "} != ch_{" + comp_key(concat(q, r)) + "}");
          if (!(solomon_c(outer(xi_elem(q), xi_elem(r)), a + b) ==
                induction_product(xi_character(q), xi_character(r))))
            return failure("c(Xi^{" + comp_key(q) + "} . Xi^{" + comp_key(r) +
                           "}) != c(Xi^q) induced-with c(Xi^r)");
          count += 2;
        }
  for (int n = 1; n <= std::min(bound, 5); ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Composition& q : compositions(n)) {
      std::vector<Rational> xq(ctx.num_subsets(), Rational(0));
      xq[d_of(q)] = 1;
      std::vector<Rational> dq = xi_to_delta(ctx, xq);
      for (const Composition& r : compositions(n)) {
        std::vector<Rational> xr(ctx.num_subsets(), Rational(0));
        xr[d_of(r)] = 1;
        std::vector<Rational> dr = xi_to_delta(ctx, xr);
        if (!(solomon_c(ctx, ctx.delta_mult(dq, dr)) ==
              kronecker_product(solomon_c(ctx, dq), solomon_c(ctx, dr))))
          return failure(at_n(n) + ": c(Xi^{" + comp_key(q) + "} * Xi^{" +
                         comp_key(r) + "}) != Kronecker product of images");
        ++count;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 18. Classical Lie idempotents and their mutual products.
// ---------------------------------------------------------------------------

CheckResult chk_lie_idempotents(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> w = omega_delta_coords(ctx);
    std::vector<Rational> rho = xi_map_to_delta_coords(ctx, rho_xi_map(n));
    if (!is_lie_idempotent(ctx, scaled(w, Rational(1, n))))
      return failure(at_n(n) + ": (1/n) omega_n fails the certificate");
    if (!is_lie_idempotent(ctx, rho))
      return failure(at_n(n) + ": rho_n fails the certificate");
    if (n >= 2 && is_lie_idempotent(ctx, w))
      return failure(at_n(n) + ": unscaled omega_n passes the certificate");
    if (ctx.delta_mult(rho, w) != w ||
        ctx.delta_mult(w, rho) != scaled(rho, Rational(n)) ||
        ctx.delta_mult(rho, rho) != rho ||
        ctx.delta_mult(w, w) != scaled(w, Rational(n)))
      return failure(at_n(n) + ": mutual products of rho_n and omega_n break "
                     "the e * f = f law");
    count += 4;
  }
  for (int n = 2; n <= std::min(bound, 5); ++n) {
    const DnContext& ctx = DnContext::get(n);
    // kappa_n(eps)^2 = n kappa_n(eps).
    std::vector<Cyclo> k = klyachko_delta_coords(ctx, 1);
    std::vector<Cyclo> sq = ctx.delta_mult(k, k);
    for (std::size_t i = 0; i < k.size(); ++i) {
      Cyclo want = k[i];
      want *= Cyclo(Rational(n));
      if (!(sq[i] == want))
        return failure(at_n(n) + ": kappa_n(eps)^2 != n kappa_n(eps)");
    }
    ++count;
    for (long long i = 1; i <= n; ++i) {
      if (std::gcd(static_cast<long long>(n), i) != 1) continue;
      std::vector<Cyclo> ki = klyachko_delta_coords(ctx, i);
      for (auto& c : ki) c /= Cyclo(Rational(n));
      if (!is_lie_idempotent(ctx, ki))
        return failure(at_n(n) + ": (1/n) kappa_n(eps^" + std::to_string(i) +
                       ") fails the certificate");
      ++count;
    }
    // Major-index generating sum.
    const CycloField& field = CycloField::get(n);
    for (long long i = 0; i < n; ++i) {
      Element<Cyclo> maj;
      for (const Permutation& p : all_permutations(n))
        maj.add(p, Cyclo::root_of_unity(field, i * major_index(p)));
      if (!(klyachko_elem(n, i) == maj))
        return failure(at_n(n) + ": kappa_n(eps^" + std::to_string(i) +
                       ") != sum_sigma eps^{i maj(sigma)} sigma");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 19. Xi^q with several parts annihilates Lie idempotents.
// ---------------------------------------------------------------------------

CheckResult chk_xiq_lie_id(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> rho = xi_map_to_delta_coords(ctx, rho_xi_map(n));
    std::vector<Rational> w = omega_delta_coords(ctx);
    for (const Composition& q : compositions(n)) {
      if (comp_length(q) < 2) continue;
      std::vector<Rational> xi(ctx.num_subsets(), Rational(0));
      xi[d_of(q)] = 1;
      std::vector<Rational> dq = xi_to_delta(ctx, xi);
      if (!all_zero(ctx.delta_mult(dq, rho)) ||
          !all_zero(ctx.delta_mult(dq, w)))
        return failure(at_n(n) + ": Xi^{" + comp_key(q) +
                       "} does not annihilate the Lie elements");
      count += 2;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 20. tilde-Xi^n doubles Lie idempotents in odd degree, kills them in even.
// ---------------------------------------------------------------------------

CheckResult chk_ex_peak_lie(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> txi = txi_delta(ctx);
    std::vector<Rational> rho = xi_map_to_delta_coords(ctx, rho_xi_map(n));
    std::vector<Rational> w = omega_delta_coords(ctx);
    std::vector<Rational> zero(ctx.num_subsets(), Rational(0));
    std::vector<Rational> want_rho =
        (n % 2 == 1) ? scaled(rho, Rational(2)) : zero;
    std::vector<Rational> want_w = (n % 2 == 1) ? scaled(w, Rational(2)) : zero;
    if (ctx.delta_mult(txi, rho) != want_rho ||
        ctx.delta_mult(txi, w) != want_w)
      return failure(at_n(n) + ": tilde-Xi^n * alpha is not " +
                     (n % 2 ? "2 alpha" : "0") + " on the Lie idempotents");
    count += 2;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 21. P_n contains a Lie idempotent exactly in odd degree.
// ---------------------------------------------------------------------------

CheckResult chk_when_peak_lie(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto sol = peak_lie_idempotent_solve(ctx);
    if (sol.has_value() != (n % 2 == 1))
      return failure(at_n(n) + ": peak Lie idempotent " +
                     (sol ? "found in even" : "missing in odd") + " degree");
    if (sol && !is_lie_idempotent(ctx, pi_to_delta(ctx, *sol)))
      return failure(at_n(n) + ": solved peak element fails the certificate");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 22. The peak Dynkin element omega-tilde.
// ---------------------------------------------------------------------------

CheckResult chk_peak_dynkin(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> wt = peak_dynkin_pi_coords(ctx);
    if (wt != iota_tilde_coords(ctx, omega_delta_coords(ctx)))
      return failure(at_n(n) +
                     ": omega-tilde != omega_n * tilde-Xi^n coordinatewise");
    ++count;
    if (n % 2 == 1) {
      if (wt != peak_dynkin_closed_pi_coords(ctx))
        return failure(at_n(n) +
                       ": hook closed form of omega-tilde disagrees");
      if (!is_lie_idempotent(
              ctx, pi_to_delta(ctx, scaled(wt, Rational(1, 2 * n)))))
        return failure(at_n(n) + ": (1/2n) omega-tilde_n fails the "
                       "certificate");
      count += 2;
    }
  }
  if (bound >= 3) {
    Elt wt3 = peak_dynkin_elem(3);
    if (wt3.coefficient(Permutation({1, 2, 3})) != 2 ||
        wt3.coefficient(Permutation({3, 2, 1})) != 2 ||
        wt3.coefficient(Permutation({1, 3, 2})) != -4 ||
        wt3.coefficient(Permutation({2, 3, 1})) != -4)
      return failure("frozen coefficients of omega-tilde_3 broken");
    ++count;
  }
  if (bound >= 5) {
    const DnContext& c5 = DnContext::get(5);
    std::vector<Rational> wt5 = peak_dynkin_pi_coords(c5);
    if (wt5[c5.peak_index(0)] != 2 ||
        wt5[c5.peak_index(Subset{1} << 1)] != -4 ||
        wt5[c5.peak_index(Subset{1} << 2)] != 4 ||
        wt5[c5.peak_index(Subset{1} << 3)] != -4)
      return failure("frozen alternating hook signs of omega-tilde_5 broken");
    ++count;
  }
  if (bound >= 4) {
    if (all_zero(peak_dynkin_pi_coords(DnContext::get(4))))
      return failure("omega-tilde_4 vanishes (only rho-tilde should)");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 23. The peak canonical element rho-tilde.
// ---------------------------------------------------------------------------

CheckResult chk_canon_1(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> rt = peak_canonical_pi_coords(ctx);
    if (all_zero(rt) != (n % 2 == 0))
      return failure(at_n(n) + ": rho-tilde_n vanishing parity wrong");
    if (gamma_to_pi(ctx, peak_canonical_gamma_coords(ctx)) != rt)
      return failure(at_n(n) + ": Gamma closed form of rho-tilde disagrees");
    if (rt != iota_tilde_coords(ctx, xi_map_to_delta_coords(ctx,
                                                            rho_xi_map(n))))
      return failure(at_n(n) +
                     ": rho-tilde != rho_n * tilde-Xi^n coordinatewise");
    count += 3;
    if (n % 2 == 1) {
      if (!is_lie_idempotent(ctx,
                             pi_to_delta(ctx, scaled(rt, Rational(1, 2)))))
        return failure(at_n(n) + ": (1/2) rho-tilde_n fails the certificate");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 24. Peak-count closed form of rho-tilde.
// ---------------------------------------------------------------------------

CheckResult chk_peak_canon(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; n += 2) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> rt = peak_canonical_pi_coords(ctx);
    for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
      int k = subset_size(ctx.peak_list()[idx]);
      Rational half = rt[idx] / Rational(2);
      if (half != peak_canonical_coeff(n, k))
        return failure(at_n(n) + ": coefficient at a " + std::to_string(k) +
                       "-peak class != f_{n,k}");
      Rational prod(1, n);
      for (int j = 1; j <= k; ++j) {
        prod *= Rational(2 * j, n - 2 * j);
        prod = -prod;
      }
      if (half != prod)
        return failure(at_n(n) + ": product form of f_{n," +
                       std::to_string(k) + "} disagrees");
      count += 2;
    }
  }
  for (int n = 5; n <= bound + 2; n += 2)
    for (int k = 1; 2 * k <= n - 1; ++k) {
      if (peak_canonical_coeff(n, k) !=
          peak_canonical_coeff(n, k - 1) - peak_canonical_coeff(n - 2, k - 1))
        return failure("recurrence f_{n,k} = f_{n,k-1} - f_{n-2,k-1} fails "
                       "at n=" +
                       std::to_string(n) + ", k=" + std::to_string(k));
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 25. Peak Klyachko elements and the power decompositions.
// ---------------------------------------------------------------------------

CheckResult chk_peak_klyachko(int bound) {
  long long count = 0;
  for (int n = 3; n <= bound; n += 2) {
    const DnContext& ctx = DnContext::get(n);
    for (long long i = 1; i <= n; ++i) {
      std::vector<Cyclo> kt = klyachko_tilde_pi_coords(ctx, i);
      Element<Cyclo> direct =
          inner(klyachko_elem(n, i), to_cyclo(tilde_xi_elem(n)));
      if (!(pi_coords_to_elem_t<Cyclo>(ctx, kt) == direct))
        return failure(at_n(n) + ": kappa-tilde(eps^" + std::to_string(i) +
                       ") != kappa * tilde-Xi at permutation level");
      ++count;
    }
  }
  for (int n = 2; n <= std::min(bound, 6); ++n) {
    for (long long i = 1; i <= n; ++i) {
      long long d = n / std::gcd(static_cast<long long>(n), i);
      Element<Cyclo> rhs = kappa_over(n, static_cast<int>(d), i);
      Element<Cyclo> power = rhs;
      for (int k = 1; k < n / d; ++k) power = outer(power, rhs);
      if (!(klyachko_elem(n, i) == power))
        return failure(at_n(n) + ": kappa_n(eps^" + std::to_string(i) +
                       ") is not the (n/d)-fold outer power of kappa_d");
      ++count;
    }
  }
  for (int n = 3; n <= bound; n += 2) {
    const DnContext& ctx = DnContext::get(n);
    for (long long i = 1; i <= n; ++i) {
      long long d = n / std::gcd(static_cast<long long>(n), i);
      Element<Cyclo> base = inner(kappa_over(n, static_cast<int>(d), i),
                                  to_cyclo(tilde_xi_elem(static_cast<int>(d))));
      Element<Cyclo> power = base;
      for (int k = 1; k < n / d; ++k) power = outer(power, base);
      if (!(pi_coords_to_elem_t<Cyclo>(ctx, klyachko_tilde_pi_coords(ctx, i)) ==
            power))
        return failure(at_n(n) + ": kappa-tilde_n(eps^" + std::to_string(i) +
                       ") is not the outer power of kappa_d * tilde-Xi^d");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 26. Major-index class elements M-tilde.
// ---------------------------------------------------------------------------

CheckResult chk_lst_tilde(int bound) {
  long long count = 0;
  for (int n = 2; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (int z = 0; z < n; ++z) {
      if (m_tilde_pi_coords(ctx, z) != m_tilde_pi_coords_formula(ctx, z))
        return failure(at_n(n) + ": counting formula for M-tilde_" +
                       std::to_string(z) + " disagrees with the product");
      ++count;
    }
  }
  for (int n = 3; n <= bound; n += 2) {
    const DnContext& ctx = DnContext::get(n);
    for (int i = 0; i <= n; ++i) {
      if (m_tilde_pi_coords(ctx, i) != m_tilde_pi_coords(ctx, n - i))
        return failure(at_n(n) + ": symmetry M-tilde_i = M-tilde_{n-i} fails "
                       "at i=" +
                       std::to_string(i));
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 27. Outer powers of Klyachko idempotents are simultaneous eigenvectors.
// ---------------------------------------------------------------------------

CheckResult chk_simple(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int k = n / d;
      const DnContext& cd = DnContext::get(d);
      std::vector<Cyclo> kappa = klyachko_delta_coords(cd, 1);
      std::map<Composition, Cyclo> beta;
      std::vector<Cyclo> xi = delta_to_xi(cd, kappa);
      for (Subset D = 0; D < static_cast<Subset>(cd.num_subsets()); ++D)
        if (!xi[D].is_zero()) beta[comp_of(D, d)] = xi[D];
      std::map<Composition, Cyclo> power = beta;
      for (int j = 1; j < k; ++j) power = xi_map_outer_t(power, beta);
      std::vector<Cyclo> bk = xi_map_to_delta_coords_t(ctx, power);
      Composition rect(k, d);
      Partition cls = sorted_partition(rect);
      for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D) {
        Rational scalar = solomon_c(ctx, unit_delta(ctx, D)).at(cls);
        std::vector<Cyclo> phic(ctx.num_subsets(), Cyclo(0));
        phic[D] = Cyclo(1);
        std::vector<Cyclo> lhs = ctx.delta_mult(phic, bk);
        for (std::size_t idx = 0; idx < lhs.size(); ++idx) {
          Cyclo want = bk[idx];
          want *= Cyclo(scalar);
          if (!(lhs[idx] == want))
            return failure(at_n(n) + ": Delta^{" + subset_key(D) +
                           "} does not act on beta^(" + std::to_string(k) +
                           ") by c(.)(C_{" + comp_key(cls) + "})");
        }
        ++count;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 28. The peak Klyachko span: left ideal, multiplication rule, characters.
// ---------------------------------------------------------------------------

CheckResult chk_peak_noncyclic(int bound) {
  long long count = 0;
  for (int n = 3; n <= bound; n += 2) {
    const DnContext& ctx = DnContext::get(n);
    RowSpace<Rational, int> span;
    std::vector<std::vector<Rational>> basis;
    for (int z = 0; z < n; ++z) {
      basis.push_back(m_tilde_pi_coords(ctx, z));
      span.insert(as_row(basis.back()));
    }
    for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
      for (int z = 0; z < n; ++z) {
        if (!span.contains(as_row(ctx.delta_act_pi(unit_delta(ctx, D),
                                                   basis[z]))))
          return failure(at_n(n) + ": Delta^{" + subset_key(D) +
                         "} M-tilde_" + std::to_string(z) +
                         " leaves the M-tilde span");
        ++count;
      }
  }
  for (int n = 3; n <= std::min(bound, 5); n += 2) {
    const DnContext& ctx = DnContext::get(n);
    for (long long i = 1; i <= n; ++i)
      for (long long j = 1; j <= n; ++j) {
        long long di = n / std::gcd(static_cast<long long>(n), i);
        long long dj = n / std::gcd(static_cast<long long>(n), j);
        std::vector<Cyclo> ki = klyachko_tilde_pi_coords(ctx, i);
        std::vector<Cyclo> kj = klyachko_tilde_pi_coords(ctx, j);
        std::vector<Cyclo> prod = ctx.pi_mult(ki, kj);
        Rational constant(0);
        if (di == dj) {
          int k = n / static_cast<int>(di);
          Composition rect(k, static_cast<int>(di));
          constant =
              Rational(Integer(1) << k) * Rational(centralizer_order(rect));
        }
        for (int idx = 0; idx < ctx.num_peak_sets(); ++idx) {
          Cyclo want = kj[idx];
          want *= Cyclo(constant);
          if (!(prod[idx] == want))
            return failure(at_n(n) + ": kappa-tilde(eps^" + std::to_string(i) +
                           ") kappa-tilde(eps^" + std::to_string(j) +
                           ") breaks the multiplication rule");
        }
        ++count;
      }
    // Character values.
    for (long long i = 1; i <= n; ++i) {
      long long d = n / std::gcd(static_cast<long long>(n), i);
      int l = n / static_cast<int>(d);
      Element<Cyclo> kt =
          pi_coords_to_elem_t<Cyclo>(ctx, klyachko_tilde_pi_coords(ctx, i));
      ClassFunctionT<Cyclo> cf = solomon_c<Cyclo>(kt, n);
      Composition rect(l, static_cast<int>(d));
      ClassFunction expected = ch_function<Rational>(rect);
      expected *= Rational(Integer(1) << l);
      for (const Partition& p : partitions(n))
        if (!(cf.at(p) == Cyclo(expected.at(p))))
          return failure(at_n(n) + ": c(kappa-tilde(eps^" + std::to_string(i) +
                         ")) != 2^l ch_{d^l} at class " + comp_key(p));
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 29. Peak parity counting identity on conjugacy classes.
// ---------------------------------------------------------------------------

CheckResult chk_comb_cor_1(int bound) {
  long long count = 0;
  for (int n = 3; n <= bound; n += 2)
    for (const Partition& p : partitions(n)) {
      PeakParityCounts c = peak_parity_counts(p);
      if (2 * c.one_even + sign_of_partition(p) != 2 * c.one_odd + c.none)
        return failure(at_n(n) + ": parity identity fails on the class C_{" +
                       comp_key(p) + "}");
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 30. Peak parity counting identity on standard tableaux.
// ---------------------------------------------------------------------------

CheckResult chk_comb_cor_2(int bound) {
  long long count = 0;
  for (int n = 3; n <= bound; n += 2) {
    long long total_even = 0, total_odd = 0;
    std::map<int, std::pair<long long, long long>> by_columns;
    for (const StandardTableau& t : standard_tableaux(n)) {
      Subset peaks = tableau_peaks(t);
      if (subset_size(peaks) != 1) continue;
      int l = odd_column_count(t);
      int pos = subset_sum(peaks);
      if (pos % 2 == 0) {
        ++by_columns[l].first;
        ++total_even;
      } else {
        ++by_columns[l].second;
        ++total_odd;
      }
    }
    for (const auto& [l, counts] : by_columns) {
      if (l % 2 != 1 || l >= n)
        return failure(at_n(n) + ": one-peak tableau with invalid odd-column "
                       "count " +
                       std::to_string(l));
      if (counts.first != counts.second + 1)
        return failure(at_n(n) + ": even-peak tableaux do not outnumber "
                       "odd-peak ones by 1 at l=" +
                       std::to_string(l));
      ++count;
    }
    if (by_columns.count(n) != 0)
      return failure(at_n(n) + ": a one-peak tableau has l = n");
    if (total_even != total_odd + (n - 1) / 2)
      return failure(at_n(n) + ": total surplus != (n-1)/2");
    for (int l = 1; l < n; l += 2)
      if (by_columns.count(l) != 1)
        return failure(at_n(n) + ": odd-column count " + std::to_string(l) +
                       " not realized by a one-peak tableau");
    count += 2;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 31. The Lie series elements gamma_q: factorization, idempotency, basis.
// ---------------------------------------------------------------------------

CheckResult chk_high_lie_basis(int bound) {
  long long count = 0;
  if (gamma_q_elem(Composition{1}) != id_elem(1) ||
      (bound >= 2 && gamma_q_elem(Composition{2}) != omega_elem(2)))
    return failure("frozen series members gamma_1, gamma_2 broken");
  ++count;
  for (int total = 2; total <= bound; ++total) {
    const DnContext& ctx = DnContext::get(total);
    for (const Composition& q : compositions(total)) {
      Elt perm_level = gamma_q_elem(Composition{q[0]});
      for (std::size_t i = 1; i < q.size(); ++i)
        perm_level = outer(perm_level, gamma_q_elem(Composition{q[i]}));
      if (perm_level != gamma_q_elem(q))
        return failure("gamma_{" + comp_key(q) +
                       "} is not the outer product of its blocks");
      auto delta = elem_to_delta_coords(ctx, gamma_q_elem(q));
      if (!delta || *delta != gamma_q_delta_coords(ctx, q))
        return failure("coordinate convolution route for gamma_{" +
                       comp_key(q) + "} disagrees");
      count += 2;
    }
  }
  for (int total = 1; total <= std::min(bound, 6); ++total) {
    const DnContext& ctx = DnContext::get(total);
    for (const Composition& q : compositions(total)) {
      std::vector<Rational> g = gamma_q_delta_coords(ctx, q);
      if (ctx.delta_mult(g, g) !=
          scaled(g, Rational(Integer(centralizer_order(q)))))
        return failure("(1/q?) gamma_{" + comp_key(q) + "} is not idempotent");
      ++count;
    }
  }
  for (int n = 1; n <= bound; n += 2) {
    if (!in_peak_algebra(gamma_q_elem(Composition{n})).ok)
      return failure(at_n(n) + ": odd series member gamma_n is not in P_n");
    ++count;
  }
  for (int n = 1; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<std::map<int, Rational>> rows;
    for (const Composition& q : odd_compositions(n))
      rows.push_back(as_row(gamma_q_delta_coords(ctx, q)));
    if (rank_of(rows) != fibonacci_dim(n))
      return failure(at_n(n) + ": {gamma_q : q odd} does not span P_n");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 32. Cross-series projection rule.
// ---------------------------------------------------------------------------

CheckResult chk_pr(int bound) {
  long long count = 0;
  for (int total = 2; total <= bound; ++total) {
    const DnContext& ctx = DnContext::get(total);
    for (const Composition& q : compositions(total)) {
      std::vector<Rational> gq = gamma_q_delta_coords(ctx, q);
      for (const Composition& r : rearrangements(q)) {
        std::vector<Rational> dr =
            xi_map_to_delta_coords(ctx, omega_q_xi_map(r));
        std::vector<Rational> gr = gamma_q_delta_coords(ctx, r);
        if (ctx.delta_mult(dr, gq) !=
            scaled(gr, Rational(Integer(centralizer_order(r)))))
          return failure("delta_{" + comp_key(r) + "} gamma_{" + comp_key(q) +
                         "} != r? gamma_r");
        ++count;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 33. Up-down factorization gamma_q = gamma^q * Xi^q.
// ---------------------------------------------------------------------------

CheckResult chk_up_down(int bound) {
  long long count = 0;
  for (int total = 1; total <= bound; ++total)
    for (const Composition& q : compositions(total)) {
      if (inner(gamma_hash_elem(q), xi_elem(q)) != gamma_q_elem(q))
        return failure("gamma^{" + comp_key(q) + "} * Xi^{" + comp_key(q) +
                       "} != gamma_{" + comp_key(q) + "}");
      ++count;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 34. gamma_r gamma_q vanishes unless q associated-refines r.
// ---------------------------------------------------------------------------

CheckResult chk_lia(int bound) {
  long long count = 0;
  for (int total = 2; total <= bound; ++total) {
    const DnContext& ctx = DnContext::get(total);
    for (const Composition& r : compositions(total)) {
      std::vector<Rational> gr = gamma_q_delta_coords(ctx, r);
      for (const Composition& q : compositions(total)) {
        std::vector<Rational> gq = gamma_q_delta_coords(ctx, q);
        if (!all_zero(ctx.delta_mult(gr, gq)) && !assoc_refines(q, r))
          return failure("gamma_{" + comp_key(r) + "} gamma_{" + comp_key(q) +
                         "} != 0 but no rearrangement of q refines r");
        ++count;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 35. The Xi action regroups products of Lie monomials.
// ---------------------------------------------------------------------------

CheckResult chk_gr2_1(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n)
    for (const Composition& q : compositions(n)) {
      FreeElt monomials = lie_monomial_product(q);
      for (const Composition& r : compositions(n)) {
        if (act(xi_elem(r), monomials) != xi_action_rhs(r, q))
          return failure("Xi^{" + comp_key(r) +
                         "} acting on the block brackets of shape " +
                         comp_key(q) + " misses the regrouping sum");
        ++count;
      }
    }
  for (int n = 4; n <= std::min(bound, 5); ++n)
    for (const Composition& q : compositions(n)) {
      std::vector<FreeElt> reversed;
      std::vector<FreeElt> transfer;
      FreeElt prod_rev;
      prod_rev.emplace(Word{}, Rational(1));
      int offset = 0;
      for (int part : q) {
        Word block(part);
        for (int i = 0; i < part; ++i) block[i] = offset + part - i;
        reversed.push_back(bracket(block));
        prod_rev = free_concat(prod_rev, reversed.back());
        transfer.push_back(
            shift_letters(iota_elt(gamma_elem_of_degree(part)), offset));
        offset += part;
      }
      FreeElt prod_transfer = transfer_monomial_product(q);
      for (const Composition& r : compositions(n)) {
        if (act(xi_elem(r), prod_rev) != xi_action_rhs(r, reversed, q))
          return failure("regrouping fails for reversed-letter brackets of "
                         "shape " +
                         comp_key(q) + " under Xi^{" + comp_key(r) + "}");
        if (act(xi_elem(r), prod_transfer) != xi_action_rhs(r, transfer, q))
          return failure("regrouping fails for the transfer factors of "
                         "shape " +
                         comp_key(q) + " under Xi^{" + comp_key(r) + "}");
        count += 2;
      }
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 36. tilde-Xi^n annihilates even-first Lie monomial products.
// ---------------------------------------------------------------------------

CheckResult chk_gerade_null(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    Elt txi = tilde_xi_elem(n);
    bool some_odd_first_survives = false;
    for (const Composition& q : compositions(n)) {
      if (q[0] % 2 == 0) {
        if (!act(txi, lie_monomial_product(q)).empty() ||
            !act(txi, transfer_monomial_product(q)).empty())
          return failure(at_n(n) +
                         ": tilde-Xi^n does not kill the even-first shape " +
                         comp_key(q));
        count += 2;
      } else if (!act(txi, lie_monomial_product(q)).empty()) {
        some_odd_first_survives = true;
      }
    }
    if (!some_odd_first_survives)
      return failure(at_n(n) + ": every odd-first product died as well");
    ++count;
  }
  if (bound >= 4) {
    Elt txi4 = tilde_xi_elem(4);
    if (!act(txi4, free_concat(bracket(Word{2, 1}), bracket(Word{4, 3})))
             .empty() ||
        !act(txi4, free_concat(bracket(Word{3, 1}), bracket(Word{4, 2})))
             .empty())
      return failure("n=4: non-canonical even-first factors survive");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 37. Transfer: the embedded series maps onto products of Lie monomials.
// ---------------------------------------------------------------------------

CheckResult chk_transfer(int bound) {
  long long count = 0;
  for (int m = 1; m <= bound; ++m) {
    if (!is_lie_element(iota_elt(gamma_elem_of_degree(m)), m))
      return failure("iota(gamma_" + std::to_string(m) +
                     ") fails the Dynkin criterion");
    ++count;
  }
  for (int n = 1; n <= bound; ++n)
    for (const Composition& q : compositions(n)) {
      FreeElt expected;
      expected.emplace(Word{}, Rational(1));
      int offset = 0;
      for (int part : q) {
        expected = free_concat(
            expected,
            shift_letters(iota_elt(gamma_elem_of_degree(part)), offset));
        offset += part;
      }
      if (transfer_monomial_product(q) != expected)
        return failure("transfer product of shape " + comp_key(q) +
                       " is not the concatenation of shifted block images");
      if (iota_elt(gamma_hash_elem(q)) != expected)
        return failure("iota(gamma^{" + comp_key(q) +
                       "}) is not the concatenation of shifted block images");
      count += 2;
    }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 38. Membership by action on the free associative algebra.
// ---------------------------------------------------------------------------

CheckResult chk_peak_action(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::string bad;
    auto consistent = [&](const Elt& e) {
      bool in_d = elem_to_delta_coords(ctx, e).has_value();
      if (descent_membership_by_action(e, n) != in_d) {
        bad = "descent membership by action";
        return false;
      }
      bool in_p = elem_to_pi_coords(ctx, e).has_value();
      if (peak_membership_by_action(e, n) != in_p) {
        bad = "peak membership by action";
        return false;
      }
      if (in_d && tau_one_fixed(e).ok != in_p) {
        bad = "tau(n,1) criterion";
        return false;
      }
      return true;
    };
    std::vector<Elt> xs;
    for (const Composition& q : compositions(n)) xs.push_back(xi_elem(q));
    for (const Elt& x : xs) {
      if (!consistent(x)) return failure(at_n(n) + ": " + bad + " on a Xi "
                                         "basis element");
      ++count;
    }
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      Elt sum = xs[i];
      sum += xs[i + 1] * Rational(3);
      if (!consistent(sum))
        return failure(at_n(n) + ": " + bad + " on a Xi combination");
      ++count;
    }
    for (const Composition& q : odd_compositions(n)) {
      Elt t = tilde_xi_elem(q);
      if (!peak_membership_by_action(t, n))
        return failure(at_n(n) + ": tilde-Xi^{" + comp_key(q) +
                       "} rejected by the action criterion");
      if (!consistent(t))
        return failure(at_n(n) + ": " + bad + " on tilde-Xi^{" + comp_key(q) +
                       "}");
      count += 2;
    }
    if (n <= std::min(bound, 4)) {
      for (const Permutation& pi : all_permutations(n)) {
        if (!consistent(Elt::basis(pi)))
          return failure(at_n(n) + ": " + bad + " on the permutation " +
                         perm_key(pi));
        ++count;
      }
    } else {
      std::vector<int> swap_front(n);
      for (int i = 0; i < n; ++i) swap_front[i] = i + 1;
      std::swap(swap_front[0], swap_front[1]);
      if (!consistent(Elt::basis(Permutation(swap_front))) ||
          !consistent(Elt::basis(Permutation::identity(n))))
        return failure(at_n(n) + ": " + bad + " on a bare permutation");
      count += 2;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 39. Annihilating the even-first gamma_q detects peak membership.
// ---------------------------------------------------------------------------

CheckResult chk_internal_char(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<std::vector<Rational>> gammas;
    for (const Composition& q : compositions(n))
      if (q[0] % 2 == 0) gammas.push_back(gamma_q_delta_coords(ctx, q));
    for (const Composition& q : compositions(n)) {
      XiMap xm;
      xm.emplace(q, Rational(1));
      std::vector<Rational> phi = xi_map_to_delta_coords(ctx, xm);
      bool kills_all = true;
      for (const auto& g : gammas)
        if (!all_zero(ctx.delta_mult(phi, g))) kills_all = false;
      bool in_peak = elem_to_pi_coords(ctx, xi_elem(q)).has_value();
      if (kills_all != in_peak)
        return failure(at_n(n) + ": Xi^{" + comp_key(q) + "} " +
                       (kills_all ? "kills every even-first gamma_q but is "
                                    "not in P_n"
                                  : "is in P_n but misses an even-first "
                                    "gamma_q"));
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 40. Binomial transitions between the graded sums.
// ---------------------------------------------------------------------------

CheckResult chk_euler_transition(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    int top = peak_eulerian_dim(n);
    for (int k = 0; k < top; ++k) {
      std::vector<Rational> gk = gamma_nk_pi_coords(ctx, k);
      std::vector<Rational> rhs(ctx.num_peak_sets(), Rational(0));
      for (int j = k; j < top; ++j) {
        std::vector<Rational> pj = pi_nk_coords(ctx, j);
        Rational c(binom(j, k));
        for (int i = 0; i < ctx.num_peak_sets(); ++i) {
          Rational t = pj[i];
          t *= c;
          rhs[i] += t;
        }
      }
      if (gk != rhs)
        return failure(at_n(n) + ": Gamma^{n," + std::to_string(k) +
                       "} != sum_j binom(j,k) Pi^{n,j}");
      std::vector<Rational> pk = pi_nk_coords(ctx, k);
      std::vector<Rational> rhs2(ctx.num_peak_sets(), Rational(0));
      for (int j = k; j < top; ++j) {
        std::vector<Rational> gj = gamma_nk_pi_coords(ctx, j);
        Rational c(binom(j, k));
        if ((j - k) % 2 == 1) c = -c;
        for (int i = 0; i < ctx.num_peak_sets(); ++i) {
          Rational t = gj[i];
          t *= c;
          rhs2[i] += t;
        }
      }
      if (pk != rhs2)
        return failure(at_n(n) + ": signed inverse transition fails at k=" +
                       std::to_string(k));
      count += 2;
    }
  }
  for (int n = 2; n <= std::min(bound, 7); ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (int k = 1; k <= n; ++k) {
      if (tilde_xi_nk_pi_coords(ctx, k) !=
          tilde_xi_nk_formula_pi_coords(ctx, k))
        return failure(at_n(n) + ": binomial form of Xi^{n," +
                       std::to_string(k) + "} tilde-Xi^n disagrees");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 41. The two Eulerian subalgebras and their idempotent bases.
// ---------------------------------------------------------------------------

CheckResult chk_euler_alg(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    int dim = peak_eulerian_dim(n);
    if (dim != (n % 2 == 1 ? (n + 1) / 2 : n / 2))
      return failure(at_n(n) + ": dim of the peak Eulerian algebra != " +
                     std::string(n % 2 ? "(n+1)/2" : "n/2"));
    auto table = peak_eulerian_table(ctx);  // throws if not closed
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (table[j][k] != table[k][j])
          return failure(at_n(n) + ": peak Eulerian algebra is not "
                         "commutative at (" +
                         std::to_string(j) + "," + std::to_string(k) + ")");
    count += 2;
    // Powers of Pi^0 span; every Pi^{n,k} lies in the span.
    std::vector<Rational> p0 = pi_nk_coords(ctx, 0);
    std::vector<Rational> power = p0;
    std::vector<std::map<int, Rational>> powers;
    RowSpace<Rational, int> power_span;
    for (int j = 0; j < dim; ++j) {
      powers.push_back(as_row(power));
      power_span.insert(powers.back());
      power = ctx.pi_mult(power, p0);
    }
    if (power_span.rank() != dim)
      return failure(at_n(n) + ": powers of Pi^0 do not span");
    for (int k = 0; k < dim; ++k)
      if (!solve_in_span<Rational, int>(powers, as_row(pi_nk_coords(ctx, k)))
               .has_value())
        return failure(at_n(n) + ": Pi^{n," + std::to_string(k) +
                       "} outside the span of the powers of Pi^0");
    count += 2;
    // Parity vanishing and the orthogonal idempotent basis.
    std::vector<std::vector<Rational>> sigma;
    for (int k = 1; k <= n; ++k) {
      std::vector<Rational> s = rho_tilde_nk_pi_coords(ctx, k);
      if (all_zero(s) != ((n - k) % 2 != 0))
        return failure(at_n(n) + ": rho-tilde_{n," + std::to_string(k) +
                       "} vanishing parity wrong");
      if ((n - k) % 2 != 0) continue;
      Rational scale(Integer(1), Integer(1) << k);
      for (auto& c : s) c *= scale;
      sigma.push_back(std::move(s));
    }
    if (static_cast<int>(sigma.size()) != dim)
      return failure(at_n(n) + ": number of surviving rho-tilde_{n,k} != dim");
    RowSpace<Rational, int> sigma_span;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        std::vector<Rational> prod = ctx.pi_mult(sigma[j], sigma[k]);
        bool good = (j == k) ? (prod == sigma[k]) : all_zero(prod);
        if (!good)
          return failure(at_n(n) + ": scaled rho-tilde elements are not "
                         "orthogonal idempotents");
      }
      if (!solve_in_span<Rational, int>(powers, as_row(sigma[j])).has_value())
        return failure(at_n(n) + ": a scaled rho-tilde leaves the Eulerian "
                       "span");
      sigma_span.insert(as_row(sigma[j]));
    }
    if (sigma_span.rank() != dim)
      return failure(at_n(n) + ": scaled rho-tilde elements are not a basis");
    count += 2;
  }
  // Descent-side Eulerian algebra E_n.
  for (int n = 2; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<std::vector<Rational>> basis;
    RowSpace<Rational, int> span;
    for (int k = 1; k <= n; ++k) {
      basis.push_back(delta_nk_coords(ctx, k));
      span.insert(as_row(basis.back()));
    }
    if (span.rank() != n)
      return failure(at_n(n) + ": dim E_n != n");
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::vector<Rational> jk = ctx.delta_mult(basis[j], basis[k]);
        if (jk != ctx.delta_mult(basis[k], basis[j]) ||
            !span.contains(as_row(jk)))
          return failure(at_n(n) + ": E_n not closed/commutative at (" +
                         std::to_string(j + 1) + "," + std::to_string(k + 1) +
                         ")");
        ++count;
      }
    std::vector<std::vector<Rational>> rho;
    for (int k = 1; k <= n; ++k) rho.push_back(rho_nk_delta_coords(ctx, k));
    std::vector<Rational> sum(ctx.num_subsets(), Rational(0));
    for (const auto& r : rho)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
    if (sum != unit_delta(ctx, 0))
      return failure(at_n(n) + ": rho_{n,k} do not sum to the identity");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> prod = ctx.delta_mult(rho[j], rho[k]);
        bool good = (j == k) ? (prod == rho[k]) : all_zero(prod);
        if (!good)
          return failure(at_n(n) +
                         ": rho_{n,k} are not orthogonal idempotents");
        ++count;
      }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 42. The peak projector e.
// ---------------------------------------------------------------------------

CheckResult chk_peak_projector(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Rational> e = peak_projector_pi_coords(ctx);
    if (ctx.pi_mult(e, e) != e)
      return failure(at_n(n) + ": e is not idempotent");
    RowSpace<Rational, int> image;
    for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
      image.insert(as_row(ctx.delta_act_pi(unit_delta(ctx, D), e)));
    if (image.rank() != fibonacci_dim(n))
      return failure(at_n(n) + ": dim D_n e = " +
                     std::to_string(image.rank()) + " != f_n");
    count += 2;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 43-45. Neighbour closures match the statistics' fibers.
// ---------------------------------------------------------------------------

CheckResult closure_matches(int bound, NeighbourKind kind,
                            const std::string& what) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<int> label = neighbour_closure(ctx, kind);
    std::map<int, std::set<long long>> stats_per_class;
    std::map<long long, std::set<int>> classes_per_stat;
    for (std::size_t i = 0; i < ctx.perms().size(); ++i) {
      long long stat = 0;
      switch (kind) {
        case NeighbourKind::Descent:
          stat = static_cast<long long>(ctx.des_of(i));
          break;
        case NeighbourKind::Peak:
          stat = static_cast<long long>(ctx.peak_of(i));
          break;
        case NeighbourKind::PeakCount:
          stat = subset_size(ctx.peak_of(i));
          break;
      }
      stats_per_class[label[i]].insert(stat);
      classes_per_stat[stat].insert(label[i]);
    }
    for (const auto& [cls, stats] : stats_per_class)
      if (stats.size() != 1)
        return failure(at_n(n) + ": a closure class mixes several " + what +
                       " values");
    for (const auto& [st, classes] : classes_per_stat)
      if (classes.size() != 1)
        return failure(at_n(n) + ": a " + what +
                       " fiber splits into several closure classes");
    count += static_cast<long long>(stats_per_class.size());
  }
  return ok(count, bound);
}

CheckResult chk_closure_descent(int bound) {
  return closure_matches(bound, NeighbourKind::Descent, "descent-set");
}
CheckResult chk_closure_peak(int bound) {
  return closure_matches(bound, NeighbourKind::Peak, "peak-set");
}
CheckResult chk_closure_peak_count(int bound) {
  return closure_matches(bound, NeighbourKind::PeakCount, "peak-count");
}

// ---------------------------------------------------------------------------
// 46. The ideals Lambda^p decompose the descent algebra.
// ---------------------------------------------------------------------------

CheckResult chk_indec_dn(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    RowSpace<Rational, int> all;
    int dim_sum = 0;
    for (const Partition& p : partitions(n)) {
      auto lam = lambda_ideal_basis(ctx, p);
      RowSpace<Rational, int> space = space_of(lam);
      if (space.rank() != static_cast<int>(rearrangements(p).size()))
        return failure(at_n(n) + ": dim Lambda^{" + comp_key(p) +
                       "} != #rearrangements");
      dim_sum += space.rank();
      for (const auto& r : lam) all.insert(as_row(r));
      ++count;
      bool odd_part = !has_even_part(p);
      if (n <= std::min(bound, 5) || (n <= bound && odd_part)) {
        std::vector<Rational> gp = gamma_q_delta_coords(ctx, p);
        for (Subset d = 0; d < static_cast<Subset>(ctx.num_subsets()); ++d) {
          if (!space.contains(
                  as_row(ctx.delta_mult(unit_delta(ctx, d), gp))))
            return failure(at_n(n) + ": Delta^{" + subset_key(d) +
                           "} gamma_{" + comp_key(p) +
                           "} leaves Lambda^p");
          ++count;
        }
      }
      if (odd_part) {
        for (const auto& r : lam) {
          if (!elem_to_pi_coords(ctx, delta_coords_to_elem(ctx, r))
                   .has_value())
            return failure(at_n(n) + ": a basis vector of Lambda^{" +
                           comp_key(p) + "} is not in P_n");
          ++count;
        }
      }
    }
    if (dim_sum != ctx.num_subsets() || all.rank() != ctx.num_subsets())
      return failure(at_n(n) +
                     ": the Lambda^p do not decompose D_n (dims " +
                     std::to_string(dim_sum) + ", rank " +
                     std::to_string(all.rank()) + ")");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 47. Characters of the series elements and the rank-one law.
// ---------------------------------------------------------------------------

CheckResult chk_lambda_regu(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Composition& q : compositions(n)) {
      if (!(solomon_c(ctx, gamma_q_delta_coords(ctx, q)) ==
            ch_function<Rational>(q)))
        return failure(at_n(n) + ": c(gamma_{" + comp_key(q) + "}) != ch_q");
      ++count;
    }
  }
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    for (const Partition& p : partitions(n)) {
      Rational scale(Integer(centralizer_order(p)));
      for (const Composition& s : rearrangements(p)) {
        std::vector<Rational> gs = gamma_q_delta_coords(ctx, s);
        std::vector<Rational> expected = gs;
        for (auto& c : expected) c *= scale;
        for (const Composition& q : rearrangements(p)) {
          if (ctx.delta_mult(gs, gamma_q_delta_coords(ctx, q)) != expected)
            return failure(at_n(n) + ": gamma_{" + comp_key(s) + "} gamma_{" +
                           comp_key(q) + "} != p? gamma_s");
          ++count;
        }
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 48. Direct decompositions of P_n and D_n by the Lambda^p.
// ---------------------------------------------------------------------------

CheckResult chk_dir_summ(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    RowSpace<Rational, int> odd_total;
    int odd_sum = 0;
    RowSpace<Rational, int> all;
    int all_sum = 0;
    for (const Partition& p : partitions(n)) {
      auto lam = lambda_ideal_basis(ctx, p);
      all_sum += static_cast<int>(lam.size());
      for (const auto& r : lam) all.insert(as_row(r));
      if (has_even_part(p)) continue;
      odd_sum += static_cast<int>(lam.size());
      for (const auto& r : lam) odd_total.insert(as_row(r));
    }
    if (odd_sum != ctx.num_peak_sets() ||
        odd_total.rank() != ctx.num_peak_sets())
      return failure(at_n(n) + ": odd Lambda^p do not decompose P_n (dims " +
                     std::to_string(odd_sum) + ", rank " +
                     std::to_string(odd_total.rank()) + ")");
    if (all_sum != ctx.num_subsets() || all.rank() != ctx.num_subsets())
      return failure(at_n(n) + ": all Lambda^p do not decompose D_n");
    count += 2;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 49. The radical of the peak algebra: three descriptions, first module step.
// ---------------------------------------------------------------------------

CheckResult chk_rad_lambda(int bound) {
  long long count = 0;
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto txi = radical_tilde_xi_differences(ctx);
    auto kerc = radical_character_kernel(ctx);
    auto gam = radical_gamma_differences(ctx);
    int expected =
        ctx.num_peak_sets() - static_cast<int>(odd_partitions(n).size());
    if (space_of(txi).rank() != expected)
      return failure(at_n(n) + ": dim Rad P_n != f_n - #odd partitions");
    if (!spans_equal(txi, kerc))
      return failure(at_n(n) + ": tilde-Xi differences != kernel of c");
    if (!spans_equal(txi, gam))
      return failure(at_n(n) + ": tilde-Xi differences != gamma differences");
    count += 3;
  }
  if (bound >= 7 &&
      space_of(radical_tilde_xi_differences(DnContext::get(7))).rank() != 8)
    return failure("frozen dim Rad P_7 != 8");
  if (bound >= 8 &&
      space_of(radical_tilde_xi_differences(DnContext::get(8))).rank() != 15)
    return failure("frozen dim Rad P_8 != 15");
  ++count;
  for (int n = 2; n <= std::min(bound, 6); ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto jp = peak_radical_delta(ctx);
    auto jd = radical_descent_differences(ctx);
    for (const Partition& p : odd_partitions(n)) {
      auto lam = lambda_ideal_basis(ctx, p);
      auto pstep = module_radical_chain(ctx, jp, lam);
      auto dstep = module_radical_chain(ctx, jd, lam);
      auto meet = span_intersection(
          static_cast<std::size_t>(ctx.num_subsets()), lam, jd);
      std::vector<std::vector<Rational>> p1 =
          pstep.size() > 1 ? pstep[1] : std::vector<std::vector<Rational>>{};
      std::vector<std::vector<Rational>> d1 =
          dstep.size() > 1 ? dstep[1] : std::vector<std::vector<Rational>>{};
      if (!spans_equal(p1, meet) || !spans_equal(d1, meet))
        return failure(at_n(n) + ": first radical step of Lambda^{" +
                       comp_key(p) +
                       "} differs between the peak and descent sides");
      ++count;
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 50. Radical chain inclusion (Rad P)^j Lambda^p <= (Rad D)^{2j-1} Lambda^p.
// ---------------------------------------------------------------------------

CheckResult chk_rad_inclusion(int bound) {
  long long count = 0;
  for (int n = 4; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto jp = peak_radical_delta(ctx);
    auto jd = radical_descent_differences(ctx);
    for (const Partition& p : odd_partitions(n)) {
      auto lam = lambda_ideal_basis(ctx, p);
      auto pchain = module_radical_chain(ctx, jp, lam);
      auto dchain = module_radical_chain(ctx, jd, lam);
      for (std::size_t j = 1;
           j < pchain.size() || 2 * j - 1 < dchain.size(); ++j) {
        std::vector<std::vector<Rational>> pj =
            j < pchain.size() ? pchain[j]
                              : std::vector<std::vector<Rational>>{};
        std::vector<std::vector<Rational>> d2 =
            2 * j - 1 < dchain.size() ? dchain[2 * j - 1]
                                      : std::vector<std::vector<Rational>>{};
        if (!span_contains_all(space_of(d2), pj))
          return failure(at_n(n) + ": inclusion fails for Lambda^{" +
                         comp_key(p) + "} at step j=" + std::to_string(j));
        ++count;
        if (j > 10) break;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 51. Cartan invariants of the peak algebra.
// ---------------------------------------------------------------------------

CheckResult chk_cartan(int bound) {
  long long count = 0;
  if (lyndon_sum_composition({1, 1, 3}) != Composition{5} ||
      lyndon_sum_composition({3, 1, 1}) != (Composition{3, 1, 1}) ||
      lyndon_sum_composition({1, 3, 1}) != (Composition{4, 1}) ||
      lyndon_sum_composition({2, 1, 2}) != (Composition{2, 3}))
    return failure("frozen Lyndon factor degree sequences broken");
  ++count;
  if (bound >= 3 &&
      cartan_matrix(3) != std::vector<std::vector<int>>{{1, 0}, {0, 1}})
    return failure("frozen Cartan matrix at n=3 is not the identity");
  if (bound >= 5 &&
      cartan_matrix(5) !=
          std::vector<std::vector<int>>{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})
    return failure("frozen Cartan matrix at n=5 broken");
  ++count;
  for (int n = 2; n <= bound; ++n) {
    auto m = cartan_matrix(n);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i][i] < 1)
        return failure(at_n(n) + ": Cartan diagonal entry < 1");
    ++count;
  }
  for (int n = 2; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    std::vector<Partition> odd = odd_partitions(n);
    for (const Partition& q : odd)
      for (const Partition& p : odd) {
        if (cartan_count_lyndon(q, p) != cartan_dim_brute(ctx, p, q))
          return failure(at_n(n) + ": Lyndon count != dim(gamma D_n gamma) "
                         "at (q,p)=(" +
                         comp_key(q) + "," + comp_key(p) + ")");
        ++count;
      }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 52. Hook equality of the two radical chains.
// ---------------------------------------------------------------------------

CheckResult chk_rad_haken(int bound) {
  long long count = 0;
  for (int n = 4; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto jp = peak_radical_delta(ctx);
    auto jd = radical_descent_differences(ctx);
    for (const Partition& p : odd_partitions(n)) {
      if (!is_hook(p)) continue;
      auto lam = lambda_ideal_basis(ctx, p);
      auto pchain = module_radical_chain(ctx, jp, lam);
      auto dchain = module_radical_chain(ctx, jd, lam);
      for (std::size_t j = 1;
           j < pchain.size() || 2 * j - 1 < dchain.size(); ++j) {
        std::vector<std::vector<Rational>> pj =
            j < pchain.size() ? pchain[j]
                              : std::vector<std::vector<Rational>>{};
        std::vector<std::vector<Rational>> d2 =
            2 * j - 1 < dchain.size() ? dchain[2 * j - 1]
                                      : std::vector<std::vector<Rational>>{};
        if (!spans_equal(pj, d2))
          return failure(at_n(n) + ": hook equality fails for Lambda^{" +
                         comp_key(p) + "} at step j=" + std::to_string(j));
        ++count;
        if (j > 10) break;
      }
    }
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 53. Nilpotency index of the peak radical.
// ---------------------------------------------------------------------------

CheckResult chk_nilindex(int bound) {
  long long count = 0;
  for (int n = 1; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    int idx = peak_radical_nilpotency_index(ctx);
    int formula = peak_radical_nilpotency_formula(n);
    int direct = n <= 3 ? 1 : (n % 2 == 1 ? (n - 1) / 2 : n / 2);
    if (idx != formula || formula != direct)
      return failure(at_n(n) + ": nilpotency index " + std::to_string(idx) +
                     " != closed form " + std::to_string(direct));
    ++count;
  }
  const std::map<int, std::vector<int>> frozen = {
      {4, {1}}, {5, {2}}, {6, {4, 1}}, {7, {8, 2}}, {8, {15, 5, 1}}};
  for (const auto& [n, dims] : frozen) {
    if (n > bound) continue;
    const DnContext& ctx = DnContext::get(n);
    if (radical_power_dims_peak(ctx, radical_tilde_xi_differences(ctx)) !=
        dims)
      return failure(at_n(n) + ": frozen radical power dimension chain "
                     "broken");
    ++count;
  }
  return ok(count, bound);
}

// ---------------------------------------------------------------------------
// 54. Report: dimension of the peak Klyachko span (conjectured (n+1)/2).
// ---------------------------------------------------------------------------

CheckResult chk_ktilde_dim(int bound) {
  std::ostringstream os;
  bool first = true;
  for (int n = 3; n <= bound; n += 2) {
    int dim = klyachko_peak_span_dim(n);
    if (!first) os << "; ";
    first = false;
    os << "n=" << n << ": dim " << dim << " vs conjectured " << (n + 1) / 2
       << ((dim == (n + 1) / 2) ? " (match)" : " (DIFFERS)");
  }
  if (first) os << "no odd degree in range";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 55. Report: Loewy chain equality status beyond the hook case.
// ---------------------------------------------------------------------------

CheckResult chk_loewy_status(int bound) {
  std::ostringstream os;
  bool first = true;
  for (int n = 4; n <= bound; ++n) {
    const DnContext& ctx = DnContext::get(n);
    auto jp = peak_radical_delta(ctx);
    auto jd = radical_descent_differences(ctx);
    for (const Partition& p : odd_partitions(n)) {
      auto lam = lambda_ideal_basis(ctx, p);
      auto pchain = module_radical_chain(ctx, jp, lam);
      auto dchain = module_radical_chain(ctx, jd, lam);
      bool equal = true;
      for (std::size_t j = 1;
           j < pchain.size() || 2 * j - 1 < dchain.size(); ++j) {
        std::vector<std::vector<Rational>> pj =
            j < pchain.size() ? pchain[j]
                              : std::vector<std::vector<Rational>>{};
        std::vector<std::vector<Rational>> d2 =
            2 * j - 1 < dchain.size() ? dchain[2 * j - 1]
                                      : std::vector<std::vector<Rational>>{};
        if (!spans_equal(pj, d2)) equal = false;
        if (j > 10) break;
      }
      if (!first) os << "; ";
      first = false;
      os << "n=" << n << " p=" << comp_key(p) << ": "
         << (equal ? "equality at every step" : "strict inclusion somewhere")
         << (is_hook(p) ? " [hook]" : "");
    }
  }
  if (first) os << "no degree in range";
  return {true, os.str()};
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&v](const char* id, const char* statement, int cap,
                    CheckResult (*fn)(int), bool report = false) {
      v.push_back(CheckDef{id, statement, cap, report, fn});
    };
    add("main-thm-left-ideal",
        "P_n is a left ideal of (D_n, *): Delta^D * Pi^P is a Pi-linear "
        "combination; dim P_n equals both the number of peak sets and "
        "dim{phi in D_n : phi tau(n,1) = phi}, the Fibonacci number f_n.",
        6, chk_left_ideal);
    add("main-thm-comb-char",
        "An element phi of D_n lies in P_n if and only if "
        "phi tau(n,1) = phi.",
        7, chk_comb_char);
    add("thm-sol-result",
        "D_n is closed under the group-algebra product, and the character "
        "map c is multiplicative for it with image of dimension "
        "#partitions(n).",
        5, chk_sol_result);
    add("thm-bialg-d",
        "Xi^r . Xi^q = Xi^{r.q} under the outer product, and the "
        "part-splitting coproduct is multiplicative and coassociative on "
        "the Xi basis.",
        7, chk_bialg_d);
    add("eq-vert-hor",
        "Delta^{1^k} . Delta^{(m)} = Delta^{1^k.m} + Delta^{1^{k-1}.(m+1)}.",
        7, chk_vert_hor);
    add("prop-peak-comp",
        "Peak sets are determined by descent sets via P(D) = {i in D : "
        "i >= 2, i-1 not in D}; Pi^P is the sum of its descent classes; "
        "peak sets biject with odd compositions, f_n of each.",
        7, chk_peak_comp);
    add("prop-gamma-xi",
        "Gamma^q expands in the Xi basis over the refinements between "
        "tilde(q) and q with alternating signs; frozen case Gamma^{(3)} = "
        "Xi^{2.1} - Xi^{3}.",
        6, chk_gamma_xi);
    add("prop-out-prod-p",
        "The peak spans are closed under the outer product, and "
        "Gamma^r . Gamma^q = Gamma^{r.q} for odd compositions.",
        6, chk_out_prod_p);
    add("eq-re-xi-tilde",
        "tilde-Xi^n = 2 sum_k Delta^{1^k.(n-k)} = sum_{k=0}^{n} Delta^{1^k} "
        ". Delta^{(n-k)}.",
        7, chk_re_xi_tilde);
    add("prop-transition-tilde-xi",
        "The four expansions of tilde-Xi^r (Pi basis, signed Gamma basis, "
        "odd-refinement Gamma form, Xi basis) all equal the outer product "
        "of the blocks.",
        7, chk_transition_tilde_xi);
    add("prop-multi-tilde-xi",
        "Delta^{1^n} * tilde-Xi^n = tilde-Xi^n and tilde-Xi^n * tilde-Xi^n "
        "= 2 tilde-Xi^n + sum_{k=1}^{n-1} tilde-Xi^{k.(n-k)}.",
        7, chk_multi_tilde_xi);
    add("prop-tilde-delta",
        "Delta^D * tilde-Xi^n = sum over peak sets P inside the symmetric "
        "difference of D and D+1 of 2^{|P|+1} Pi^P.",
        7, chk_tilde_delta);
    add("main-thm-outer-epi",
        "Right multiplication by tilde-Xi^n maps D_n onto P_n and restricts "
        "to an injection on P_n.",
        7, chk_outer_epi);
    add("main-thm-bialg-p",
        "tilde-Xi^r . tilde-Xi^q = tilde-Xi^{r.q}; {tilde-Xi^q : q odd} "
        "spans P_n; the coproduct of tilde-Xi^n is sum_k tilde-Xi^k (x) "
        "tilde-Xi^{n-k}.",
        6, chk_bialg_p);
    add("thm-sol-rad",
        "The kernel of c on D_n is spanned by the differences Xi^q - "
        "Xi^{q'} over rearrangements and has dimension 2^{n-1} - "
        "#partitions(n).",
        7, chk_sol_rad);
    add("main-thm-p-c-im",
        "c maps P_n onto a space of dimension #odd-partitions(n); its "
        "kernel on P_n is spanned by the tilde-Xi rearrangement "
        "differences; c(tilde-Xi^n) = sum over odd partitions p of "
        "2^{l(p)} char_p.",
        7, chk_p_c_im);
    add("eq-chqchr",
        "ch_r . ch_q = ch_{r.q} under the induction product; c carries the "
        "outer product to the induction product and the inner product to "
        "the Kronecker product.",
        6, chk_chqchr);
    add("lie-idempotents",
        "(1/n) omega_n, rho_n and (1/n) kappa_n(eps^i) (gcd(i,n)=1) are Lie "
        "idempotents; kappa_n(eps^i) = sum_sigma eps^{i maj(sigma)} sigma; "
        "mutual products obey e * f = f.",
        6, chk_lie_idempotents);
    add("eq-xiq-lie-id",
        "Xi^q annihilates the degree-n Lie elements whenever q has at "
        "least two parts (verified against rho_n and omega_n).",
        6, chk_xiq_lie_id);
    add("prop-ex-peak-lie",
        "tilde-Xi^n * alpha = 2 alpha for odd n and 0 for even n, for the "
        "Lie idempotents alpha of degree n.",
        6, chk_ex_peak_lie);
    add("cor-when-peak-lie",
        "The peak algebra P_n contains a Lie idempotent exactly when n is "
        "odd.",
        6, chk_when_peak_lie);
    add("prop-peak-dynkin",
        "omega-tilde_n = omega_n * tilde-Xi^n; for odd n it equals the hook "
        "closed form 2 Pi^0 - 4 Pi^{{2}} + 4 Pi^{{3}} - ... and (1/2n) "
        "omega-tilde_n is a Lie idempotent in P_n; omega-tilde_4 != 0.",
        7, chk_peak_dynkin);
    add("prop-canon-1",
        "rho-tilde_n = rho_n * tilde-Xi^n vanishes exactly in even degree; "
        "for odd n, (1/2) rho-tilde_n is a Lie idempotent in P_n with a "
        "Gamma-coordinate closed form.",
        7, chk_canon_1);
    add("prop-peak-canon",
        "The coefficient of pi in (1/2) rho-tilde_n depends only on k = "
        "#Peak(pi): f_{n,k} = sum_j binom(k,j)(-1)^j/(n-2j) = (-1)^k 2^k k! "
        "/ (n(n-2)...(n-2k)), and f_{n,k} = f_{n,k-1} - f_{n-2,k-1}.",
        7, chk_peak_canon);
    add("eq-peak-klyachko",
        "kappa-tilde_n(eps^i) = kappa_n(eps^i) * tilde-Xi^n; when eps^i has "
        "order d, kappa_n(eps^i) is the (n/d)-fold outer power of "
        "kappa_d(eps^i), and for odd n kappa-tilde_n(eps^i) is the outer "
        "power of kappa_d(eps^i) * tilde-Xi^d.",
        5, chk_peak_klyachko);
    add("eq-lst-tilde",
        "M-tilde_z = M_z * tilde-Xi^n has Pi coefficients 2^{|P|+1} #{D : "
        "sum(D) = z mod n, P inside sym-diff(D, D+1)}, and M-tilde_z = "
        "M-tilde_{n-z} for odd n.",
        7, chk_lst_tilde);
    add("prop-simple",
        "For dk = n and beta = kappa_d(eps_d), the outer power beta^(k) is "
        "a simultaneous eigenvector: phi * beta^(k) = c(phi)(C_{d^k}) "
        "beta^(k) for every phi in D_n.",
        6, chk_simple);
    add("cor-peak-noncyclic",
        "For odd n, span{M-tilde_z} is a left ideal of D_n containing every "
        "kappa-tilde_n(eps^i); kappa-tilde(eps^i) kappa-tilde(eps^j) = "
        "2^k k! d^k kappa-tilde(eps^j) when both powers have order d (k = "
        "n/d) and 0 otherwise; c(kappa-tilde_n(eps^i)) = 2^l ch_{d^l}.",
        5, chk_peak_noncyclic);
    add("cor-comb-cor-1",
        "Within each conjugacy class C_p of S_n (n odd): 2 #(one peak at an "
        "even position) + sign(p) = 2 #(one peak at an odd position) + "
        "#(no peak).",
        7, chk_comb_cor_1);
    add("cor-comb-cor-2",
        "Among one-peak standard tableaux of odd size n, grouped by the "
        "number l of odd columns: even-position tableaux outnumber "
        "odd-position ones by exactly 1 for every odd l < n, l = n never "
        "occurs, every odd l < n occurs, and the total surplus is (n-1)/2.",
        7, chk_comb_cor_2);
    add("main-thm-high-lie-id-basis",
        "gamma_q is the outer product of the series members gamma_{q_i}; "
        "(1/q?) gamma_q is idempotent; gamma_n lies in P_n for odd n; "
        "{gamma_q : q odd} spans P_n.",
        5, chk_high_lie_basis);
    add("eq-pr",
        "Cross-series projection: with delta the omega series, delta_r "
        "gamma_q = r? gamma_r whenever r is a rearrangement of q.",
        5, chk_pr);
    add("eq-up-down",
        "Up-down factorization: gamma^q * Xi^q = gamma_q (shifted "
        "concatenation of the series members times Xi^q).",
        5, chk_up_down);
    add("eq-lia",
        "gamma_r gamma_q != 0 forces some rearrangement of q to refine r.",
        5, chk_lia);
    add("thm-gr2-1",
        "Xi^r (P_1 ... P_k) is the sum over ordered regroupings of the Lie "
        "monomial factors with degree sums r, for arbitrary Lie factors of "
        "shape q.",
        5, chk_gr2_1);
    add("lem-gerade-null",
        "tilde-Xi^n annihilates every product of Lie monomials whose first "
        "degree is even; some odd-first product survives.",
        6, chk_gerade_null);
    add("eq-transfer",
        "iota(gamma^q) is the concatenation of the shifted block images "
        "iota(gamma_{q_i}), each of which is a Lie element; it equals the "
        "transfer monomial product of shape q.",
        6, chk_transfer);
    add("main-thm-peak-action",
        "Membership in D_n and P_n is detected by the action on the free "
        "associative algebra, matching class-constancy and the tau(n,1) "
        "criterion, on basis elements, combinations and bare permutations.",
        5, chk_peak_action);
    add("cor-internal-char",
        "An element phi of D_n lies in P_n if and only if phi gamma_q = 0 "
        "for every composition q whose first part is even.",
        5, chk_internal_char);
    add("prop-euler-transition",
        "Gamma^{n,k} = sum_j binom(j,k) Pi^{n,j} with the signed inverse "
        "transition, and Xi^{n,k} tilde-Xi^n matches its binomial closed "
        "form.",
        8, chk_euler_transition);
    add("main-thm-euler-alg",
        "span{Pi^{n,k}} is a commutative subalgebra of dimension (n+1)/2 "
        "(n odd) or n/2 (n even), generated by the powers of Pi^0, with "
        "orthogonal idempotent basis (1/2^k) rho-tilde_{n,k} (which vanish "
        "exactly when n-k is odd); span{Delta^{n,k}} is commutative of "
        "dimension n with orthogonal idempotents rho_{n,k} summing to the "
        "identity.",
        8, chk_euler_alg);
    add("cor-peak-projector",
        "e = sum_k (1/2^k) rho-tilde_{n,k} is an idempotent with "
        "D_n e = P_n.",
        7, chk_peak_projector);
    add("lem-dbhl-desc",
        "Two permutations share their descent set iff they are connected "
        "by exchanges of the values i, i+1 sitting at non-adjacent "
        "positions.",
        7, chk_closure_descent);
    add("lem-peak-rel",
        "Two permutations share their peak set iff they are connected by "
        "descent moves together with the exchange of the values 1, 2.",
        7, chk_closure_peak);
    add("rem-peak-number",
        "Two permutations share their number of peaks iff they are "
        "connected by peak moves together with the exchange of the values "
        "n-1, n when both sit at interior positions.",
        7, chk_closure_peak_count);
    add("prop-indec-dn",
        "Lambda^p = span{gamma_q : q rearranges p} has dimension the "
        "number of rearrangements, absorbs left multiplication by D_n, "
        "consists of peak elements for odd p, and the Lambda^p sum "
        "directly to D_n.",
        6, chk_indec_dn);
    add("prop-lambda-q-regu",
        "c(gamma_q) = ch_q, and gamma_s gamma_q = p? gamma_s for "
        "rearrangements s, q of the same partition p.",
        6, chk_lambda_regu);
    add("main-thm-dir-summ",
        "P_n is the direct sum of the Lambda^p over odd partitions p "
        "(total dimension f_n), and D_n is the direct sum over all p.",
        6, chk_dir_summ);
    add("cor-rad-lambda",
        "Rad P_n has three equal descriptions (tilde-Xi rearrangement "
        "differences, kernel of c on P_n, gamma differences) of dimension "
        "f_n - #odd-partitions(n); on each Lambda^p (p odd) the first "
        "radical step equals Lambda^p meet ker c, computed from either "
        "side.",
        7, chk_rad_lambda);
    add("cor-rad-inclusion",
        "(Rad P_n)^j Lambda^p is contained in (Rad D_n)^{2j-1} Lambda^p "
        "for every odd p and every j.",
        6, chk_rad_inclusion);
    add("cor-cartan-pn",
        "The Cartan invariant dim(gamma_q D_n gamma_p) of P_n counts the "
        "rearrangements r of q whose Lyndon factor degree multiset "
        "rearranges p; diagonal entries are positive; frozen matrices at "
        "n = 3 and n = 5.",
        6, chk_cartan);
    add("lem-rad-haken",
        "For hook-shaped odd partitions p, (Rad P_n)^j Lambda^p = "
        "(Rad D_n)^{2j-1} Lambda^p at every step j.",
        7, chk_rad_haken);
    add("thm-nilindex",
        "The nilpotency index of Rad P_n is 1 for n <= 3, (n-1)/2 for odd "
        "n >= 5 and n/2 for even n >= 4; frozen power-dimension chains for "
        "n = 4..8.",
        8, chk_nilindex);
    add("ktilde-dim",
        "Report only: the dimension of span{kappa-tilde_n(eps^i)} for odd "
        "n against the conjectured value (n+1)/2.",
        7, chk_ktilde_dim, true);
    add("loewy-status",
        "Report only: whether (Rad P_n)^j Lambda^p = (Rad D_n)^{2j-1} "
        "Lambda^p holds at every step for each odd p (known for hooks).",
        7, chk_loewy_status, true);
    return v;
  }();
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& def : registry())
    if (def.id == id) return &def;
  return nullptr;
}

CheckResult run_check(const CheckDef& def, int n_max) {
  int bound = n_max > 0 ? n_max : def.default_n_max;
  bound = std::min(bound, degree_cap());
  try {
    CheckResult r = def.run(bound);
    if (def.report_only) r.pass = true;
    return r;
  } catch (const std::exception& e) {
    CheckResult r;
    r.pass = def.report_only;
    r.detail = std::string("unhandled exception: ") + e.what();
    return r;
  }
}

}  // namespace peaklab::checks
