#include "peaklab/descent_peak.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace peaklab {

// --- context ------------------------------------------------------------------

const DnContext& DnContext::get(int n) {
  static std::map<int, std::unique_ptr<DnContext>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::unique_ptr<DnContext>(new DnContext(n))).first;
  return *it->second;
}

DnContext::DnContext(int n) : n_(n) {
  require_degree(n);
  subset_count_ = (n >= 1) ? (std::size_t{1} << (n - 1)) : 1;
  build_classes();
  build_mixed_and_pi_tables();
}

void DnContext::build_classes() {
  perms_ = all_permutations(n_);
  des_.resize(perms_.size());
  peak_.resize(perms_.size());
  dclass_size_.assign(subset_count_, 0);
  dclass_rep_.assign(subset_count_, 0);
  std::vector<bool> dseen(subset_count_, false);
  peak_list_ = peak_sets(n_);
  pclass_size_.assign(peak_list_.size(), 0);
  pclass_rep_.assign(peak_list_.size(), 0);
  std::vector<bool> pseen(peak_list_.size(), false);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    des_[i] = descent_set(perms_[i]);
    peak_[i] = peak_set(perms_[i]);
    Subset D = des_[i];
    if (!dseen[D]) {
      dseen[D] = true;
      dclass_rep_[D] = i;
    }
    ++dclass_size_[D];
    int pi = peak_index(peak_[i]);
    if (!pseen[pi]) {
      pseen[pi] = true;
      pclass_rep_[pi] = i;
    }
    ++pclass_size_[pi];
  }
}

int DnContext::peak_index(Subset P) const {
  for (std::size_t i = 0; i < peak_list_.size(); ++i)
    if (peak_list_[i] == P) return static_cast<int>(i);
  throw std::invalid_argument("not a peak set for this degree: " +
                              subset_key(P));
}

long long DnContext::peak_class_size(Subset P) const {
  return pclass_size_[peak_index(P)];
}

const Permutation& DnContext::peak_rep(Subset P) const {
  return perms_[pclass_rep_[peak_index(P)]];
}

void DnContext::build_mixed_and_pi_tables() {
  std::size_t f = peak_list_.size();
  mixed_table_.assign(subset_count_ * f * f, 0);
  std::vector<int> inv(n_);
  std::vector<int> pidx_of_peak;  // peak mask -> index, dense over masks
  pidx_of_peak.assign(subset_count_, -1);
  for (std::size_t i = 0; i < f; ++i) pidx_of_peak[peak_list_[i]] = (int)i;

  for (std::size_t vi = 0; vi < perms_.size(); ++vi) {
    const Permutation& v = perms_[vi];
    for (int i = 1; i <= n_; ++i) inv[v.of(i) - 1] = i;
    int Q = pidx_of_peak[peak_[vi]];
    for (std::size_t R = 0; R < f; ++R) {
      // u = w v^{-1} where w is the representative of peak class R;
      // coefficient of Pi^R in Delta^{Des u} * Pi^{Peak v} gains 1.
      const Permutation& w = perms_[pclass_rep_[R]];
      Subset D = 0;
      int prev = n_ ? inv[w.of(1) - 1] : 0;
      for (int i = 2; i <= n_; ++i) {
        int cur = inv[w.of(i) - 1];
        if (prev > cur) D |= Subset{1} << (i - 2);
        prev = cur;
      }
      ++mixed_table_[(D * f + Q) * f + R];
    }
  }
  pi_table_.assign(f * f * f, 0);
  for (Subset D = 0; D < subset_count_; ++D) {
    std::size_t P = pidx_of_peak[p_of_descents(D, n_)];
    for (std::size_t Q = 0; Q < f; ++Q)
      for (std::size_t R = 0; R < f; ++R)
        pi_table_[(P * f + Q) * f + R] += mixed_table_[(D * f + Q) * f + R];
  }
}

const std::vector<std::int32_t>& DnContext::delta_table() const {
  if (!delta_table_.empty()) return delta_table_;
  std::size_t m = subset_count_;
  delta_table_.assign(m * m * m, 0);
  std::vector<int> inv(n_);
  for (std::size_t vi = 0; vi < perms_.size(); ++vi) {
    const Permutation& v = perms_[vi];
    for (int i = 1; i <= n_; ++i) inv[v.of(i) - 1] = i;
    Subset E = des_[vi];
    for (Subset F = 0; F < m; ++F) {
      const Permutation& w = perms_[dclass_rep_[F]];
      Subset D = 0;
      int prev = n_ ? inv[w.of(1) - 1] : 0;
      for (int i = 2; i <= n_; ++i) {
        int cur = inv[w.of(i) - 1];
        if (prev > cur) D |= Subset{1} << (i - 2);
        prev = cur;
      }
      ++delta_table_[(D * m + E) * m + F];
    }
  }
  return delta_table_;
}

// --- basis elements --------------------------------------------------------------

namespace {

Subset check_subset(int n, Subset D) {
  if (n >= 1 && (D >> (n - 1)) != 0)
    throw std::invalid_argument("subset out of range for degree " +
                                std::to_string(n));
  if (n == 0 && D != 0)
    throw std::invalid_argument("subset out of range for degree 0");
  return D;
}

}  // namespace

Element<Rational> delta_elem(int n, Subset D) {
  check_subset(n, D);
  const DnContext& ctx = DnContext::get(n);
  Element<Rational> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    if (ctx.des_of(i) == D) out.add(ctx.perms()[i], Rational(1));
  return out;
}

Element<Rational> delta_elem(const Composition& q) {
  return delta_elem(comp_sum(q), d_of(q));
}

Element<Rational> xi_elem(int n, Subset D) {
  check_subset(n, D);
  const DnContext& ctx = DnContext::get(n);
  Element<Rational> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    if ((ctx.des_of(i) & ~D) == 0) out.add(ctx.perms()[i], Rational(1));
  return out;
}

Element<Rational> xi_elem(const Composition& q) {
  return xi_elem(comp_sum(q), d_of(q));
}

Element<Rational> pi_elem(int n, Subset P) {
  if (!is_peak_set(P, n))
    throw std::invalid_argument("not a peak set (subset of {2..n-1} without "
                                "adjacent elements): " +
                                subset_key(P));
  const DnContext& ctx = DnContext::get(n);
  Element<Rational> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    if (ctx.peak_of(i) == P) out.add(ctx.perms()[i], Rational(1));
  return out;
}

Element<Rational> gamma_elem(int n, Subset P) {
  if (!is_peak_set(P, n))
    throw std::invalid_argument("not a peak set (subset of {2..n-1} without "
                                "adjacent elements): " +
                                subset_key(P));
  const DnContext& ctx = DnContext::get(n);
  Element<Rational> out;
  for (Subset Q : ctx.peak_list())
    if ((P & ~Q) == 0) out += pi_elem(n, Q);
  return out;
}

Element<Rational> gamma_elem(const Composition& odd_q) {
  return gamma_elem(comp_sum(odd_q), peak_set_of_odd(odd_q));
}

Element<Rational> tilde_xi_elem(int n) {
  if (n == 0) return Element<Rational>::one();
  return pi_elem(n, 0) * Rational(2);
}

Element<Rational> tilde_xi_elem(const Composition& q) {
  if (!is_composition(q)) throw std::invalid_argument("not a composition");
  Element<Rational> out = Element<Rational>::one();
  for (int part : q) out = outer(out, tilde_xi_elem(part));
  return out;
}

Element<Rational> id_elem(int n) {
  return Element<Rational>::basis(Permutation::identity(n));
}

// --- membership --------------------------------------------------------------------

namespace {

// Shared scan: coefficients must be constant on the fibers of `label`.
template <class LabelFn>
Membership constant_on_classes(const Element<Rational>& a, LabelFn&& label) {
  Membership result;
  for (int n : a.degrees()) {
    const DnContext& ctx = DnContext::get(n);
    std::map<Subset, std::size_t> first;
    for (std::size_t i = 0; i < ctx.perms().size(); ++i) {
      Subset key = label(ctx, i);
      auto [it, fresh] = first.try_emplace(key, i);
      if (fresh) continue;
      const Permutation& rep = ctx.perms()[it->second];
      const Permutation& cur = ctx.perms()[i];
      if (a.coefficient(rep) != a.coefficient(cur)) {
        result.witness = std::make_pair(rep, cur);
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

}  // namespace

Membership in_descent_algebra(const Element<Rational>& a) {
  return constant_on_classes(
      a, [](const DnContext& ctx, std::size_t i) { return ctx.des_of(i); });
}

Membership in_peak_algebra(const Element<Rational>& a) {
  return constant_on_classes(
      a, [](const DnContext& ctx, std::size_t i) { return ctx.peak_of(i); });
}

Membership tau_one_fixed(const Element<Rational>& a) {
  Membership result;
  for (int n : a.degrees()) {
    if (n <= 1) continue;
    Permutation t = tau(n, 1);
    const DnContext& ctx = DnContext::get(n);
    for (const Permutation& p : ctx.perms()) {
      Permutation q = compose(p, t);
      if (a.coefficient(p) != a.coefficient(q)) {
        result.witness = std::make_pair(p, q);
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

// --- element <-> coordinates ----------------------------------------------------------

Element<Rational> delta_coords_to_elem(const DnContext& ctx,
                                       const std::vector<Rational>& x) {
  Element<Rational> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    out.add(ctx.perms()[i], x[ctx.des_of(i)]);
  return out;
}

Element<Rational> pi_coords_to_elem(const DnContext& ctx,
                                    const std::vector<Rational>& x) {
  Element<Rational> out;
  for (std::size_t i = 0; i < ctx.perms().size(); ++i)
    out.add(ctx.perms()[i], x[ctx.peak_index(ctx.peak_of(i))]);
  return out;
}

std::optional<std::vector<Rational>> elem_to_delta_coords(
    const DnContext& ctx, const Element<Rational>& a) {
  return elem_to_delta_coords_t<Rational>(ctx, a);
}

std::optional<std::vector<Rational>> elem_to_pi_coords(
    const DnContext& ctx, const Element<Rational>& a) {
  return elem_to_pi_coords_t<Rational>(ctx, a);
}

// --- Xi maps ------------------------------------------------------------------------------

XiMap delta_coords_to_xi_map(const DnContext& ctx,
                             const std::vector<Rational>& delta) {
  std::vector<Rational> xi = delta_to_xi(ctx, delta);
  XiMap out;
  for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
    if (xi[D] != 0) out[comp_of(D, ctx.n())] = xi[D];
  return out;
}

std::vector<Rational> xi_map_to_delta_coords(const DnContext& ctx,
                                             const XiMap& m) {
  std::vector<Rational> xi(ctx.num_subsets(), Rational(0));
  for (const auto& [q, c] : m) {
    if (comp_sum(q) != ctx.n())
      throw std::invalid_argument("Xi map has the wrong degree");
    xi[d_of(q)] += c;
  }
  return xi_to_delta(ctx, xi);
}

XiMap xi_map_outer(const XiMap& a, const XiMap& b) {
  XiMap out;
  for (const auto& [q, c] : a)
    for (const auto& [r, d] : b) {
      Rational prod = c * d;
      auto [it, fresh] = out.try_emplace(concat(q, r), prod);
      if (!fresh) {
        it->second += prod;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// --- coproduct ------------------------------------------------------------------------------

TensorMap coproduct_xi(const Composition& q) {
  TensorMap out;
  std::vector<int> k(q.size(), 0);
  while (true) {
    Composition left, right;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (k[i] > 0) left.push_back(k[i]);
      if (q[i] - k[i] > 0) right.push_back(q[i] - k[i]);
    }
    out[{left, right}] += 1;
    // Odometer over 0 <= k_i <= q_i.
    std::size_t i = 0;
    while (i < q.size() && k[i] == q[i]) k[i++] = 0;
    if (i == q.size()) break;
    ++k[i];
  }
  // Remove zeros the accumulation may have missed (there are none, but keep
  // the map normalised like every other sparse map in the library).
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

TensorMap coproduct(const XiMap& m) {
  TensorMap out;
  for (const auto& [q, c] : m)
    for (const auto& [pair, mult] : coproduct_xi(q)) {
      Rational v = c * mult;
      auto [it, fresh] = out.try_emplace(pair, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// --- iota ------------------------------------------------------------------------------------

Element<Rational> iota_tilde(const Element<Rational>& a) {
  Element<Rational> out;
  for (int n : a.degrees())
    out += inner(a.homogeneous_part(n), tilde_xi_elem(n));
  return out;
}

std::vector<Rational> iota_tilde_coords(const DnContext& ctx,
                                        const std::vector<Rational>& delta) {
  std::vector<Rational> y(ctx.num_peak_sets(), Rational(0));
  y[ctx.peak_index(0)] = 2;  // tilde-Xi^n = 2 Pi^{empty}
  return ctx.delta_act_pi(delta, y);
}

// --- closed forms -------------------------------------------------------------------------------

Element<Rational> tilde_delta_rhs(int n, Subset D) {
  check_subset(n, D);
  Subset A = D ^ shift_subset(D, 1, n);
  Element<Rational> out;
  for (Subset P : peak_sets(n))
    if ((P & ~A) == 0) {
      Rational coeff = 1;
      for (int j = 0; j < subset_size(P) + 1; ++j) coeff *= 2;
      out += pi_elem(n, P) * coeff;
    }
  return out;
}

XiMap gamma_xi_map(const Composition& odd_q) {
  int n = comp_sum(odd_q);
  int l = comp_length(odd_q);
  Subset dq = d_of(odd_q);
  Subset dt = d_of(tilde_comp(odd_q));
  bool base_negative = ((n - l) / 2) % 2 != 0;
  XiMap out;
  Subset free = dt & ~dq;
  Subset sub = free;
  while (true) {
    Subset S = dq | sub;
    Composition s = comp_of(S, n);
    bool neg = base_negative ^ ((comp_length(s) - l) % 2 != 0);
    out[s] = neg ? Rational(-1) : Rational(1);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return out;
}

namespace {

Rational two_pow(int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

// All compositions refining r, as descent-set masks containing D(r).
std::vector<Subset> refinement_masks(const Composition& r) {
  int n = comp_sum(r);
  Subset dr = d_of(r);
  Subset full = (n >= 1) ? ((Subset{1} << (n - 1)) - 1) : 0;
  Subset free = full & ~dr;
  std::vector<Subset> out;
  Subset sub = free;
  while (true) {
    out.push_back(dr | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return out;
}

}  // namespace

std::vector<Rational> tilde_xi_pi_coords(const DnContext& ctx,
                                         const Composition& r) {
  int n = ctx.n();
  if (comp_sum(r) != n) throw std::invalid_argument("degree mismatch");
  Subset D = d_of(r);
  Subset A = D | shift_subset(D, 1, n);
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  for (int i = 0; i < ctx.num_peak_sets(); ++i)
    if ((ctx.peak_list()[i] & ~A) == 0) out[i] = two_pow(comp_length(r));
  return out;
}

std::vector<Rational> tilde_xi_gamma_coords(const DnContext& ctx,
                                            const Composition& r) {
  int n = ctx.n();
  if (comp_sum(r) != n) throw std::invalid_argument("degree mismatch");
  Subset D = d_of(r);
  Subset A = D | shift_subset(D, 1, n);
  Subset full = (n >= 1) ? ((Subset{1} << (n - 1)) - 1) : 0;
  Subset outside = full & ~A;
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  for (int i = 0; i < ctx.num_peak_sets(); ++i) {
    Subset P = ctx.peak_list()[i];
    if ((P & ~outside) == 0) {
      Rational c = two_pow(comp_length(r));
      if (subset_size(P) % 2) c = -c;
      out[i] = c;
    }
  }
  return out;
}

std::vector<Rational> tilde_xi_gamma_coords_odd(const DnContext& ctx,
                                                const Composition& r) {
  int n = ctx.n();
  if (comp_sum(r) != n) throw std::invalid_argument("degree mismatch");
  std::vector<Rational> out(ctx.num_peak_sets(), Rational(0));
  for (Subset S : refinement_masks(r)) {
    Composition q = comp_of(S, n);
    if (!is_odd_composition(q)) continue;
    Rational c = two_pow(comp_length(r));
    if (((n - comp_length(q)) / 2) % 2) c = -c;
    out[ctx.peak_index(peak_set_of_odd(q))] += c;
  }
  return out;
}

XiMap tilde_xi_xi_map(const Composition& r) {
  int n = comp_sum(r);
  XiMap out;
  for (Subset S : refinement_masks(r)) {
    Composition q = comp_of(S, n);
    bool final_letters_odd = true;
    for (const Composition& block : refinement_blocks(q, r))
      if (block.back() % 2 == 0) {
        final_letters_odd = false;
        break;
      }
    if (!final_letters_odd) continue;
    Rational c = two_pow(comp_length(r));
    if ((n - comp_length(q)) % 2) c = -c;
    out[q] = c;
  }
  return out;
}

// --- neighbour closures ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> neighbour_closure(const DnContext& ctx, NeighbourKind kind) {
  int n = ctx.n();
  const auto& perms = ctx.perms();
  UnionFind uf(perms.size());
  std::vector<Permutation> taus;
  for (int i = 1; i <= n - 1; ++i) taus.push_back(tau(n, i));
  for (std::size_t idx = 0; idx < perms.size(); ++idx) {
    const Permutation& p = perms[idx];
    Permutation pinv = p.inverse();
    for (int i = 1; i <= n - 1; ++i) {
      // sigma = p tau(n, i) exchanges the values i and i+1.
      bool allowed = false;
      bool adjacent = std::abs(pinv.of(i) - pinv.of(i + 1)) == 1;
      if (!adjacent) allowed = true;  // descent neighbour
      if (kind != NeighbourKind::Descent && i == 1) allowed = true;
      if (kind == NeighbourKind::PeakCount && i == n - 1) {
        int pos_top = pinv.of(n), pos_next = pinv.of(n - 1);
        if (pos_top >= 2 && pos_top <= n - 1 && pos_next >= 2 &&
            pos_next <= n - 1)
          allowed = true;
      }
      if (!allowed) continue;
      Permutation s = compose(p, taus[i - 1]);
      uf.unite(static_cast<int>(idx), static_cast<int>(perm_rank(s)));
    }
  }
  std::vector<int> label(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    label[i] = uf.find(static_cast<int>(i));
  return label;
}

}  // namespace peaklab
