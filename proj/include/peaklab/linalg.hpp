#pragma once

// Sparse exact linear algebra over an arbitrary exact field K.  Vectors are
// std::map<Key, K> ("rows"); RowSpace maintains an echelon basis with monic
// pivot rows, supporting rank, membership, and reduction.  solve_in_span
// additionally returns the coefficients expressing a vector in a given
// spanning set.  Dimensions in this library stay small (at most a few
// thousand keys, a few hundred rows), so the simple dense-in-spirit
// elimination below is entirely adequate.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace peaklab {

template <class Key, class K>
void row_axpy(std::map<Key, K>& v, const K& coeff,
              const std::map<Key, K>& row) {
  if (coeff == K(0)) return;
  for (const auto& [k, x] : row) {
    K cx = coeff;
    cx *= x;
    auto [it, fresh] = v.try_emplace(k, cx);
    if (!fresh) {
      it->second += cx;
      if (it->second == K(0)) v.erase(it);
    }
  }
}

template <class K, class Key>
class RowSpace {
 public:
  using Row = std::map<Key, K>;

  // Eliminates the pivots of all stored rows from v.
  void reduce(Row& v) const {
    for (const auto& row : rows_) {
      if (v.empty()) return;
      auto it = v.find(row.begin()->first);
      if (it != v.end()) row_axpy(v, K(-it->second), row);
    }
  }

  // Returns true (and grows the span) iff v was independent of it.
  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    K lead = v.begin()->second;
    for (auto& [k, x] : v) x /= lead;
    // Back-substitute the new pivot into the existing rows, then keep the
    // list sorted by pivot for deterministic reduction order.
    for (auto& row : rows_) {
      auto it = row.find(v.begin()->first);
      if (it != row.end()) row_axpy(row, K(-it->second), v);
    }
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->begin()->first < v.begin()->first) ++pos;
    rows_.insert(pos, std::move(v));
    return true;
  }

  bool contains(Row v) const {
    reduce(v);
    return v.empty();
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Row> rows_;
};

// Coefficients c with sum_i c_i gens[i] = target, if target lies in the span.
template <class K, class Key>
std::optional<std::vector<K>> solve_in_span(
    const std::vector<std::map<Key, K>>& gens, std::map<Key, K> target) {
  using Row = std::map<Key, K>;
  struct Tracked {
    Row row;
    std::vector<K> comb;
  };
  std::vector<Tracked> echelon;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Tracked t;
    t.row = gens[i];
    t.comb.assign(gens.size(), K(0));
    t.comb[i] = K(1);
    for (const auto& e : echelon) {
      if (t.row.empty()) break;
      auto it = t.row.find(e.row.begin()->first);
      if (it == t.row.end()) continue;
      K c = it->second;
      row_axpy(t.row, K(-c), e.row);
      for (std::size_t j = 0; j < gens.size(); ++j)
        t.comb[j] -= c * e.comb[j];
    }
    if (t.row.empty()) continue;
    K lead = t.row.begin()->second;
    for (auto& [k, x] : t.row) x /= lead;
    for (auto& c : t.comb) c /= lead;
    echelon.push_back(std::move(t));
  }
  std::vector<K> comb(gens.size(), K(0));
  for (const auto& e : echelon) {
    if (target.empty()) break;
    auto it = target.find(e.row.begin()->first);
    if (it == target.end()) continue;
    K c = it->second;
    row_axpy(target, K(-c), e.row);
    for (std::size_t j = 0; j < gens.size(); ++j) comb[j] += c * e.comb[j];
  }
  if (!target.empty()) return std::nullopt;
  return comb;
}

template <class K, class Key>
int rank_of(const std::vector<std::map<Key, K>>& rows) {
  RowSpace<K, Key> space;
  for (const auto& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace peaklab
