#include "pathloc/linalg.hpp"

#include <algorithm>

#include "pathloc/errors.hpp"

namespace pathloc {

SparseVec axpy(const SparseVec& a, const Rational& k, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, k * j->second);
      ++j;
    } else {
      Rational s = i->second + k * j->second;
      if (s != Rational(0)) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational entry(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != v.end() && it->first == col ? it->second : Rational(0);
}

SparseVec from_map(const std::map<std::size_t, Rational>& m) {
  SparseVec out;
  for (const auto& [c, v] : m) {
    if (v != Rational(0)) out.emplace_back(c, v);
  }
  return out;
}

SparseVec Eliminator::reduce(SparseVec v) const {
  // Eliminating the pivot of row k only introduces pivots of rows created
  // after k, so repeatedly clearing the earliest-created pivot terminates.
  for (;;) {
    std::size_t best_row = rows_.size();
    std::size_t best_col = 0;
    for (const auto& [c, val] : v) {
      auto it = by_pivot_.find(c);
      if (it != by_pivot_.end() && it->second < best_row) {
        best_row = it->second;
        best_col = c;
      }
    }
    if (best_row == rows_.size()) return v;
    const Rational k = -entry(v, best_col);
    v = axpy(v, k, rows_[best_row]);
  }
}

bool Eliminator::add(SparseVec row) {
  for (const auto& [c, val] : row) {
    if (c >= cols_) throw InternalError("row entry outside the column range");
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  for (auto& [c, val] : row) val /= lead;
  by_pivot_.emplace(row.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseVec> Eliminator::reduced() const {
  std::vector<SparseVec> rows = rows_;
  // Later rows never contain earlier pivots; clear later pivots from
  // earlier rows, last row first.
  for (std::size_t r = rows.size(); r-- > 0;) {
    for (;;) {
      std::size_t hit = rows.size();
      std::size_t col = 0;
      for (const auto& [c, val] : rows[r]) {
        auto it = by_pivot_.find(c);
        if (it != by_pivot_.end() && it->second != r) {
          hit = it->second;
          col = c;
          break;
        }
      }
      if (hit == rows.size()) break;
      rows[r] = axpy(rows[r], -entry(rows[r], col), rows[hit]);
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
  return rows;
}

std::vector<std::size_t> Eliminator::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [c, r] : by_pivot_) out.push_back(c);
  return out;
}

std::vector<SparseVec> Eliminator::nullspace() const {
  const auto rref = reduced();
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& r : rref) is_pivot[r.front().first] = true;
  // Column f of the nullspace basis: x_f = 1, x_p = -rref_p[f].
  std::vector<std::map<std::size_t, Rational>> acc(cols_);
  for (const auto& r : rref) {
    const std::size_t p = r.front().first;
    for (const auto& [c, val] : r) {
      if (c != p) acc[c][p] = -val;
    }
  }
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    acc[f][f] = 1;
    out.push_back(from_map(acc[f]));
  }
  return out;
}

std::vector<SparseVec> span_basis(std::size_t cols, const std::vector<SparseVec>& vectors) {
  Eliminator e(cols);
  for (const auto& v : vectors) e.add(v);
  return e.reduced();
}

std::vector<Rational> coordinates(const std::vector<SparseVec>& rref, const SparseVec& v) {
  std::vector<Rational> out;
  out.reserve(rref.size());
  for (const auto& r : rref) out.push_back(entry(v, r.front().first));
  return out;
}

std::size_t dense_rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  Eliminator e(m.front().size());
  for (const auto& row : m) {
    SparseVec v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != Rational(0)) v.emplace_back(c, row[c]);
    }
    e.add(std::move(v));
  }
  return e.rank();
}

}  // namespace pathloc
