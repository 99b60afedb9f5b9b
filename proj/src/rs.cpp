#include "boxball/rs.hpp"

#include <algorithm>
#include <functional>

namespace boxball {

namespace {

using Rows = std::vector<std::vector<int>>;

// Bumps `value` into the rows; returns the row index where a cell was created.
int row_insert(Rows& rows, int value) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return static_cast<int>(r);
    }
    std::swap(*it, value);
  }
  rows.push_back({value});
  return static_cast<int>(rows.size()) - 1;
}

}  // namespace

RsPair rs_insert(const Permutation& w) {
  Rows p;
  Rows q;
  for (int i = 0; i < w.size(); ++i) {
    const int r = row_insert(p, w[i]);
    if (r == static_cast<int>(q.size())) q.emplace_back();
    q[r].push_back(i + 1);
  }
  return RsPair{Tableau(std::move(p)), Tableau(std::move(q))};
}

Tableau insertion_tableau(const Permutation& w) {
  Rows p;
  for (int v : w.word()) row_insert(p, v);
  return Tableau(std::move(p));
}

Permutation inverse_rs(const RsPair& pair) {
  if (!(shape(pair.p) == shape(pair.q))) throw DomainError("inverse RS needs equal shapes");
  if (!is_standard(pair.p) || !is_standard(pair.q)) {
    throw DomainError("inverse RS needs standard tableaux");
  }
  Rows p = pair.p.rows();
  Rows q = pair.q.rows();
  const int n = pair.p.cell_count();
  std::vector<int> word(n);
  for (int label = n; label >= 1; --label) {
    // The largest recording label sits at the end of some row.
    int row = 0;
    while (q[row].back() != label) ++row;
    q[row].pop_back();
    int value = p[row].back();
    p[row].pop_back();
    if (p[row].empty()) {
      p.pop_back();
      q.pop_back();
    }
    for (int r = row - 1; r >= 0; --r) {
      // Largest entry of row r smaller than the value bumped out from below.
      auto it = std::lower_bound(p[r].begin(), p[r].end(), value);
      --it;
      std::swap(*it, value);
    }
    word[label - 1] = value;
  }
  return Permutation(std::move(word));
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  const int n = shape.weight();
  std::vector<Tableau> out;
  Rows rows(shape.size());
  std::function<void(int)> place = [&](int label) {
    if (label > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < shape.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) >= shape[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(label);
      place(label + 1);
      rows[r].pop_back();
    }
  };
  if (n > 0) place(1);
  return out;
}

Tableau qhat_tableau(int n) {
  if (n < 5) throw DomainError("qhat tableau requires n >= 5");
  std::vector<int> first{1, 2};
  for (int v = 5; v <= n - 1; ++v) first.push_back(v);
  return Tableau({first, {3, 4}, {n}});
}

std::vector<Permutation> enumerate_qhat_class(int n) {
  const Tableau q = qhat_tableau(n);
  std::vector<Permutation> out;
  for (const Tableau& p : standard_tableaux(shape(q))) out.push_back(inverse_rs(RsPair{p, q}));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace boxball
