#pragma once

#include <vector>

#include "boxball/core.hpp"

namespace boxball {

/// Insertion tableau `p` and recording tableau `q` of the same shape.
struct RsPair {
  Tableau p;
  Tableau q;
  bool operator==(const RsPair&) const = default;
};

/// Row insertion of w_1, ..., w_n.
RsPair rs_insert(const Permutation& w);

/// Insertion tableau only.
Tableau insertion_tableau(const Permutation& w);

/// Reverse bumping in decreasing recording order. Throws DomainError unless both
/// tableaux are standard of the same shape.
Permutation inverse_rs(const RsPair& pair);

/// Standard tableaux of the given shape, generated by placing 1, 2, ..., n in
/// turn at every available outer corner (rows scanned top to bottom).
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// Recording tableau with rows (1, 2, 5, 6, ..., n-1), (3, 4), (n). Requires n >= 5.
Tableau qhat_tableau(int n);

/// All w with Q(w) equal to qhat_tableau(n), sorted lexicographically.
std::vector<Permutation> enumerate_qhat_class(int n);

}  // namespace boxball
