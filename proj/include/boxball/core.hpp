#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxball {

/// Violated precondition on caller-supplied input.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guard that should never fire tripped; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A permutation of {1..n} in one-line notation, n >= 1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  const std::vector<int>& values() const { return word_; }
  int operator[](std::size_t i) const { return word_[i]; }

  /// Number of positions i with w[i] > w[i+1].
  int descents() const;

  /// Adjacent transposition of positions i and i+1.
  Permutation swapped(int i) const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Weakly decreasing sequence of positive integers (possibly empty).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Partial sums p_1 + ... + p_k for k = 1..len, padded with the weight up to len.
  std::vector<int> partial_sums(int len) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Dominance order: every prefix sum of a is at most the matching prefix sum of b.
/// Throws DomainError when the weights differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Rows of positive integers with weakly decreasing lengths. Rows are 0-indexed.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int cell_count() const;
  int at(int row, int col) const { return rows_[row][col]; }

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

Partition shape(const Tableau& t);

/// Entries are exactly {1..n} for n = number of cells.
bool has_permutation_entries(const Tableau& t);
bool is_row_strict(const Tableau& t);
/// Rows and columns strictly increasing, entries exactly {1..n}.
bool is_standard(const Tableau& t);

/// Transposed filling; requires the result to have weakly decreasing rows, which
/// always holds for partition-shaped input.
Tableau transpose(const Tableau& t);

/// Rows concatenated bottom to top, each left to right.
/// Throws DomainError when entries are not a permutation of {1..n}.
Permutation row_reading_word(const Tableau& t);

/// Multi-line grid, one row per line, space-separated entries.
std::string to_grid(const Tableau& t);

/// Parses "452361" (n <= 9) or "4,5,2,3,6,1". Throws DomainError with the
/// offending position on malformed input.
Permutation parse_permutation(const std::string& text);

/// Calls fn on every permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Permutations of S_n whose first letter is `first`, lexicographic.
void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& fn);

}  // namespace boxball
