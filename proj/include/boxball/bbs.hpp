#pragma once

#include <string>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

/// Box-ball configuration with finite support.
///
/// `content` holds ball labels 1..n and kEmpty for empty boxes; it is trimmed so
/// that the first and last entries are balls. `offset` is the absolute index of
/// the leftmost nonempty box. Two states are equal when offset and content match.
class BbsState {
 public:
  static constexpr int kEmpty = 0;

  BbsState(long offset, std::vector<int> content);

  long offset() const { return offset_; }
  const std::vector<int>& content() const { return content_; }
  int ball_count() const { return n_; }

  /// Balls in left-to-right order, empties dropped.
  Permutation ball_word() const;

  /// Boxes from absolute index 0, empties as '.'. Labels are comma-separated when n > 9.
  std::string to_ascii() const;

  bool operator==(const BbsState&) const = default;

 private:
  long offset_;
  std::vector<int> content_;
  int n_;
};

/// Trims leading/trailing empties from `boxes`, whose first entry sits at `origin`.
BbsState make_trimmed_state(long origin, const std::vector<int>& boxes);

/// Parses the notation "ee45e2136" or ".. 45.2136"; 'e' and '.' are empty.
/// Only single-digit labels are supported.
BbsState parse_state(const std::string& text);

BbsState state_from_permutation(const Permutation& w);

/// One move: balls 1, 2, ..., n in turn jump to the nearest empty box strictly to
/// their right; a vacated box is immediately available to later balls.
BbsState step_direct(const BbsState& s);

/// One move via the carrier: stream the trimmed configuration through a carrier of
/// n slots initially filled with e = n + 1, then flush with e until the carrier
/// holds only e. The ejected stream, starting at the old offset, is the next state.
BbsState step_carrier(const BbsState& s);

/// Carrier run with every intermediate step rendered as
/// `<ejected>[<carrier>]<remaining input>`, plus the section markers.
std::vector<std::string> carrier_trace(const BbsState& s);

/// Raw ejected stream of the carrier run on an arbitrary input word. `input` uses
/// kEmpty for e; the result uses kEmpty for e too.
std::vector<int> carrier_eject(const std::vector<int>& input, int n);

/// Configuration-array row: entries start at absolute column `offset`.
struct SkewRow {
  int offset = 0;
  std::vector<int> entries;
  bool operator==(const SkewRow&) const = default;
};

/// Increasing runs of a state, rightmost run first, each shifted left by the number
/// of empty boxes separating it from the run above. Minimum offset is 0.
class SkewArray {
 public:
  explicit SkewArray(std::vector<SkewRow> rows);

  const std::vector<SkewRow>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  /// Rows weakly decreasing in length and every column strictly increasing downward.
  bool is_standard_with_decreasing_rows() const;

  std::string to_ascii() const;

  bool operator==(const SkewArray&) const = default;

 private:
  std::vector<SkewRow> rows_;
};

SkewArray configuration_array(const BbsState& s);

bool is_steady(const BbsState& s);

/// Upper bound on moves before steady_state_time reports an internal error.
int steady_state_cap(int n);

/// Smallest t with is_steady at time t. Debug builds cross-check both steppers.
int steady_state_time(const Permutation& w);

/// States at t = 0..steps using the direct stepper.
std::vector<BbsState> evolve(const BbsState& start, int steps);

/// First steady state reached from `start`.
BbsState steady_state(const BbsState& start);

/// Steady-state solitons stacked with the rightmost soliton as row 1.
Tableau soliton_decomposition(const Permutation& w);
Tableau soliton_decomposition(const BbsState& s);

/// Maximal consecutive increasing runs of a state, left to right, with the number
/// of empty boxes preceding each run (0 for the first).
struct Run {
  int gap_before = 0;
  std::vector<int> balls;
};
std::vector<Run> increasing_runs(const BbsState& s);

}  // namespace boxball
