#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boxball {

/// One failed check: the input that broke the claim and both sides of the
/// failed comparison, enough to reproduce it by hand.
struct Violation {
  std::string witness;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  std::string claim_id;
  int n = 0;
  bool conjecture = false;
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  /// Suite-specific aggregates, e.g. the fraction of w with SD(w) = P(w).
  std::vector<std::pair<std::string, std::string>> summary;
  /// Optional (key, value) table, e.g. recording tableau -> steady-state time.
  std::vector<std::pair<std::string, std::string>> table;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return violations.empty(); }

  /// Human-readable block; conjecture suites print WARN instead of FAIL.
  std::string to_text(bool with_table = false) const;
};

struct VerifyOptions {
  int jobs = 1;
  /// Overrides the per-suite n budget; BOXBALL_MAX_N in the environment does the same.
  std::optional<int> max_n;
};

/// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Default n budget for a suite, before overrides.
int default_max_n(const std::string& suite);

/// Dispatches by name. Throws DomainError for unknown suites or n out of the
/// suite's domain, CapacityError when n exceeds the budget.
VerificationReport run_suite(const std::string& suite, int n, const VerifyOptions& opts = {});

/// SD = P, SD standard, equal shapes, localincr = incr and localdecr = decr are
/// pairwise equivalent on S_n. Greene sides use the RS-free oracles when in budget.
VerificationReport verify_tfae(int n, const VerifyOptions& opts = {});

/// Steady at t = 0 iff w is the row reading word of a standard tableau.
VerificationReport verify_t0(int n, const VerifyOptions& opts = {});

/// Every proper K1/K2 neighbour of a reading word reaches steady state at t = 1.
VerificationReport verify_t1(int n, const VerifyOptions& opts = {});

/// Members of the qhat class take exactly n - 3 moves (and satisfy the six
/// ordering clauses on w_1..w_n). In conjecture mode, every other w in S_n takes
/// fewer than n - 3 moves.
VerificationReport verify_qhat(int n, bool conjecture_mode, const VerifyOptions& opts = {});

/// Steady-state time is constant on each recording-tableau fiber of S_n.
VerificationReport verify_q_determines_time(int n, const VerifyOptions& opts = {});

/// Over every Knuth class of S_n: odd KB-count paths change SD, KB-free paths keep
/// sh SD, signed KB counts match SD height differences, P is shared.
VerificationReport verify_knuth_paths(int n, const VerifyOptions& opts = {});

/// Direct and carrier steppers agree through steady state + 2 moves.
VerificationReport verify_steppers(int n, const VerifyOptions& opts = {});

/// P of the ball word is constant along every trajectory.
VerificationReport verify_fukuda(int n, const VerifyOptions& opts = {});

/// sh SD(w) is dominated by sh P(w).
VerificationReport verify_dominance(int n, const VerifyOptions& opts = {});

/// Separation condition between adjacent solitons of reached steady states.
VerificationReport verify_separation(int n, const VerifyOptions& opts = {});

/// After the first steady state: stays steady, solitons keep their contents, gaps
/// never shrink.
VerificationReport verify_persistence(int n, const VerifyOptions& opts = {});

/// Classical and localized Greene statistics: tableau partial sums against the
/// oracles, plus height of SD = 1 + descents.
VerificationReport verify_greene(int n, const VerifyOptions& opts = {});

/// Reading words of standard tableaux: K1- moves are KB, K1+ moves are not, and
/// no K2+ move exists.
VerificationReport verify_reading_word_lemmas(int n, const VerifyOptions& opts = {});

}  // namespace boxball
