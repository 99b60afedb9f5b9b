#pragma once

#include <cstdint>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

/// Largest n accepted by the subset-enumerating oracles (2^n subsets).
inline constexpr int kSubsetOracleMaxN = 16;
/// Largest k^n accepted by the exhaustive assignment oracle for local_decr.
inline constexpr std::int64_t kAssignmentOracleBudget = 10'000'000;

/// Longest strictly increasing / decreasing subsequence lengths.
int longest_increasing(std::span<const int> seq);
int longest_decreasing(std::span<const int> seq);

/// Max size of a k-increasing subsequence. A subset qualifies iff its longest
/// decreasing subsequence has length at most k; no tableau is consulted.
int incr_k_oracle(const Permutation& w, int k);
/// Dual of incr_k_oracle: longest increasing subsequence at most k.
int decr_k_oracle(const Permutation& w, int k);

/// incr_k_oracle / decr_k_oracle for every k = 1..n in one subset sweep.
std::vector<int> incr_oracle_all(const Permutation& w);
std::vector<int> decr_oracle_all(const Permutation& w);

/// Max over cuts of w into k consecutive (possibly empty) blocks of the summed
/// longest-increasing lengths. Exact interval dynamic program.
int local_incr_k(const Permutation& w, int k);
std::vector<int> local_incr_all(const Permutation& w);

/// 1 + number of descents, or 0 for the empty sequence.
int local_decr_of(std::span<const int> seq);

enum class LocalDecrMode { kExhaustive, kFast };

/// Max over assignments of every position to one of k subsequences of the summed
/// local_decr_of values. Exhaustive mode throws CapacityError when k^n exceeds
/// kAssignmentOracleBudget; fast mode reads the conjugate soliton partition.
int local_decr_k(const Permutation& w, int k, LocalDecrMode mode = LocalDecrMode::kFast);

/// Exhaustive local_decr_k for k = 1..max_k.
std::vector<int> local_decr_exhaustive_all(const Permutation& w, int max_k);

/// True when the exhaustive local_decr oracle is within budget for this (n, k).
bool local_decr_exhaustive_allowed(int n, int k);

struct GreeneProfile {
  std::vector<int> incr;
  std::vector<int> decr;
  std::vector<int> local_incr;
  std::vector<int> local_decr;
  bool operator==(const GreeneProfile&) const = default;
};

/// Partial sums of sh P(w), its conjugate, sh SD(w) and its conjugate; each of length n.
GreeneProfile greene_profile(const Permutation& w);

/// Same four sequences computed by the oracles above, without RS or BBS.
/// Throws CapacityError when n^n exceeds the assignment budget (n >= 8).
GreeneProfile greene_profile_oracle(const Permutation& w);

}  // namespace boxball
