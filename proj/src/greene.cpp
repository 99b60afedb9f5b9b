#include "boxball/greene.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "boxball/bbs.hpp"
#include "boxball/rs.hpp"

namespace boxball {

namespace {

void check_k(const Permutation& w, int k) {
  if (k < 1 || k > w.size()) {
    throw DomainError("k = " + std::to_string(k) + " outside 1.." + std::to_string(w.size()));
  }
}

template <typename Less>
int longest_chain(std::span<const int> seq, Less less) {
  // Patience sorting: tails[i] is the smallest possible tail of a chain of length i+1.
  std::vector<int> tails;
  for (int v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v, less);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

// best[k-1] = largest subset whose `blocking` chain length is at most k.
std::vector<int> subset_sweep(const Permutation& w, bool want_increasing) {
  const int n = w.size();
  if (n > kSubsetOracleMaxN) {
    throw CapacityError("subset oracle limited to n <= " + std::to_string(kSubsetOracleMaxN));
  }
  std::vector<int> best(n, 0);
  std::vector<int> subset;
  subset.reserve(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(w[i]);
    }
    // Dilworth: a k-increasing set is one whose longest decreasing chain is <= k.
    const int chain = want_increasing ? longest_decreasing(subset) : longest_increasing(subset);
    const int size = static_cast<int>(subset.size());
    if (size > best[chain - 1]) best[chain - 1] = size;
  }
  for (int k = 1; k < n; ++k) best[k] = std::max(best[k], best[k - 1]);
  return best;
}

}  // namespace

int longest_increasing(std::span<const int> seq) { return longest_chain(seq, std::less<>()); }

int longest_decreasing(std::span<const int> seq) { return longest_chain(seq, std::greater<>()); }

std::vector<int> incr_oracle_all(const Permutation& w) { return subset_sweep(w, true); }

std::vector<int> decr_oracle_all(const Permutation& w) { return subset_sweep(w, false); }

int incr_k_oracle(const Permutation& w, int k) {
  check_k(w, k);
  return incr_oracle_all(w)[k - 1];
}

int decr_k_oracle(const Permutation& w, int k) {
  check_k(w, k);
  return decr_oracle_all(w)[k - 1];
}

std::vector<int> local_incr_all(const Permutation& w) {
  const int n = w.size();
  // lis[i][j] = LIS of w[i..j), 0 <= i <= j <= n.
  std::vector<std::vector<int>> lis(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) lis[i][j] = longest_increasing(w.word().subspan(i, j - i));
  }
  // best[j] = optimum for prefix w[0..j) using the current number of blocks.
  std::vector<int> best(n + 1);
  for (int j = 0; j <= n; ++j) best[j] = lis[0][j];
  std::vector<int> result{best[n]};
  for (int k = 2; k <= n; ++k) {
    std::vector<int> next(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) next[j] = std::max(next[j], best[i] + lis[i][j]);
    }
    best = std::move(next);
    result.push_back(best[n]);
  }
  return result;
}

int local_incr_k(const Permutation& w, int k) {
  check_k(w, k);
  return local_incr_all(w)[k - 1];
}

int local_decr_of(std::span<const int> seq) {
  if (seq.empty()) return 0;
  int d = 1;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) d += seq[i] > seq[i + 1];
  return d;
}

bool local_decr_exhaustive_allowed(int n, int k) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > kAssignmentOracleBudget) return false;
  }
  return true;
}

std::vector<int> local_decr_exhaustive_all(const Permutation& w, int max_k) {
  const int n = w.size();
  check_k(w, max_k);
  if (!local_decr_exhaustive_allowed(n, max_k)) {
    throw CapacityError("assignment oracle budget exceeded: " + std::to_string(max_k) + "^" +
                        std::to_string(n) + " > " + std::to_string(kAssignmentOracleBudget));
  }
  // Labels are interchangeable, so only canonical assignments are visited: position
  // i may open label b only when labels 0..b-1 are already in use.
  std::vector<int> by_blocks(max_k + 1, 0);
  std::vector<int> last(max_k, 0);
  std::function<void(int, int, int)> assign = [&](int pos, int used, int value) {
    if (pos == n) {
      by_blocks[used] = std::max(by_blocks[used], value);
      return;
    }
    const int v = w[pos];
    for (int b = 0; b < used; ++b) {
      const int saved = last[b];
      last[b] = v;
      assign(pos + 1, used, value + (saved > v ? 1 : 0));
      last[b] = saved;
    }
    if (used < max_k) {
      last[used] = v;
      assign(pos + 1, used + 1, value + 1);
    }
  };
  assign(0, 0, 0);
  std::vector<int> result(max_k);
  int running = 0;
  for (int k = 1; k <= max_k; ++k) {
    running = std::max(running, by_blocks[k]);
    result[k - 1] = running;
  }
  return result;
}

int local_decr_k(const Permutation& w, int k, LocalDecrMode mode) {
  check_k(w, k);
  if (mode == LocalDecrMode::kExhaustive) return local_decr_exhaustive_all(w, k)[k - 1];
  return conjugate(shape(soliton_decomposition(w))).partial_sums(w.size())[k - 1];
}

GreeneProfile greene_profile(const Permutation& w) {
  const int n = w.size();
  const Partition rs_shape = shape(insertion_tableau(w));
  const Partition sd_shape = shape(soliton_decomposition(w));
  return GreeneProfile{rs_shape.partial_sums(n), conjugate(rs_shape).partial_sums(n),
                       sd_shape.partial_sums(n), conjugate(sd_shape).partial_sums(n)};
}

GreeneProfile greene_profile_oracle(const Permutation& w) {
  return GreeneProfile{incr_oracle_all(w), decr_oracle_all(w), local_incr_all(w),
                       local_decr_exhaustive_all(w, w.size())};
}

}  // namespace boxball
