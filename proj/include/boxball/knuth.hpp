#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

enum class MoveKind { kK1Proper, kK2Proper, kKB };
enum class MoveDirection { kPlus, kMinus };

/// Classification of the adjacent swap at (position, position + 1).
///
/// kK1Proper / kK2Proper: exactly one witness y with x < y < z sits immediately to
/// the left / right of the pair. kKB: both witnesses exist. kPlus when the swap
/// turns "xz" into "zx", kMinus for the reverse.
struct KnuthMoveLabel {
  int position = 0;
  MoveKind kind = MoveKind::kK1Proper;
  MoveDirection direction = MoveDirection::kPlus;

  bool is_k1() const { return kind != MoveKind::kK2Proper; }
  bool is_k2() const { return kind != MoveKind::kK1Proper; }

  /// "K1+", "K2-", "KB+", ...
  std::string to_string() const;

  bool operator==(const KnuthMoveLabel&) const = default;
};

/// Throws DomainError unless 0 <= i <= n - 2.
std::optional<KnuthMoveLabel> classify_swap(const Permutation& w, int i);

struct KnuthNeighbor {
  Permutation w;
  KnuthMoveLabel label;
};

/// Every permutation one Knuth move away, ordered by swap position.
std::vector<KnuthNeighbor> knuth_neighbors(const Permutation& w);

struct KnuthVertex {
  Permutation w;
  Tableau sd;
  Partition sd_shape;
  int steady_time = 0;
};

/// Undirected edge; `a` indexes the lexicographically smaller endpoint and the
/// label describes the move from `a` to `b`.
struct KnuthEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  KnuthMoveLabel label;
};

struct KnuthClassGraph {
  Tableau insertion;  // shared P tableau
  std::vector<KnuthVertex> vertices;  // BFS order, seed first
  std::vector<KnuthEdge> edges;

  std::optional<std::size_t> index_of(const Permutation& w) const;
};

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// BFS closure of w under Knuth moves with SD, shape and steady-state time per
/// vertex. Throws CapacityError past `max_vertices`.
KnuthClassGraph knuth_class_graph(const Permutation& w, std::size_t max_vertices = kDefaultClassCap);

/// Graphviz rendering: vertex labels "w\nt=T\nshape=(..)", edge labels as to_string().
std::string to_dot(const KnuthClassGraph& g);

}  // namespace boxball
