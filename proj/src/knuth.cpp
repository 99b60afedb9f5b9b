#include "boxball/knuth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "boxball/bbs.hpp"
#include "boxball/rs.hpp"

namespace boxball {

std::string KnuthMoveLabel::to_string() const {
  std::string s;
  switch (kind) {
    case MoveKind::kK1Proper: s = "K1"; break;
    case MoveKind::kK2Proper: s = "K2"; break;
    case MoveKind::kKB: s = "KB"; break;
  }
  return s + (direction == MoveDirection::kPlus ? "+" : "-");
}

std::optional<KnuthMoveLabel> classify_swap(const Permutation& w, int i) {
  const int n = w.size();
  if (i < 0 || i > n - 2) {
    throw DomainError("swap position " + std::to_string(i) + " outside 0.." + std::to_string(n - 2));
  }
  const int a = w[i];
  const int b = w[i + 1];
  const int x = std::min(a, b);
  const int z = std::max(a, b);
  auto between = [x, z](int y) { return x < y && y < z; };
  const bool left = i >= 1 && between(w[i - 1]);
  const bool right = i + 2 <= n - 1 && between(w[i + 2]);
  if (!left && !right) return std::nullopt;
  KnuthMoveLabel label;
  label.position = i;
  label.kind = left && right ? MoveKind::kKB : (left ? MoveKind::kK1Proper : MoveKind::kK2Proper);
  label.direction = a < b ? MoveDirection::kPlus : MoveDirection::kMinus;
  return label;
}

std::vector<KnuthNeighbor> knuth_neighbors(const Permutation& w) {
  std::vector<KnuthNeighbor> out;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (auto label = classify_swap(w, i)) out.push_back({w.swapped(i), *label});
  }
  return out;
}

std::optional<std::size_t> KnuthClassGraph::index_of(const Permutation& w) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].w == w) return i;
  }
  return std::nullopt;
}

KnuthClassGraph knuth_class_graph(const Permutation& w, std::size_t max_vertices) {
  std::map<Permutation, std::size_t> index;
  std::vector<Permutation> order;
  std::vector<KnuthEdge> edges;
  std::deque<std::size_t> queue;

  auto visit = [&](const Permutation& p) {
    auto [it, inserted] = index.try_emplace(p, order.size());
    if (inserted) {
      if (order.size() >= max_vertices) {
        throw CapacityError("Knuth class exceeds " + std::to_string(max_vertices) + " vertices");
      }
      order.push_back(p);
      queue.push_back(it->second);
    }
    return it->second;
  };

  visit(w);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const Permutation current = order[u];
    for (const auto& nb : knuth_neighbors(current)) {
      const std::size_t v = visit(nb.w);
      // Each undirected edge is recorded once, from its lexicographically smaller end.
      if (current < nb.w) edges.push_back(KnuthEdge{u, v, nb.label});
    }
  }

  KnuthClassGraph g;
  g.insertion = insertion_tableau(w);
  g.vertices.reserve(order.size());
  for (const auto& p : order) {
    Tableau sd = soliton_decomposition(p);
    Partition sd_shape = shape(sd);
    g.vertices.push_back(KnuthVertex{p, std::move(sd), std::move(sd_shape), steady_state_time(p)});
  }
  g.edges = std::move(edges);
  return g;
}

std::string to_dot(const KnuthClassGraph& g) {
  std::ostringstream os;
  os << "graph knuth_class {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.w.to_string() << "\\nt=" << v.steady_time
       << "\\nshape=" << v.sd_shape.to_string() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.label.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace boxball
