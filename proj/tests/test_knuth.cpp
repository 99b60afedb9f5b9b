#include <doctest.h>

#include <map>
#include <set>

#include "boxball/bbs.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"

using namespace boxball;

namespace {

struct Expected {
  Tableau sd;
  int time;
};

// Unordered edge -> label kind, as drawn in the figures.
using EdgeKinds = std::map<std::pair<std::string, std::string>, MoveKind>;

EdgeKinds edge_kinds(const KnuthClassGraph& g) {
  EdgeKinds out;
  for (const auto& e : g.edges) {
    auto a = g.vertices[e.a].w.to_string();
    auto b = g.vertices[e.b].w.to_string();
    if (b < a) std::swap(a, b);
    out[{a, b}] = e.label.kind;
  }
  return out;
}

void check_class(const KnuthClassGraph& g, const std::map<std::string, Expected>& expected,
                 const EdgeKinds& edges) {
  REQUIRE(g.vertices.size() == expected.size());
  for (const auto& v : g.vertices) {
    const auto it = expected.find(v.w.to_string());
    REQUIRE(it != expected.end());
    CHECK(v.sd == it->second.sd);
    CHECK(v.sd_shape == shape(it->second.sd));
    CHECK(v.steady_time == it->second.time);
  }
  CHECK(edge_kinds(g) == edges);
}

}  // namespace

TEST_CASE("classify_swap examples") {
  const auto a = classify_swap(parse_permutation("362514"), 1);
  REQUIRE(a);
  CHECK(a->kind == MoveKind::kKB);
  CHECK(a->direction == MoveDirection::kMinus);

  const auto b = classify_swap(parse_permutation("632514"), 2);
  REQUIRE(b);
  CHECK(b->kind == MoveKind::kK1Proper);
  CHECK(b->direction == MoveDirection::kPlus);
  CHECK(b->to_string() == "K1+");

  CHECK_FALSE(classify_swap(parse_permutation("123"), 0));
  CHECK_THROWS_AS(classify_swap(parse_permutation("123"), 2), DomainError);
  CHECK_THROWS_AS(classify_swap(parse_permutation("123"), -1), DomainError);
}

TEST_CASE("knuth_neighbors examples") {
  const auto n1 = knuth_neighbors(parse_permutation("362514"));
  REQUIRE(n1.size() == 2);
  CHECK(n1[0].w == parse_permutation("326514"));
  CHECK(n1[0].label.kind == MoveKind::kKB);
  CHECK(n1[1].w == parse_permutation("362154"));
  CHECK(n1[1].label.kind == MoveKind::kKB);

  const auto n2 = knuth_neighbors(parse_permutation("632514"));
  REQUIRE(n2.size() == 2);
  CHECK(n2[0].w == parse_permutation("635214"));
  CHECK(n2[0].label.kind == MoveKind::kK1Proper);
  CHECK(n2[1].w == parse_permutation("632154"));
  CHECK(n2[1].label.kind == MoveKind::kKB);

  CHECK(knuth_neighbors(Permutation::identity(6)).empty());
}

TEST_CASE("Knuth class of 362514 matches the figure") {
  const Tableau s2211({{1, 4}, {2, 5}, {6}, {3}});
  const std::map<std::string, Expected> expected{
      {"362514", {Tableau({{1, 4}, {2, 5}, {3, 6}}), 0}},
      {"362154", {s2211, 2}},
      {"326514", {s2211, 1}},
      {"326154", {s2211, 2}},
      {"321654", {Tableau({{1, 4}, {5}, {6}, {2}, {3}}), 1}},
  };
  const EdgeKinds edges{{{"362154", "362514"}, MoveKind::kKB},
                        {{"326514", "362514"}, MoveKind::kKB},
                        {{"326154", "362154"}, MoveKind::kK1Proper},
                        {{"326154", "326514"}, MoveKind::kK2Proper},
                        {{"321654", "326154"}, MoveKind::kKB}};
  const KnuthClassGraph g = knuth_class_graph(parse_permutation("362514"));
  check_class(g, expected, edges);
  CHECK(g.insertion == Tableau({{1, 4}, {2, 5}, {3, 6}}));
}

TEST_CASE("Knuth class of 632514 matches the figure") {
  const Tableau s({{1, 4}, {2, 5}, {3}, {6}});
  const std::map<std::string, Expected> expected{
      {"326541", {Tableau({{1, 4}, {2}, {5}, {6}, {3}}), 1}},
      {"362541", {s, 2}},
      {"365241", {s, 2}},
      {"365214", {s, 1}},
      {"635214", {s, 1}},
      {"635241", {s, 2}},
      {"632541", {Tableau({{1, 4}, {2}, {5}, {3}, {6}}), 1}},
      {"632514", {s, 0}},
      {"632154", {Tableau({{1, 4}, {5}, {2}, {3}, {6}}), 1}},
  };
  const EdgeKinds edges{{{"326541", "362541"}, MoveKind::kKB},
                        {{"362541", "365241"}, MoveKind::kK2Proper},
                        {{"365214", "365241"}, MoveKind::kK1Proper},
                        {{"365214", "635214"}, MoveKind::kK2Proper},
                        {{"635214", "635241"}, MoveKind::kK1Proper},
                        {{"365241", "635241"}, MoveKind::kK2Proper},
                        {{"632514", "635214"}, MoveKind::kK1Proper},
                        {{"632541", "635241"}, MoveKind::kKB},
                        {{"632154", "632514"}, MoveKind::kKB}};
  check_class(knuth_class_graph(parse_permutation("632514")), expected, edges);
}

TEST_CASE("identity class is a single vertex") {
  const auto g = knuth_class_graph(Permutation::identity(5));
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("class size cap") {
  CHECK_THROWS_AS(knuth_class_graph(parse_permutation("632514"), 4), CapacityError);
  CHECK_NOTHROW(knuth_class_graph(parse_permutation("632514"), 9));
}

TEST_CASE("edges are stored from the lexicographically smaller endpoint") {
  const auto g = knuth_class_graph(parse_permutation("632514"));
  for (const auto& e : g.edges) {
    const auto& a = g.vertices[e.a].w;
    const auto& b = g.vertices[e.b].w;
    CHECK(a < b);
    CHECK(a.swapped(e.label.position) == b);
    CHECK(e.label.direction == MoveDirection::kPlus);
  }
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(knuth_class_graph(parse_permutation("362514")));
  CHECK(dot.find("graph knuth_class {") == 0);
  CHECK(dot.find("label=\"362514\\nt=0\\nshape=(2,2,2)\"") != std::string::npos);
  CHECK(dot.find("label=\"321654\\nt=1\\nshape=(2,1,1,1,1)\"") != std::string::npos);
  CHECK(dot.find("[label=\"KB+\"]") != std::string::npos);
  CHECK(dot.find("[label=\"K1+\"]") != std::string::npos);
}

TEST_CASE("descent step and shape preservation along every move, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      const Partition sd_shape = shape(soliton_decomposition(w));
      for (const auto& nb : knuth_neighbors(w)) {
        const int delta = nb.w.descents() - w.descents();
        if (nb.label.kind == MoveKind::kKB) {
          REQUIRE(delta == (nb.label.direction == MoveDirection::kMinus ? 1 : -1));
        } else {
          REQUIRE(delta == 0);
          REQUIRE(shape(soliton_decomposition(nb.w)) == sd_shape);
        }
      }
    });
  }
}

TEST_CASE("moves from reading words of standard tableaux, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& t : standard_tableaux(lambda)) {
        const Permutation r = row_reading_word(t);
        for (const auto& nb : knuth_neighbors(r)) {
          const auto& l = nb.label;
          if (l.is_k1() && l.direction == MoveDirection::kMinus) REQUIRE(l.kind == MoveKind::kKB);
          if (l.is_k1() && l.direction == MoveDirection::kPlus) REQUIRE(l.kind != MoveKind::kKB);
          REQUIRE_FALSE((l.is_k2() && l.direction == MoveDirection::kPlus));
        }
      }
    }
  }
}
