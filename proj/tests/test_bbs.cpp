#include <doctest.h>

#include "boxball/bbs.hpp"
#include "boxball/rs.hpp"
#include "oracles.hpp"

using namespace boxball;

namespace {

BbsState seed(const std::string& w) { return state_from_permutation(parse_permutation(w)); }

}  // namespace

TEST_CASE("state_from_permutation") {
  const BbsState s = seed("452361");
  CHECK(s.offset() == 0);
  CHECK(s.content() == std::vector<int>{4, 5, 2, 3, 6, 1});
  CHECK(seed("1").content() == std::vector<int>{1});
  CHECK(seed("5623714").content() == std::vector<int>{5, 6, 2, 3, 7, 1, 4});
}

TEST_CASE("state construction enforces trimming and labels") {
  CHECK_THROWS_AS(BbsState(0, {0, 1}), DomainError);
  CHECK_THROWS_AS(BbsState(0, {1, 0}), DomainError);
  CHECK_THROWS_AS(BbsState(-1, {1}), DomainError);
  CHECK_THROWS_AS(BbsState(0, {1, 3}), DomainError);
  CHECK(parse_state("ee45e2136") == BbsState(2, {4, 5, 0, 2, 1, 3, 6}));
}

TEST_CASE("direct stepper reproduces the 452361 evolution") {
  const BbsState t1 = step_direct(seed("452361"));
  CHECK(t1 == parse_state("ee45e2136"));
  CHECK(t1.content() == std::vector<int>{4, 5, 0, 2, 1, 3, 6});
  CHECK(step_direct(parse_state("ee45e2136")) == parse_state("eeee452ee136"));
  CHECK(step_direct(parse_state("eeee452ee136")) == parse_state("eeeeee425eee136"));
  CHECK(t1.to_ascii() == "..45.2136");
}

TEST_CASE("a single increasing soliton advances by its length") {
  for (int n = 1; n <= 9; ++n) {
    const BbsState s = state_from_permutation(Permutation::identity(n));
    const BbsState next = step_direct(s);
    CHECK(next.offset() == n);
    CHECK(next.content() == s.content());
  }
}

TEST_CASE("carrier stepper on the worked example") {
  // B = 452ee136 with n = 6.
  const std::vector<int> ejected = carrier_eject({4, 5, 2, 0, 0, 1, 3, 6}, 6);
  CHECK(ejected == std::vector<int>{0, 0, 4, 2, 5, 0, 0, 0, 1, 3, 6});
  CHECK(step_carrier(parse_state("eeee452ee136")) == parse_state("eeeeee425eee136"));
  CHECK(step_carrier(seed("321")) == parse_state("e321"));
  CHECK(step_carrier(seed("12")) == parse_state("ee12"));
  CHECK(step_direct(seed("321")) == parse_state("e321"));
}

TEST_CASE("carrier trace follows the bracket notation") {
  const auto lines = carrier_trace(parse_state("452ee136"));
  REQUIRE(lines.size() >= 14);
  CHECK(lines[1] == "[eeeeee]452ee136");
  CHECK(lines[2] == "e[4eeeee]52ee136");
  CHECK(lines[4] == "ee4[25eeee]ee136");
  CHECK(lines[9] == "ee425eee[136eee]");
  CHECK(lines[12] == "ee425eee[136eee]<-e");
  CHECK(lines[15] == "ee425eee136[eeeeee]");
}

TEST_CASE("steppers agree on every state reached from S_n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      BbsState s = state_from_permutation(w);
      for (int t = 0; t < 2 * n; ++t) {
        const BbsState a = step_direct(s);
        REQUIRE(a == step_carrier(s));
        s = a;
      }
    });
  }
}

TEST_CASE("configuration arrays") {
  const SkewArray t1 = configuration_array(parse_state("ee56e27134"));
  CHECK(t1.rows() == std::vector<SkewRow>{{1, {1, 3, 4}}, {1, {2, 7}}, {0, {5, 6}}});

  const SkewArray other = configuration_array(parse_state("e137e2469ee58e"));
  CHECK(other.rows() == std::vector<SkewRow>{{3, {5, 8}}, {1, {2, 4, 6, 9}}, {0, {1, 3, 7}}});

  const SkewArray one = configuration_array(seed("12345"));
  CHECK(one.rows() == std::vector<SkewRow>{{0, {1, 2, 3, 4, 5}}});

  const SkewArray t0 = configuration_array(seed("5623714"));
  CHECK(t0.rows() == std::vector<SkewRow>{{0, {1, 4}}, {0, {2, 3, 7}}, {0, {5, 6}}});
}

TEST_CASE("steady-state detection") {
  CHECK(is_steady(step_direct(seed("5623714"))));
  CHECK_FALSE(is_steady(seed("5623714")));
  CHECK_FALSE(is_steady(parse_state("e137e2469ee58e")));
  CHECK(configuration_array(parse_state("e137e2469ee58e")).rows().size() == 3);
  CHECK_FALSE(is_steady(seed("452361")));
  const auto states = evolve(seed("452361"), 3);
  CHECK_FALSE(is_steady(states[2]));
  CHECK(is_steady(states[3]));
}

TEST_CASE("steady_state_time examples") {
  CHECK(steady_state_time(parse_permutation("452361")) == 3);
  CHECK(steady_state_time(parse_permutation("5623714")) == 1);
  CHECK(steady_state_time(parse_permutation("123456")) == 0);
  CHECK(steady_state_time(parse_permutation("362154")) == 2);
  CHECK(steady_state_time(parse_permutation("326514")) == 1);
  CHECK(steady_state_time(parse_permutation("1")) == 0);
}

TEST_CASE("configuration-array criterion matches steadiness by simulation, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      BbsState s = state_from_permutation(w);
      bool was_steady = false;
      for (int t = 0; t <= n + 2; ++t) {
        const bool steady = is_steady(s);
        REQUIRE(steady == oracle::steady_by_simulation(s, 3 * n));
        if (was_steady) REQUIRE(steady);
        was_steady = steady;
        s = step_direct(s);
      }
    });
  }
}

TEST_CASE("soliton decompositions") {
  CHECK(soliton_decomposition(parse_permutation("452361")) == Tableau({{1, 3, 6}, {2, 5}, {4}}));
  CHECK(soliton_decomposition(parse_permutation("5623714")) == Tableau({{1, 3, 4}, {2, 7}, {5, 6}}));
  CHECK(soliton_decomposition(parse_permutation("321654")) ==
        Tableau({{1, 4}, {5}, {6}, {2}, {3}}));
}

TEST_CASE("Fukuda invariance and reading-word closure, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      const Tableau p = insertion_tableau(w);
      for (const auto& s : evolve(state_from_permutation(w), steady_state_time(w) + 2)) {
        REQUIRE(insertion_tableau(s.ball_word()) == p);
      }
      const Tableau sd = soliton_decomposition(w);
      REQUIRE(insertion_tableau(row_reading_word(sd)) == p);
    });
  }
}

TEST_CASE("SD shapes are partitions and the 3n cap never fires, n = 8") {
  for_each_permutation(8, [&](const Permutation& w) {
    const Tableau sd = soliton_decomposition(w);  // Tableau() rejects increasing row lengths
    REQUIRE(is_row_strict(sd));
    REQUIRE(insertion_tableau(row_reading_word(sd)) == insertion_tableau(w));
  });
}

TEST_CASE("5623714 evolves through the listed states for t = 0..4") {
  const auto states = evolve(seed("5623714"), 4);
  CHECK(states[1] == parse_state("ee56e27134"));
  CHECK(states[2] == parse_state("eeee56e27e134"));
  CHECK(states[3] == parse_state("eeeeee56e27ee134"));
  CHECK(states[4] == parse_state("eeeeeeee56e27eee134"));
  for (int t = 1; t <= 4; ++t) CHECK(is_steady(states[t]));
}
