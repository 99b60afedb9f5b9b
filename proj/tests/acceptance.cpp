// Acceptance suite: one line per criterion, exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "boxball/bbs.hpp"
#include "boxball/greene.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"
#include "boxball/verify.hpp"
#include "oracles.hpp"

using namespace boxball;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

VerifyOptions sweep_options() {
  VerifyOptions o;
  o.jobs = jobs();
  return o;
}

void require_report(Outcome& out, const VerificationReport& r) {
  out.require(r.passed(), r.claim_id + " n=" + std::to_string(r.n) + ": " +
                              std::to_string(r.violations.size()) + " violations" +
                              (r.violations.empty() ? "" : ", first " + r.violations[0].witness));
}

Outcome golden_evolution() {
  Outcome out;
  const auto start = Clock::now();
  const auto states = evolve(state_from_permutation(parse_permutation("452361")), 3);
  int first_steady = -1;
  for (int t = 0; t <= 3 && first_steady < 0; ++t) {
    if (is_steady(states[t])) first_steady = t;
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const char* expected[] = {"452361", "ee45e2136", "eeee452ee136", "eeeeee425eee136"};
  for (int t = 0; t <= 3; ++t) {
    out.require(states[t] == parse_state(expected[t]), std::string("state mismatch at t=") + std::to_string(t));
  }
  out.require(first_steady == 3, "steady state first at t=" + std::to_string(first_steady));
  out.require(steady_state_time(parse_permutation("452361")) == 3, "steady_state_time != 3");
  out.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  if (out.pass) out.note = std::to_string(ms) + " ms";
  return out;
}

Outcome golden_carrier() {
  Outcome out;
  const std::vector<int> ejected = carrier_eject({4, 5, 2, 0, 0, 1, 3, 6}, 6);
  std::string text;
  for (int v : ejected) text += v == BbsState::kEmpty ? 'e' : static_cast<char>('0' + v);
  out.require(text == "ee425eee136", "ejected " + text);
  return out;
}

Outcome golden_statistics() {
  Outcome out;
  const Permutation w = parse_permutation("5623714");
  out.require(insertion_tableau(w) == Tableau({{1, 3, 4}, {2, 6, 7}, {5}}), "P");
  out.require(soliton_decomposition(w) == Tableau({{1, 3, 4}, {2, 7}, {5, 6}}), "SD");
  const GreeneProfile g = greene_profile(w);
  const GreeneProfile o = greene_profile_oracle(w);
  auto head = [](const std::vector<int>& v) { return std::vector<int>(v.begin(), v.begin() + 3); };
  for (const GreeneProfile* p : {&g, &o}) {
    out.require(head(p->incr) == std::vector<int>{3, 6, 7}, "incr");
    out.require(head(p->decr) == std::vector<int>{3, 5, 7}, "decr");
    out.require(head(p->local_incr) == std::vector<int>{3, 5, 7}, "localincr");
    out.require(head(p->local_decr) == std::vector<int>{3, 6, 7}, "localdecr");
  }
  out.require(steady_state_time(w) == 1, "steady time");
  return out;
}

Outcome tfae_sweep() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    const auto r = verify_tfae(n, sweep_options());
    require_report(out, r);
    if (n <= 6) {
      bool subset = false;
      bool exhaustive = false;
      for (const auto& [k, v] : r.summary) {
        if (k == "incr/decr source") subset = v == "subset oracle";
        if (k == "localdecr exhaustive for k <=") exhaustive = v == std::to_string(n);
      }
      out.require(subset && exhaustive, "n=" + std::to_string(n) + " not fully oracle-backed");
    }
  }
  return out;
}

Outcome stepper_equivalence() {
  Outcome out;
  require_report(out, verify_steppers(7, sweep_options()));
  return out;
}

Outcome fukuda() {
  Outcome out;
  require_report(out, verify_fukuda(7, sweep_options()));
  return out;
}

Outcome qhat_theorem() {
  Outcome out;
  for (int n = 5; n <= 9; ++n) {
    require_report(out, verify_qhat(n, false, sweep_options()));
    const auto size = static_cast<std::int64_t>(enumerate_qhat_class(n).size());
    out.require(size == oracle::hook_length_count({n - 3, 2, 1}),
                "class size " + std::to_string(size) + " at n=" + std::to_string(n));
  }
  out.require(enumerate_qhat_class(5).size() == 5, "n=5 class size");
  out.require(enumerate_qhat_class(6).size() == 16, "n=6 class size");
  return out;
}

Outcome conjecture_sweeps() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    const auto r = verify_q_determines_time(n, sweep_options());
    out.require(r.conjecture, "q-determines-time not labelled conjecture");
    require_report(out, r);
  }
  for (int n = 5; n <= 8; ++n) {
    const auto r = verify_qhat(n, true, sweep_options());
    out.require(r.conjecture, "qhat-conjecture not labelled conjecture");
    require_report(out, r);
  }
  return out;
}

Outcome knuth_suites() {
  Outcome out;
  struct V {
    Tableau sd;
    int t;
  };
  const Tableau s2211a({{1, 4}, {2, 5}, {6}, {3}});
  const Tableau s2211b({{1, 4}, {2, 5}, {3}, {6}});
  const std::map<std::string, V> first{{"362514", {Tableau({{1, 4}, {2, 5}, {3, 6}}), 0}},
                                       {"362154", {s2211a, 2}},
                                       {"326514", {s2211a, 1}},
                                       {"326154", {s2211a, 2}},
                                       {"321654", {Tableau({{1, 4}, {5}, {6}, {2}, {3}}), 1}}};
  const std::map<std::string, V> second{{"326541", {Tableau({{1, 4}, {2}, {5}, {6}, {3}}), 1}},
                                        {"362541", {s2211b, 2}},
                                        {"365241", {s2211b, 2}},
                                        {"365214", {s2211b, 1}},
                                        {"635214", {s2211b, 1}},
                                        {"635241", {s2211b, 2}},
                                        {"632541", {Tableau({{1, 4}, {2}, {5}, {3}, {6}}), 1}},
                                        {"632514", {s2211b, 0}},
                                        {"632154", {Tableau({{1, 4}, {5}, {2}, {3}, {6}}), 1}}};
  for (const auto& [seed, expected] : {std::pair{"362514", first}, std::pair{"632514", second}}) {
    const auto g = knuth_class_graph(parse_permutation(seed));
    out.require(g.vertices.size() == expected.size(), std::string("class size of ") + seed);
    for (const auto& v : g.vertices) {
      const auto it = expected.find(v.w.to_string());
      out.require(it != expected.end(), "unexpected vertex " + v.w.to_string());
      if (it == expected.end()) continue;
      out.require(v.sd == it->second.sd, "SD of " + v.w.to_string());
      out.require(v.steady_time == it->second.t, "time of " + v.w.to_string());
    }
  }
  for (int n = 1; n <= 7; ++n) {
    require_report(out, verify_knuth_paths(n, sweep_options()));
    require_report(out, verify_t0(n, sweep_options()));
    require_report(out, verify_t1(n, sweep_options()));
  }
  return out;
}

Outcome dominance() {
  Outcome out;
  require_report(out, verify_dominance(8, sweep_options()));
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_s;  // wall-clock budget, 0 when the criterion states none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "golden evolution of 452361", 0, golden_evolution},
      {"AC2", "golden carrier trace on 452ee136", 0, golden_carrier},
      {"AC3", "golden statistics for 5623714", 0, golden_statistics},
      {"AC4", "TFAE sweep, n <= 7", 300, tfae_sweep},
      {"AC5", "direct/carrier stepper equivalence on S_7", 300, stepper_equivalence},
      {"AC6", "Fukuda invariance on S_7", 0, fukuda},
      {"AC7", "qhat theorem and class sizes, n = 5..9", 60, qhat_theorem},
      {"AC8", "conjecture sweeps (WARN-level), n <= 8", 0, conjecture_sweeps},
      {"AC9", "Knuth figure classes, knuth-paths, t0, t1 for n <= 7", 0, knuth_suites},
      {"AC10", "dominance sh SD <= sh P on S_8", 600, dominance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.require(false, "exceeded " + std::to_string(c.limit_s) + " s");
      if (o.pass == false && o.note.empty()) o.note = "too slow";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %-5s %-55s %8.3fs %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
