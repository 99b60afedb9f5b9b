#include "boxball/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "boxball/bbs.hpp"
#include "boxball/core.hpp"
#include "boxball/greene.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"

namespace boxball {

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  std::int64_t tally = 0;
  std::map<std::string, std::set<int>> groups;

  void fail(const std::string& witness, const std::string& detail) {
    violations.push_back(Violation{witness, detail});
  }
};

// Runs fn(chunk, partial) for chunk = 0..count-1 on up to `jobs` threads and
// returns the partials in chunk order, so merged output is independent of scheduling.
std::vector<Partial> run_chunks(std::size_t count, int jobs,
                                const std::function<void(std::size_t, Partial&)>& fn) {
  std::vector<Partial> partials(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < count; c = next++) {
      try {
        fn(c, partials[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

// Sweeps S_n split by first letter.
std::vector<Partial> sweep_permutations(int n, int jobs,
                                        const std::function<void(const Permutation&, Partial&)>& fn) {
  return run_chunks(static_cast<std::size_t>(n), jobs, [&](std::size_t chunk, Partial& part) {
    for_each_permutation_starting_with(n, static_cast<int>(chunk) + 1,
                                       [&](const Permutation& w) { fn(w, part); });
  });
}

// All standard tableaux with n cells, shapes in reverse lexicographic order.
std::vector<Tableau> all_standard_tableaux(int n) {
  std::vector<Tableau> out;
  for (const auto& lambda : partitions_of(n)) {
    auto tabs = standard_tableaux(lambda);
    out.insert(out.end(), tabs.begin(), tabs.end());
  }
  return out;
}

VerificationReport assemble(const std::string& id, int n, bool conjecture,
                            std::vector<Partial> partials, Clock::time_point start) {
  VerificationReport r;
  r.claim_id = id;
  r.n = n;
  r.conjecture = conjecture;
  for (auto& p : partials) {
    r.checked += p.checked;
    r.violations.insert(r.violations.end(), std::make_move_iterator(p.violations.begin()),
                        std::make_move_iterator(p.violations.end()));
  }
  r.elapsed = Clock::now() - start;
  return r;
}

std::string rows_string(const Tableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    if (!s.empty()) s += '/';
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0 && t.cell_count() > 9) s += ',';
      s += std::to_string(row[j]);
    }
  }
  return s;
}

std::string seq_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string fraction(std::int64_t num, std::int64_t den) {
  std::ostringstream os;
  os << num << "/" << den << " (" << std::fixed << std::setprecision(6)
     << (den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den)) << ")";
  return os.str();
}

// Largest k with k^n inside the assignment-oracle budget.
int exhaustive_k_limit(int n) {
  int k = 0;
  while (k < n && local_decr_exhaustive_allowed(n, k + 1)) ++k;
  return k;
}

int env_max_n() {
  if (const char* v = std::getenv("BOXBALL_MAX_N")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw DomainError(std::string("BOXBALL_MAX_N is not an integer: ") + v);
    }
  }
  return 0;
}

void check_budget(const std::string& suite, int n, const VerifyOptions& opts) {
  if (n < 1) throw DomainError("n must be at least 1");
  int limit = default_max_n(suite);
  if (opts.max_n) {
    limit = *opts.max_n;
  } else if (const int env = env_max_n(); env > 0) {
    limit = env;
  }
  if (n > limit) {
    throw CapacityError("suite " + suite + " limited to n <= " + std::to_string(limit) +
                        " (raise with --max-n or BOXBALL_MAX_N)");
  }
}

// Moves from the start through steady state plus `extra` further moves.
std::vector<BbsState> trajectory(const Permutation& w, int extra) {
  return evolve(state_from_permutation(w), steady_state_time(w) + extra);
}

}  // namespace

std::string VerificationReport::to_text(bool with_table) const {
  std::ostringstream os;
  const char* status = passed() ? "PASS" : (conjecture ? "WARN" : "FAIL");
  os << "[" << status << "] " << claim_id << (conjecture ? " (CONJECTURE)" : "") << " n=" << n
     << " checked=" << checked << " violations=" << violations.size() << " elapsed=" << std::fixed
     << std::setprecision(3) << elapsed.count() << "s\n";
  for (const auto& [k, v] : summary) os << "  " << k << ": " << v << "\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < violations.size() && i < kShown; ++i) {
    os << "  violation " << violations[i].witness << ": " << violations[i].detail << "\n";
  }
  if (violations.size() > kShown) os << "  ... " << violations.size() - kShown << " more\n";
  if (with_table) {
    for (const auto& [k, v] : table) os << "  " << k << " -> " << v << "\n";
  }
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "tfae",       "t0",          "t1",     "qhat",       "qhat-conjecture",
      "q-determines-time", "knuth-paths", "steppers", "fukuda", "dominance",
      "separation", "persistence", "greene", "reading-word-lemmas"};
  return names;
}

int default_max_n(const std::string& suite) {
  if (suite == "knuth-paths") return 7;
  if (suite == "qhat") return 9;
  return 8;
}

VerificationReport run_suite(const std::string& suite, int n, const VerifyOptions& opts) {
  if (suite == "tfae") return verify_tfae(n, opts);
  if (suite == "t0") return verify_t0(n, opts);
  if (suite == "t1") return verify_t1(n, opts);
  if (suite == "qhat") return verify_qhat(n, false, opts);
  if (suite == "qhat-conjecture") return verify_qhat(n, true, opts);
  if (suite == "q-determines-time") return verify_q_determines_time(n, opts);
  if (suite == "knuth-paths") return verify_knuth_paths(n, opts);
  if (suite == "steppers") return verify_steppers(n, opts);
  if (suite == "fukuda") return verify_fukuda(n, opts);
  if (suite == "dominance") return verify_dominance(n, opts);
  if (suite == "separation") return verify_separation(n, opts);
  if (suite == "persistence") return verify_persistence(n, opts);
  if (suite == "greene") return verify_greene(n, opts);
  if (suite == "reading-word-lemmas") return verify_reading_word_lemmas(n, opts);
  throw DomainError("unknown suite '" + suite + "'");
}

VerificationReport verify_tfae(int n, const VerifyOptions& opts) {
  check_budget("tfae", n, opts);
  const auto start = Clock::now();
  const bool subset_oracle = n <= kSubsetOracleMaxN;
  const int k_exhaustive = exhaustive_k_limit(n);
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const Tableau p = insertion_tableau(w);
    const Tableau sd = soliton_decomposition(w);
    const Partition p_shape = shape(p);
    const Partition sd_shape = shape(sd);

    const std::vector<int> incr = subset_oracle ? incr_oracle_all(w) : p_shape.partial_sums(n);
    const std::vector<int> decr =
        subset_oracle ? decr_oracle_all(w) : conjugate(p_shape).partial_sums(n);
    const std::vector<int> local_incr = local_incr_all(w);
    std::vector<int> local_decr = conjugate(sd_shape).partial_sums(n);
    if (k_exhaustive > 0) {
      const auto exact = local_decr_exhaustive_all(w, k_exhaustive);
      std::copy(exact.begin(), exact.end(), local_decr.begin());
    }

    const bool c[5] = {sd == p, is_standard(sd), sd_shape == p_shape, local_incr == incr,
                       local_decr == decr};
    ++part.checked;
    if (c[0]) ++part.tally;
    if (!std::all_of(std::begin(c), std::end(c), [&](bool b) { return b == c[0]; })) {
      std::ostringstream os;
      os << "SD=P:" << c[0] << " SD standard:" << c[1] << " shapes equal:" << c[2]
         << " localincr=incr:" << c[3] << " localdecr=decr:" << c[4] << " SD=" << rows_string(sd)
         << " P=" << rows_string(p) << " incr=" << seq_string(incr)
         << " localincr=" << seq_string(local_incr) << " decr=" << seq_string(decr)
         << " localdecr=" << seq_string(local_decr);
      part.fail(w.to_string(), os.str());
    }
  });
  std::int64_t equal = 0;
  for (const auto& p : partials) equal += p.tally;
  auto r = assemble("tfae", n, false, std::move(partials), start);
  r.summary.emplace_back("sd_equals_p", fraction(equal, r.checked));
  r.summary.emplace_back("incr/decr source", subset_oracle ? "subset oracle" : "RS shape");
  r.summary.emplace_back("localdecr exhaustive for k <=", std::to_string(k_exhaustive));
  return r;
}

VerificationReport verify_t0(int n, const VerifyOptions& opts) {
  check_budget("t0", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const bool steady = steady_state_time(w) == 0;
    const bool reading = row_reading_word(insertion_tableau(w)) == w;
    ++part.checked;
    if (reading) ++part.tally;
    if (steady != reading) {
      part.fail(w.to_string(), std::string("steady at t=0: ") + (steady ? "yes" : "no") +
                                   ", reading word of P(w): " + (reading ? "yes" : "no"));
    }
  });
  std::int64_t readings = 0;
  for (const auto& p : partials) readings += p.tally;
  auto r = assemble("t0", n, false, std::move(partials), start);
  r.summary.emplace_back("reading_words", std::to_string(readings));
  return r;
}

VerificationReport verify_t1(int n, const VerifyOptions& opts) {
  check_budget("t1", n, opts);
  const auto start = Clock::now();
  const auto tableaux = all_standard_tableaux(n);
  auto partials = run_chunks(tableaux.size(), opts.jobs, [&](std::size_t i, Partial& part) {
    const Permutation r = row_reading_word(tableaux[i]);
    for (const auto& nb : knuth_neighbors(r)) {
      if (nb.label.kind == MoveKind::kKB) continue;
      ++part.checked;
      const int t = steady_state_time(nb.w);
      if (t != 1) {
        part.fail(nb.w.to_string(), "one " + nb.label.to_string() + " move from reading word " +
                                        r.to_string() + " but steady-state time " +
                                        std::to_string(t));
      }
    }
  });
  auto r = assemble("t1", n, false, std::move(partials), start);
  r.summary.emplace_back("reading_words", std::to_string(tableaux.size()));
  return r;
}

VerificationReport verify_qhat(int n, bool conjecture_mode, const VerifyOptions& opts) {
  const std::string id = conjecture_mode ? "qhat-conjecture" : "qhat";
  if (n < 5) throw DomainError("qhat suites need n >= 5");
  check_budget(id, n, opts);
  const auto start = Clock::now();
  const int target = n - 3;
  const auto members = enumerate_qhat_class(n);
  std::vector<Partial> partials;
  if (!conjecture_mode) {
    partials = run_chunks(members.size(), opts.jobs, [&](std::size_t i, Partial& part) {
      const Permutation& w = members[i];
      ++part.checked;
      const int t = steady_state_time(w);
      if (t != target) {
        part.fail(w.to_string(), "steady-state time " + std::to_string(t) + ", expected " +
                                     std::to_string(target));
      }
      // Ordering clauses forced by the recording tableau.
      bool increasing_middle = true;
      for (int j = 2; j + 1 < n - 1; ++j) increasing_middle &= w[j] < w[j + 1];
      const bool clauses = increasing_middle && w[n - 1] < w[1] && w[0] < w[1] && w[2] < w[0] &&
                           w[2] < w[1] && w[3] < w[1];
      if (!clauses) part.fail(w.to_string(), "violates an ordering clause of the qhat class");
    });
  } else {
    const Tableau qhat = qhat_tableau(n);
    partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
      const RsPair pq = rs_insert(w);
      if (pq.q == qhat) return;
      ++part.checked;
      const int t = steady_state_time(w);
      if (t >= target) {
        part.fail(w.to_string(), "Q=" + rows_string(pq.q) + " is not qhat but steady-state time " +
                                     std::to_string(t) + " >= " + std::to_string(target));
      }
    });
  }
  auto r = assemble(id, n, conjecture_mode, std::move(partials), start);
  r.summary.emplace_back("class_size", std::to_string(members.size()));
  return r;
}

VerificationReport verify_q_determines_time(int n, const VerifyOptions& opts) {
  check_budget("q-determines-time", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    ++part.checked;
    part.groups[rows_string(rs_insert(w).q)].insert(steady_state_time(w));
  });
  std::map<std::string, std::set<int>> groups;
  for (const auto& p : partials) {
    for (const auto& [q, times] : p.groups) groups[q].insert(times.begin(), times.end());
  }
  auto r = assemble("q-determines-time", n, true, std::move(partials), start);
  for (const auto& [q, times] : groups) {
    std::string ts;
    for (int t : times) ts += (ts.empty() ? "" : ",") + std::to_string(t);
    r.table.emplace_back(q, ts);
    if (times.size() > 1) r.violations.push_back(Violation{q, "times {" + ts + "} within one Q fiber"});
  }
  r.summary.emplace_back("recording_tableaux", std::to_string(groups.size()));
  return r;
}

VerificationReport verify_knuth_paths(int n, const VerifyOptions& opts) {
  check_budget("knuth-paths", n, opts);
  const auto start = Clock::now();
  const auto tableaux = all_standard_tableaux(n);
  auto partials = run_chunks(tableaux.size(), opts.jobs, [&](std::size_t ci, Partial& part) {
    const KnuthClassGraph g = knuth_class_graph(row_reading_word(tableaux[ci]));
    const std::size_t m = g.vertices.size();
    part.checked += static_cast<std::int64_t>(m);

    std::vector<std::vector<std::pair<std::size_t, int>>> adj(m);
    for (const auto& e : g.edges) {
      int delta = 0;  // SD height change along a -> b
      if (e.label.kind == MoveKind::kKB) delta = e.label.direction == MoveDirection::kPlus ? -1 : 1;
      adj[e.a].emplace_back(e.b, delta);
      adj[e.b].emplace_back(e.a, -delta);

      const auto& va = g.vertices[e.a];
      const auto& vb = g.vertices[e.b];
      if (!(insertion_tableau(vb.w) == g.insertion) || !(insertion_tableau(va.w) == g.insertion)) {
        part.fail(va.w.to_string(), "Knuth move to " + vb.w.to_string() + " changes P");
      }
      if (e.label.kind != MoveKind::kKB && !(va.sd_shape == vb.sd_shape)) {
        part.fail(va.w.to_string(), e.label.to_string() + " move to " + vb.w.to_string() +
                                        " changes sh SD " + va.sd_shape.to_string() + " -> " +
                                        vb.sd_shape.to_string());
      }
    }

    // Signed KB count from the seed along BFS paths; consistency on every edge
    // makes it path independent.
    std::vector<int> potential(m, 0);
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, d] : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          potential[v] = potential[u] + d;
          stack.push_back(v);
        } else if (potential[v] != potential[u] + d) {
          part.fail(g.vertices[u].w.to_string(), "signed KB count depends on the path to " +
                                                     g.vertices[v].w.to_string());
        }
      }
    }
    const int root_height = g.vertices[0].sd.num_rows();
    for (std::size_t v = 0; v < m; ++v) {
      const int height_change = g.vertices[v].sd.num_rows() - root_height;
      if (height_change != potential[v]) {
        part.fail(g.vertices[v].w.to_string(),
                  "SD height change " + std::to_string(height_change) + " from " +
                      g.vertices[0].w.to_string() + " but signed KB count " +
                      std::to_string(potential[v]));
      }
    }
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        if ((potential[u] - potential[v]) % 2 != 0 && g.vertices[u].sd == g.vertices[v].sd) {
          part.fail(g.vertices[u].w.to_string(),
                    "odd KB path to " + g.vertices[v].w.to_string() + " but equal SD");
        }
      }
    }
  });
  auto r = assemble("knuth-paths", n, false, std::move(partials), start);
  r.summary.emplace_back("classes", std::to_string(tableaux.size()));
  return r;
}

VerificationReport verify_steppers(int n, const VerifyOptions& opts) {
  check_budget("steppers", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    BbsState s = state_from_permutation(w);
    const int steps = steady_state_time(w) + 2;
    for (int t = 0; t < steps; ++t) {
      BbsState direct = step_direct(s);
      const BbsState carrier = step_carrier(s);
      ++part.checked;
      if (!(direct == carrier)) {
        part.fail(w.to_string(), "t=" + std::to_string(t) + " from " + s.to_ascii() +
                                     ": direct " + direct.to_ascii() + " vs carrier " +
                                     carrier.to_ascii());
        return;
      }
      s = std::move(direct);
    }
  });
  return assemble("steppers", n, false, std::move(partials), start);
}

VerificationReport verify_fukuda(int n, const VerifyOptions& opts) {
  check_budget("fukuda", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const Tableau p = insertion_tableau(w);
    for (const auto& s : trajectory(w, 2)) {
      ++part.checked;
      const Tableau pt = insertion_tableau(s.ball_word());
      if (!(pt == p)) {
        part.fail(w.to_string(), "state " + s.to_ascii() + " has P=" + rows_string(pt) +
                                     " but P(w)=" + rows_string(p));
        return;
      }
    }
  });
  return assemble("fukuda", n, false, std::move(partials), start);
}

VerificationReport verify_dominance(int n, const VerifyOptions& opts) {
  check_budget("dominance", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const Partition sd = shape(soliton_decomposition(w));
    const Partition p = shape(insertion_tableau(w));
    ++part.checked;
    if (!dominance_leq(sd, p)) {
      part.fail(w.to_string(), "sh SD " + sd.to_string() + " not dominated by sh P " + p.to_string());
    }
  });
  return assemble("dominance", n, false, std::move(partials), start);
}

VerificationReport verify_separation(int n, const VerifyOptions& opts) {
  check_budget("separation", n, opts);
  const auto start = Clock::now();
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const BbsState s = steady_state(state_from_permutation(w));
    const auto runs = increasing_runs(s);
    for (std::size_t j = 0; j + 1 < runs.size(); ++j) {
      const auto& left = runs[j].balls;
      const auto& right = runs[j + 1].balls;
      const int gap = runs[j + 1].gap_before;
      const int len = static_cast<int>(left.size());
      ++part.checked;
      if (gap >= len) continue;
      for (int i = 0; i < len - gap && i < static_cast<int>(right.size()); ++i) {
        if (!(right[i] < left[i + gap])) {
          part.fail(w.to_string(), "steady state " + s.to_ascii() + ": soliton " +
                                       std::to_string(j + 1) + " fails separation at i=" +
                                       std::to_string(i + 1));
          break;
        }
      }
    }
  });
  return assemble("separation", n, false, std::move(partials), start);
}

VerificationReport verify_persistence(int n, const VerifyOptions& opts) {
  check_budget("persistence", n, opts);
  const auto start = Clock::now();
  constexpr int kExtraMoves = 4;
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    BbsState s = steady_state(state_from_permutation(w));
    auto runs = increasing_runs(s);
    for (int t = 0; t < kExtraMoves; ++t) {
      BbsState next = step_direct(s);
      auto next_runs = increasing_runs(next);
      ++part.checked;
      bool ok = is_steady(next) && next_runs.size() == runs.size();
      for (std::size_t j = 0; ok && j < runs.size(); ++j) {
        ok = next_runs[j].balls == runs[j].balls && next_runs[j].gap_before >= runs[j].gap_before;
      }
      if (!ok) {
        part.fail(w.to_string(), "steady state " + s.to_ascii() + " not preserved: next " +
                                     next.to_ascii());
        return;
      }
      s = std::move(next);
      runs = std::move(next_runs);
    }
  });
  return assemble("persistence", n, false, std::move(partials), start);
}

VerificationReport verify_greene(int n, const VerifyOptions& opts) {
  check_budget("greene", n, opts);
  const auto start = Clock::now();
  const int k_exhaustive = exhaustive_k_limit(n);
  auto partials = sweep_permutations(n, opts.jobs, [&](const Permutation& w, Partial& part) {
    const GreeneProfile profile = greene_profile(w);
    ++part.checked;
    auto check = [&](const char* what, const std::vector<int>& from_tableau,
                     const std::vector<int>& from_oracle) {
      if (from_tableau != from_oracle) {
        part.fail(w.to_string(), std::string(what) + ": tableau " + seq_string(from_tableau) +
                                     " vs oracle " + seq_string(from_oracle));
      }
    };
    check("incr", profile.incr, incr_oracle_all(w));
    check("decr", profile.decr, decr_oracle_all(w));
    check("localincr", profile.local_incr, local_incr_all(w));
    if (k_exhaustive > 0) {
      const auto exact = local_decr_exhaustive_all(w, k_exhaustive);
      check("localdecr", std::vector<int>(profile.local_decr.begin(),
                                          profile.local_decr.begin() + k_exhaustive),
            exact);
    }
    const int height = soliton_decomposition(w).num_rows();
    if (height != 1 + w.descents()) {
      part.fail(w.to_string(), "SD height " + std::to_string(height) + " but " +
                                   std::to_string(w.descents()) + " descents");
    }
  });
  auto r = assemble("greene", n, false, std::move(partials), start);
  r.summary.emplace_back("localdecr exhaustive for k <=", std::to_string(k_exhaustive));
  return r;
}

VerificationReport verify_reading_word_lemmas(int n, const VerifyOptions& opts) {
  check_budget("reading-word-lemmas", n, opts);
  const auto start = Clock::now();
  const auto tableaux = all_standard_tableaux(n);
  auto partials = run_chunks(tableaux.size(), opts.jobs, [&](std::size_t i, Partial& part) {
    const Permutation r = row_reading_word(tableaux[i]);
    ++part.checked;
    for (const auto& nb : knuth_neighbors(r)) {
      const auto& l = nb.label;
      const bool plus = l.direction == MoveDirection::kPlus;
      if (l.is_k1() && !plus && l.kind != MoveKind::kKB) {
        part.fail(r.to_string(), "proper K1- move at position " + std::to_string(l.position));
      }
      if (l.is_k1() && plus && l.kind == MoveKind::kKB) {
        part.fail(r.to_string(), "K1+ move at position " + std::to_string(l.position) + " is KB");
      }
      if (l.is_k2() && plus) {
        part.fail(r.to_string(), l.to_string() + " move at position " + std::to_string(l.position));
      }
    }
  });
  return assemble("reading-word-lemmas", n, false, std::move(partials), start);
}

}  // namespace boxball
