#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "boxball/bbs.hpp"
#include "boxball/core.hpp"
#include "boxball/greene.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"
#include "boxball/serialize.hpp"
#include "boxball/verify.hpp"

namespace boxball::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

enum class OutputFormat { kAscii, kJson, kDot };

OutputFormat parse_format(const std::string& s, bool allow_dot) {
  if (s == "ascii") return OutputFormat::kAscii;
  if (s == "json") return OutputFormat::kJson;
  if (s == "dot" && allow_dot) return OutputFormat::kDot;
  throw DomainError("unsupported --format '" + s + "'" + (s == "dot" ? " (dot is only valid for knuth-graph)" : ""));
}

// Rows like "134" for n <= 9, "1 3 4" otherwise.
std::string compact_rows(const Tableau& t) {
  const bool spaced = t.cell_count() > 9;
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (spaced && j > 0) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string seq(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

struct Options {
  std::string perm;
  std::string format = "ascii";
  std::optional<int> steps;
  std::string stepper = "direct";
  bool trace_carrier = false;
  bool oracle = false;
  std::string dot_path;
  std::size_t max_vertices = kDefaultClassCap;
  int n = 0;
  bool list = false;
  bool count = false;
  std::string suite;
  int jobs = 1;
  bool json = false;
  bool strict = false;
  bool table = false;
  std::optional<int> max_n;
};

int run_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = parse_format(o.format, false);
  if (o.stepper != "direct" && o.stepper != "carrier" && o.stepper != "both") {
    throw DomainError("--stepper must be direct, carrier or both");
  }
  const Permutation w = parse_permutation(o.perm);
  const int steps = o.steps.value_or(steady_state_time(w));
  if (steps < 0) throw DomainError("--steps must be nonnegative");

  std::vector<BbsState> states{state_from_permutation(w)};
  for (int t = 0; t < steps; ++t) {
    const BbsState& s = states.back();
    if (o.trace_carrier) {
      out << "t=" << t << " -> t=" << t + 1 << "\n";
      for (const auto& line : carrier_trace(s)) out << "  " << line << "\n";
    }
    if (o.stepper == "direct") {
      states.push_back(step_direct(s));
    } else if (o.stepper == "carrier") {
      states.push_back(step_carrier(s));
    } else {
      BbsState direct = step_direct(s);
      const BbsState carrier = step_carrier(s);
      if (!(direct == carrier)) {
        err << "stepper divergence at t=" << t << ": direct " << direct.to_ascii() << " vs carrier "
            << carrier.to_ascii() << "\n";
        return kViolation;
      }
      states.push_back(std::move(direct));
    }
  }
  if (fmt == OutputFormat::kJson) {
    Json arr = Json::array();
    for (const auto& s : states) arr.push_back(to_json(s));
    out << arr.dump() << "\n";
  } else {
    for (const auto& s : states) out << s.to_ascii() << "\n";
  }
  return kOk;
}

int run_sd(const Options& o, std::ostream& out) {
  const OutputFormat fmt = parse_format(o.format, false);
  const Permutation w = parse_permutation(o.perm);
  const Tableau sd = soliton_decomposition(w);
  const bool standard = is_standard(sd);
  const int t = steady_state_time(w);
  if (fmt == OutputFormat::kJson) {
    out << Json{{"w", to_json(w)},
                {"sd", to_json(sd)},
                {"shape", to_json(shape(sd))},
                {"standard", standard},
                {"steady_time", t}}
               .dump()
        << "\n";
    return kOk;
  }
  out << compact_rows(sd);
  out << "shape: " << shape(sd).to_string() << "\n";
  out << "standard: " << (standard ? "true" : "false") << "\n";
  out << "steady-state time: " << t << "\n";
  return kOk;
}

int run_rs(const Options& o, std::ostream& out) {
  const OutputFormat fmt = parse_format(o.format, false);
  const Permutation w = parse_permutation(o.perm);
  const RsPair pq = rs_insert(w);
  if (fmt == OutputFormat::kAscii) {
    out << "P:\n" << to_grid(pq.p) << "Q:\n" << to_grid(pq.q);
  }
  out << to_json(pq).dump() << "\n";
  return kOk;
}

int run_greene(const Options& o, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = parse_format(o.format, false);
  const Permutation w = parse_permutation(o.perm);
  const GreeneProfile profile = greene_profile(w);
  std::optional<GreeneProfile> oracle;
  if (o.oracle) oracle = greene_profile_oracle(w);
  if (fmt == OutputFormat::kAscii) {
    out << "k          " << seq([&] {
      std::vector<int> ks(w.size());
      for (int k = 0; k < w.size(); ++k) ks[k] = k + 1;
      return ks;
    }()) << "\n";
    out << "incr       " << seq(profile.incr) << "\n";
    out << "decr       " << seq(profile.decr) << "\n";
    out << "localincr  " << seq(profile.local_incr) << "\n";
    out << "localdecr  " << seq(profile.local_decr) << "\n";
    if (oracle) out << "oracle: " << (*oracle == profile ? "agrees" : "DISAGREES") << "\n";
  }
  Json j = to_json(profile);
  if (oracle) {
    j["oracle"] = to_json(*oracle);
    j["oracle_agrees"] = *oracle == profile;
  }
  out << j.dump() << "\n";
  if (oracle && !(*oracle == profile)) {
    err << "oracle disagrees with tableau statistics\n";
    return kViolation;
  }
  return kOk;
}

int run_knuth_graph(const Options& o, std::ostream& out) {
  const OutputFormat fmt = parse_format(o.format, true);
  const Permutation w = parse_permutation(o.perm);
  const KnuthClassGraph g = knuth_class_graph(w, o.max_vertices);
  if (!o.dot_path.empty()) {
    std::ofstream f(o.dot_path);
    if (!f) throw DomainError("cannot write " + o.dot_path);
    f << to_dot(g);
  }
  switch (fmt) {
    case OutputFormat::kJson:
      out << to_json(g).dump() << "\n";
      break;
    case OutputFormat::kDot:
      out << to_dot(g);
      break;
    case OutputFormat::kAscii:
      out << "vertices: " << g.vertices.size() << "\n";
      for (const auto& v : g.vertices) {
        out << "  " << v.w.to_string() << "  t=" << v.steady_time
            << "  shape=" << v.sd_shape.to_string() << "  SD=";
        for (std::size_t r = 0; r < v.sd.rows().size(); ++r) {
          if (r) out << '/';
          for (std::size_t c = 0; c < v.sd.rows()[r].size(); ++c) {
            if (c && w.size() > 9) out << ',';
            out << v.sd.rows()[r][c];
          }
        }
        out << "\n";
      }
      out << "edges: " << g.edges.size() << "\n";
      for (const auto& e : g.edges) {
        out << "  " << g.vertices[e.a].w.to_string() << " -- " << g.vertices[e.b].w.to_string()
            << "  " << e.label.to_string() << "\n";
      }
      break;
  }
  return kOk;
}

int run_qhat(const Options& o, std::ostream& out) {
  const auto members = enumerate_qhat_class(o.n);
  if (o.count || !o.list) out << members.size() << "\n";
  if (o.list) {
    for (const auto& w : members) out << w.to_string() << "\n";
  }
  return kOk;
}

int run_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.jobs = o.jobs;
  vo.max_n = o.max_n;
  const VerificationReport r = run_suite(o.suite, o.n, vo);
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << r.to_text(o.table);
  }
  if (r.passed()) return kOk;
  if (r.conjecture && !o.strict) return kOk;
  return kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Box-ball systems, soliton decompositions and RS tableaux on permutations", "boxball"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Evolve the box-ball system seeded by a permutation");
  simulate->add_option("perm", o.perm, "Permutation, e.g. 452361 or 4,5,2,3,6,1")->required();
  simulate->add_option("--steps", o.steps, "Number of moves (default: until steady state)");
  simulate->add_option("--format", o.format, "ascii or json");
  simulate->add_option("--stepper", o.stepper, "direct, carrier or both");
  simulate->add_flag("--trace-carrier", o.trace_carrier, "Print every carrier step");

  auto* sd = app.add_subcommand("sd", "Soliton decomposition");
  sd->add_option("perm", o.perm)->required();
  sd->add_option("--format", o.format, "ascii or json");

  auto* rs = app.add_subcommand("rs", "Robinson-Schensted insertion and recording tableaux");
  rs->add_option("perm", o.perm)->required();
  rs->add_option("--format", o.format, "ascii or json");

  auto* greene = app.add_subcommand("greene", "Classical and localized Greene statistics");
  greene->add_option("perm", o.perm)->required();
  greene->add_option("--format", o.format, "ascii or json");
  greene->add_flag("--oracle", o.oracle, "Cross-check against the brute-force oracles");

  auto* knuth = app.add_subcommand("knuth-graph", "Knuth equivalence class graph");
  knuth->add_option("perm", o.perm)->required();
  knuth->add_option("--dot", o.dot_path, "Write Graphviz DOT to this file");
  knuth->add_option("--format", o.format, "ascii, json or dot");
  knuth->add_option("--max-vertices", o.max_vertices, "Class size cap");

  auto* qhat = app.add_subcommand("qhat", "Permutations whose recording tableau is Qhat");
  qhat->add_option("--n", o.n, "Size, n >= 5")->required();
  auto* list = qhat->add_flag("--list", o.list, "List the permutations");
  qhat->add_flag("--count", o.count, "Print the class size")->excludes(list);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification suites over S_n");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", o.n, "Size n")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads");
  verify->add_option("--max-n", o.max_n, "Override the suite's n budget");
  verify->add_flag("--json", o.json, "Emit the report as JSON");
  verify->add_flag("--strict", o.strict, "Exit nonzero on conjecture violations");
  verify->add_flag("--table", o.table, "Print the suite's table (text mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(o, out, err);
    if (sd->parsed()) return run_sd(o, out);
    if (rs->parsed()) return run_rs(o, out);
    if (greene->parsed()) return run_greene(o, out, err);
    if (knuth->parsed()) return run_knuth_graph(o, out);
    if (qhat->parsed()) return run_qhat(o, out);
    if (verify->parsed()) return run_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace boxball::cli
