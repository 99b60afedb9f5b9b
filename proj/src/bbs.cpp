#include "boxball/bbs.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace boxball {

BbsState::BbsState(long offset, std::vector<int> content)
    : offset_(offset), content_(std::move(content)), n_(0) {
  if (offset_ < 0) throw DomainError("state offset must be nonnegative");
  if (content_.empty()) throw DomainError("state must contain at least one ball");
  if (content_.front() == kEmpty || content_.back() == kEmpty) {
    throw DomainError("state content must begin and end with a ball");
  }
  std::vector<int> balls;
  for (int v : content_) {
    if (v < 0) throw DomainError("negative ball label");
    if (v != kEmpty) balls.push_back(v);
  }
  n_ = static_cast<int>(balls.size());
  std::sort(balls.begin(), balls.end());
  for (int i = 0; i < n_; ++i) {
    if (balls[i] != i + 1) throw DomainError("ball labels must be exactly 1..n");
  }
}

Permutation BbsState::ball_word() const {
  std::vector<int> w;
  w.reserve(n_);
  for (int v : content_) {
    if (v != kEmpty) w.push_back(v);
  }
  return Permutation(std::move(w));
}

std::string BbsState::to_ascii() const {
  if (n_ <= 9) {
    std::string s(static_cast<std::size_t>(offset_), '.');
    for (int v : content_) s += v == kEmpty ? '.' : static_cast<char>('0' + v);
    return s;
  }
  std::string s;
  auto append = [&s](const std::string& tok) {
    if (!s.empty()) s += ',';
    s += tok;
  };
  for (long i = 0; i < offset_; ++i) append(".");
  for (int v : content_) append(v == kEmpty ? "." : std::to_string(v));
  return s;
}

BbsState make_trimmed_state(long origin, const std::vector<int>& boxes) {
  const auto first = std::find_if(boxes.begin(), boxes.end(),
                                  [](int v) { return v != BbsState::kEmpty; });
  if (first == boxes.end()) throw DomainError("configuration has no balls");
  const auto last = std::find_if(boxes.rbegin(), boxes.rend(),
                                 [](int v) { return v != BbsState::kEmpty; }).base();
  return BbsState(origin + (first - boxes.begin()), std::vector<int>(first, last));
}

BbsState parse_state(const std::string& text) {
  std::vector<int> boxes;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ') continue;
    if (c == 'e' || c == '.') {
      boxes.push_back(BbsState::kEmpty);
    } else if (c >= '1' && c <= '9') {
      boxes.push_back(c - '0');
    } else {
      throw DomainError("invalid character '" + std::string(1, c) + "' at position " +
                        std::to_string(i + 1));
    }
  }
  return make_trimmed_state(0, boxes);
}

BbsState state_from_permutation(const Permutation& w) { return BbsState(0, w.values()); }

BbsState step_direct(const BbsState& s) {
  const int n = s.ball_count();
  const auto& content = s.content();
  // Every ball moves at most n boxes past the current right end.
  std::vector<int> boxes(content.size() + static_cast<std::size_t>(n) + 1, BbsState::kEmpty);
  std::vector<std::size_t> where(n + 1);
  for (std::size_t i = 0; i < content.size(); ++i) {
    boxes[i] = content[i];
    if (content[i] != BbsState::kEmpty) where[content[i]] = i;
  }
  for (int ball = 1; ball <= n; ++ball) {
    std::size_t from = where[ball];
    std::size_t to = from + 1;
    while (boxes[to] != BbsState::kEmpty) ++to;
    boxes[from] = BbsState::kEmpty;
    boxes[to] = ball;
    where[ball] = to;
  }
  return make_trimmed_state(s.offset(), boxes);
}

namespace {

// Carrier slots are kept sorted; e is represented as n + 1.
class Carrier {
 public:
  explicit Carrier(int n) : e_(n + 1), slots_(n, n + 1) {}

  int e() const { return e_; }
  const std::vector<int>& slots() const { return slots_; }

  bool all_empty() const {
    return std::all_of(slots_.begin(), slots_.end(), [this](int v) { return v == e_; });
  }

  // Inserts p and returns the ejected element.
  int insert(int p) {
    // upper_bound lands on the leftmost copy when several e's tie.
    auto it = std::upper_bound(slots_.begin(), slots_.end(), p);
    if (it != slots_.end()) {
      const int ejected = *it;
      *it = p;
      return ejected;
    }
    const int ejected = slots_.front();
    std::rotate(slots_.begin(), slots_.begin() + 1, slots_.end());
    slots_.back() = p;
    return ejected;
  }

 private:
  int e_;
  std::vector<int> slots_;
};

char glyph(int v, int e) { return v == e ? 'e' : static_cast<char>('0' + v); }

std::string render(const std::vector<int>& values, int e) {
  std::string out;
  const bool wide = e > 10;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += wide ? (values[i] == e ? std::string("e") : std::to_string(values[i]))
                : std::string(1, glyph(values[i], e));
  }
  return out;
}

std::vector<int> as_carrier_input(const std::vector<int>& content, int e) {
  std::vector<int> b(content);
  for (int& v : b) {
    if (v == BbsState::kEmpty) v = e;
  }
  return b;
}

}  // namespace

std::vector<int> carrier_eject(const std::vector<int>& input, int n) {
  Carrier carrier(n);
  const int e = carrier.e();
  std::vector<int> out;
  out.reserve(input.size() + static_cast<std::size_t>(n));
  for (int v : as_carrier_input(input, e)) out.push_back(carrier.insert(v));
  while (!carrier.all_empty()) out.push_back(carrier.insert(e));
  for (int& v : out) {
    if (v == e) v = BbsState::kEmpty;
  }
  return out;
}

BbsState step_carrier(const BbsState& s) {
  return make_trimmed_state(s.offset(), carrier_eject(s.content(), s.ball_count()));
}

std::vector<std::string> carrier_trace(const BbsState& s) {
  Carrier carrier(s.ball_count());
  const int e = carrier.e();
  const std::vector<int> input = as_carrier_input(s.content(), e);
  std::vector<int> ejected;
  std::vector<std::string> lines;
  auto snapshot = [&](std::size_t consumed, bool flushing) {
    std::string line = render(ejected, e) + "[" + render(carrier.slots(), e) + "]";
    if (flushing) {
      line += "<-e";
    } else {
      line += render(std::vector<int>(input.begin() + static_cast<long>(consumed), input.end()), e);
    }
    lines.push_back(std::move(line));
  };
  lines.emplace_back("begin insertion");
  snapshot(0, false);
  for (std::size_t i = 0; i < input.size(); ++i) {
    ejected.push_back(carrier.insert(input[i]));
    snapshot(i + 1, false);
  }
  lines.emplace_back("end insertion");
  lines.emplace_back("begin flushing");
  while (!carrier.all_empty()) {
    snapshot(input.size(), true);
    ejected.push_back(carrier.insert(e));
  }
  snapshot(input.size(), false);
  lines.emplace_back("end flushing");
  return lines;
}

std::vector<Run> increasing_runs(const BbsState& s) {
  std::vector<Run> runs;
  int gap = 0;
  int prev = BbsState::kEmpty;
  for (int v : s.content()) {
    if (v == BbsState::kEmpty) {
      ++gap;
      prev = BbsState::kEmpty;
      continue;
    }
    if (prev == BbsState::kEmpty || v < prev) {
      runs.push_back(Run{gap, {}});
      gap = 0;
    }
    runs.back().balls.push_back(v);
    prev = v;
  }
  return runs;
}

SkewArray::SkewArray(std::vector<SkewRow> rows) : rows_(std::move(rows)) {
  int min_offset = rows_.empty() ? 0 : rows_.front().offset;
  for (const auto& r : rows_) {
    if (r.entries.empty()) throw DomainError("skew array rows must be nonempty");
    if (!std::is_sorted(r.entries.begin(), r.entries.end(), std::less_equal<>())) {
      throw DomainError("skew array rows must be strictly increasing");
    }
    min_offset = std::min(min_offset, r.offset);
  }
  if (min_offset != 0) throw DomainError("skew array offsets must have minimum 0");
}

bool SkewArray::is_standard_with_decreasing_rows() const {
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].entries.size() > rows_[i - 1].entries.size()) return false;
  }
  // Last entry seen in each absolute column, scanning rows top to bottom.
  std::map<int, int> column_last;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.entries.size(); ++j) {
      const int col = r.offset + static_cast<int>(j);
      auto [it, inserted] = column_last.try_emplace(col, r.entries[j]);
      if (!inserted) {
        if (r.entries[j] <= it->second) return false;
        it->second = r.entries[j];
      }
    }
  }
  return true;
}

std::string SkewArray::to_ascii() const {
  std::string out;
  for (const auto& r : rows_) {
    std::string line(static_cast<std::size_t>(r.offset), '.');
    for (int v : r.entries) line += v <= 9 ? std::string(1, static_cast<char>('0' + v)) : "(" + std::to_string(v) + ")";
    out += line + '\n';
  }
  return out;
}

SkewArray configuration_array(const BbsState& s) {
  const auto runs = increasing_runs(s);
  std::vector<SkewRow> rows;
  rows.reserve(runs.size());
  int offset = 0;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    rows.push_back(SkewRow{offset, it->balls});
    offset -= it->gap_before;
  }
  int min_offset = 0;
  for (const auto& r : rows) min_offset = std::min(min_offset, r.offset);
  for (auto& r : rows) r.offset -= min_offset;
  return SkewArray(std::move(rows));
}

bool is_steady(const BbsState& s) { return configuration_array(s).is_standard_with_decreasing_rows(); }

int steady_state_cap(int n) { return 3 * n; }

namespace {

// Advances to the first steady state; returns the number of moves taken.
int advance_to_steady(BbsState& s) {
  const int cap = steady_state_cap(s.ball_count());
  int t = 0;
  while (!is_steady(s)) {
    if (t >= cap) throw InternalError("steady state not reached within 3n moves");
    BbsState next = step_direct(s);
#ifndef NDEBUG
    if (!(next == step_carrier(s))) throw InternalError("direct and carrier steppers diverged");
#endif
    s = std::move(next);
    ++t;
  }
  return t;
}

}  // namespace

BbsState steady_state(const BbsState& start) {
  BbsState s = start;
  advance_to_steady(s);
  return s;
}

int steady_state_time(const Permutation& w) {
  BbsState s = state_from_permutation(w);
  return advance_to_steady(s);
}

std::vector<BbsState> evolve(const BbsState& start, int steps) {
  std::vector<BbsState> out{start};
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int t = 0; t < steps; ++t) out.push_back(step_direct(out.back()));
  return out;
}

Tableau soliton_decomposition(const BbsState& s) {
  const SkewArray array = configuration_array(steady_state(s));
  std::vector<std::vector<int>> rows;
  for (const auto& r : array.rows()) rows.push_back(r.entries);
  return Tableau(std::move(rows));
}

Tableau soliton_decomposition(const Permutation& w) {
  return soliton_decomposition(state_from_permutation(w));
}

}  // namespace boxball
