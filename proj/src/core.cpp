#include "boxball/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace boxball {

namespace {

bool is_permutation_of_1_to_n(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw DomainError("permutation must have n >= 1");
  if (!is_permutation_of_1_to_n(word_)) {
    throw DomainError("word is not a permutation of 1..n");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::descents() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) d += word_[i] > word_[i + 1];
  return d;
}

Permutation Permutation::swapped(int i) const {
  if (i < 0 || i + 1 >= size()) throw DomainError("swap position out of range");
  std::vector<int> w = word_;
  std::swap(w[i], w[i + 1]);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::partial_sums(int len) const {
  std::vector<int> sums(len);
  int acc = 0;
  for (int k = 0; k < len; ++k) {
    if (k < size()) acc += parts_[k];
    sums[k] = acc;
  }
  return sums;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.size() == 0) return Partition{};
  out.reserve(p[0]);
  for (int col = 0; col < p[0]; ++col) {
    int height = 0;
    while (height < p.size() && p[height] > col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw DomainError("dominance order compares partitions of equal weight only");
  }
  const int len = std::max(a.size(), b.size());
  const auto sa = a.partial_sums(len);
  const auto sb = b.partial_sums(len);
  for (int k = 0; k < len; ++k) {
    if (sa[k] > sb[k]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw DomainError("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) {
      throw DomainError("tableau row lengths must be weakly decreasing");
    }
    for (int v : rows_[i]) {
      if (v < 1) throw DomainError("tableau entries must be positive");
    }
  }
}

int Tableau::cell_count() const {
  int c = 0;
  for (const auto& r : rows_) c += static_cast<int>(r.size());
  return c;
}

Partition shape(const Tableau& t) {
  std::vector<int> parts;
  for (const auto& r : t.rows()) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

bool has_permutation_entries(const Tableau& t) {
  std::vector<int> all;
  for (const auto& r : t.rows()) all.insert(all.end(), r.begin(), r.end());
  return is_permutation_of_1_to_n(std::move(all));
}

bool is_row_strict(const Tableau& t) {
  for (const auto& r : t.rows()) {
    if (!std::is_sorted(r.begin(), r.end(), std::less_equal<>())) return false;
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!has_permutation_entries(t) || !is_row_strict(t)) return false;
  const auto& rows = t.rows();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

Tableau transpose(const Tableau& t) {
  const Partition conj = conjugate(shape(t));
  std::vector<std::vector<int>> out(conj.size());
  for (int c = 0; c < conj.size(); ++c) {
    for (int r = 0; r < conj[c]; ++r) out[c].push_back(t.at(r, c));
  }
  return Tableau(std::move(out));
}

Permutation row_reading_word(const Tableau& t) {
  if (!has_permutation_entries(t)) {
    throw DomainError("tableau entries are not a permutation of 1..n");
  }
  std::vector<int> word;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
    word.insert(word.end(), it->begin(), it->end());
  }
  return Permutation(std::move(word));
}

std::string to_grid(const Tableau& t) {
  std::ostringstream os;
  for (const auto& r : t.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) os << ' ';
      os << r[j];
    }
    os << '\n';
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw DomainError("empty permutation string");
  std::vector<int> word;
  if (text.find(',') == std::string::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '1' || c > '9') {
        throw DomainError("invalid character '" + std::string(1, c) + "' at position " +
                          std::to_string(i + 1));
      }
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string token = text.substr(start, end - start);
      const std::size_t pos = word.size() + 1;
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("invalid entry '" + token + "' at position " + std::to_string(pos));
      }
      word.push_back(std::stoi(token));
      start = end + 1;
    }
  }
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = word[i];
    if (v < 1 || v > n) {
      throw DomainError("entry " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                        " is out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw DomainError("duplicate entry " + std::to_string(v) + " at position " +
                        std::to_string(i + 1));
    }
    seen[v] = true;
  }
  return Permutation(std::move(word));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  for (int first = 1; first <= n; ++first) for_each_permutation_starting_with(n, first, fn);
}

void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& fn) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (first < 1 || first > n) throw DomainError("first letter out of range");
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<int> w(n);
  do {
    w[0] = first;
    std::copy(rest.begin(), rest.end(), w.begin() + 1);
    fn(Permutation(w));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace boxball
