#include "baxter/sink_code.hpp"

#include <algorithm>
#include <cassert>

#include "baxter/errors.hpp"

namespace baxter {

std::vector<int> markable_edges(const std::vector<bool>& corner_marks) {
  int i = static_cast<int>(corner_marks.size());
  std::vector<int> out;
  for (int j = 0; j <= i; ++j) {
    bool left_ok = j == 0 || corner_marks[j - 1];
    bool right_ok = j == i || corner_marks[j];
    if (left_ok && right_ok) out.push_back(j);
  }
  return out;
}

void validate_decoration(const SinkDecoration& d) {
  int i = d.corner_count;
  if (i < 0) throw contract_error("decoration: negative corner count");
  if (static_cast<int>(d.corner_marks.size()) != i)
    throw contract_error("decoration: corner mark vector must have i entries");
  if (static_cast<int>(d.edge_marks.size()) != i + 1)
    throw contract_error("decoration: edge mark vector must have i+1 entries");
  for (int j = 0; j <= i; ++j) {
    if (!d.edge_marks[j]) continue;
    bool left_ok = j == 0 || d.corner_marks[j - 1];
    bool right_ok = j == i || d.corner_marks[j];
    if (!left_ok || !right_ok)
      throw contract_error("decoration: edge " + std::to_string(j) +
                           " marked next to an unmarked corner");
  }
}

int marked_edge_count(const SinkDecoration& d) {
  return static_cast<int>(std::count(d.edge_marks.begin(), d.edge_marks.end(), true));
}

int marked_corner_count(const SinkDecoration& d) {
  return static_cast<int>(std::count(d.corner_marks.begin(), d.corner_marks.end(), true));
}

SinkCodePair encode(const SinkDecoration& d) {
  validate_decoration(d);
  int i = d.corner_count;

  // corner walk with an east step prepended and appended
  std::string padded;
  padded.reserve(i + 2);
  padded.push_back('E');
  for (int j = 0; j < i; ++j) padded.push_back(d.corner_marks[j] ? 'E' : 'N');
  padded.push_back('E');

  // Point t of the padded walk (1 <= t <= i+1) belongs to edge t-1; deleting
  // it merges step t into the east run before it.  Each surviving east step
  // carries the number of points merged into it.
  std::string word;
  std::vector<int> weights;
  for (int t = 0; t < static_cast<int>(padded.size()); ++t) {
    if (t >= 1 && d.edge_marks[t - 1]) {
      assert(padded[t] == 'E' && !word.empty() && word.back() == 'E');
      weights.back() += 1;
      continue;
    }
    word.push_back(padded[t]);
    if (padded[t] == 'E') weights.push_back(0);
  }

  // the walk always ends east here; that step is dropped, its weight kept
  assert(!word.empty() && word.back() == 'E');
  word.pop_back();
  return {word, weights};
}

namespace {

// Empty string when (c, i) decodes to a decoration, otherwise the defect.
std::string code_pair_violation(const SinkCodePair& c, int corner_count) {
  if (corner_count < 0) return "negative corner count";
  for (char ch : c.w)
    if (ch != 'E' && ch != 'N') return "walk word may only contain E and N";
  long long p = 0;
  for (int v : c.s) {
    if (v < 0) return "weights must be non-negative";
    p += v;
  }
  long long easts = std::count(c.w.begin(), c.w.end(), 'E');
  if (static_cast<long long>(c.s.size()) != easts + 1)
    return "weight sequence must have one entry per east step plus one";
  if (static_cast<long long>(c.w.size()) != corner_count + 1 - p)
    return "walk length must be corner_count + 1 - sum(s)";
  if (!c.w.empty() && c.w.front() != 'E') return "non-empty walk must begin east";
  return "";
}

}  // namespace

bool is_valid_code_pair(const SinkCodePair& c, int corner_count) {
  return code_pair_violation(c, corner_count).empty();
}

SinkDecoration decode(const SinkCodePair& c, int corner_count) {
  std::string why = code_pair_violation(c, corner_count);
  if (!why.empty()) throw format_error("decode: " + why);
  int i = corner_count;

  // Re-expand: an east step of weight t becomes t+1 east steps whose t
  // junction points are the deleted edge points.
  std::string padded;
  std::vector<bool> edge_marks(i + 1, false);
  size_t wi = 0;
  auto expand_east = [&](int weight) {
    padded.push_back('E');
    for (int z = 0; z < weight; ++z) {
      edge_marks[static_cast<int>(padded.size()) - 1] = true;  // point index - 1
      padded.push_back('E');
    }
  };
  for (char ch : c.w) {
    if (ch == 'E')
      expand_east(c.s[wi++]);
    else
      padded.push_back('N');
  }
  expand_east(c.s[wi++]);  // the east step encode dropped

  assert(static_cast<int>(padded.size()) == i + 2);
  SinkDecoration d;
  d.corner_count = i;
  d.corner_marks.resize(i);
  for (int j = 0; j < i; ++j) d.corner_marks[j] = padded[j + 1] == 'E';
  d.edge_marks = std::move(edge_marks);
  validate_decoration(d);  // holds by construction
  return d;
}

std::vector<SinkDecoration> enumerate_decorations(int corner_count) {
  if (corner_count < 0) throw contract_error("enumerate_decorations: negative corner count");
  std::vector<SinkDecoration> out;
  int i = corner_count;
  for (unsigned long mask = 0; mask < (1ul << i); ++mask) {
    SinkDecoration d;
    d.corner_count = i;
    d.corner_marks.resize(i);
    for (int j = 0; j < i; ++j) d.corner_marks[j] = (mask >> j) & 1;
    std::vector<int> allowed = markable_edges(d.corner_marks);
    for (unsigned long sub = 0; sub < (1ul << allowed.size()); ++sub) {
      d.edge_marks.assign(i + 1, false);
      for (size_t b = 0; b < allowed.size(); ++b)
        if ((sub >> b) & 1) d.edge_marks[allowed[b]] = true;
      out.push_back(d);
    }
  }
  return out;
}

namespace {

void pair_words_rec(int remaining, std::string& cur, std::vector<std::string>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (char ch : {'E', 'N'}) {
    cur.push_back(ch);
    pair_words_rec(remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SinkCodePair> enumerate_code_pairs(int corner_count) {
  if (corner_count < 0) throw contract_error("enumerate_code_pairs: negative corner count");
  std::vector<SinkCodePair> out;
  int i = corner_count;
  for (int p = 0; p <= i + 1; ++p) {
    int len = i + 1 - p;
    std::vector<std::string> words;
    if (len == 0) {
      words.push_back("");
    } else {
      std::string cur = "E";  // non-empty words begin east
      pair_words_rec(len - 1, cur, words);
    }
    for (const std::string& w : words) {
      int easts = static_cast<int>(std::count(w.begin(), w.end(), 'E'));
      for (const auto& s : compositions(p, easts + 1)) out.push_back({w, s});
    }
  }
  return out;
}

BinaryWalk splice(const BinaryWalk& w3, int corner_count, const std::string& w) {
  validate_steps(w3.steps);
  validate_steps(w);
  int i = corner_count;
  if (i < 0) throw contract_error("splice: negative corner count");
  int len = w3.length();
  if (len < i + 1 || w3.steps[len - 1 - i] != 'E')
    throw contract_error("splice: walk does not end with east followed by exactly " +
                         std::to_string(i) + " norths");
  for (int t = len - i; t < len; ++t)
    if (w3.steps[t] != 'N')
      throw contract_error("splice: walk does not end with east followed by exactly " +
                           std::to_string(i) + " norths");
  return {w3.start, w3.steps.substr(0, len - 1 - i) + w};
}

BinaryWalk unsplice(const BinaryWalk& w3_prime, LatticePoint w2_end) {
  validate_steps(w3_prime.steps);
  int x2 = w2_end.x, y2 = w2_end.y;

  // maximal prefix inside {x <= x2}; x never decreases, so stop at the
  // first east step that would cross the column
  LatticePoint cur = w3_prime.start;
  if (cur.x > x2) throw contract_error("unsplice: walk starts beyond column x2");
  size_t keep = 0;
  for (size_t t = 0; t < w3_prime.steps.size(); ++t) {
    LatticePoint nxt = cur;
    (w3_prime.steps[t] == 'E' ? nxt.x : nxt.y) += 1;
    if (nxt.x > x2) break;
    cur = nxt;
    keep = t + 1;
  }

  if (cur.x != x2)
    throw contract_error("unsplice: no consistent completion, prefix stops short of column x2");
  int norths = (y2 - 1) - cur.y;
  if (norths < 0)
    throw contract_error("unsplice: no consistent completion, prefix overshoots height y2-1");
  return {w3_prime.start, w3_prime.steps.substr(0, keep) + "E" + std::string(norths, 'N')};
}

}  // namespace baxter
