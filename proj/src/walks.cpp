#include "baxter/walks.hpp"

#include <algorithm>

#include "baxter/errors.hpp"

namespace baxter {

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int BinaryWalk::east_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), 'E'));
}

LatticePoint BinaryWalk::end() const {
  int e = east_count();
  return {start.x + e, start.y + length() - e};
}

std::vector<LatticePoint> BinaryWalk::points() const {
  std::vector<LatticePoint> out;
  out.reserve(steps.size() + 1);
  LatticePoint cur = start;
  out.push_back(cur);
  for (char c : steps) {
    (c == 'E' ? cur.x : cur.y) += 1;
    out.push_back(cur);
  }
  return out;
}

void validate_steps(const std::string& steps) {
  for (char c : steps)
    if (c != 'E' && c != 'N') throw format_error("step word may only contain E and N");
}

namespace {

std::vector<LatticePoint> sorted_points(const BinaryWalk& w) {
  std::vector<LatticePoint> pts = w.points();
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool sorted_disjoint(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

}  // namespace

bool vertex_disjoint(const BinaryWalk& a, const BinaryWalk& b) {
  return sorted_disjoint(sorted_points(a), sorted_points(b));
}

BigInt walk_count(LatticePoint from, LatticePoint to) {
  long long dx = to.x - from.x, dy = to.y - from.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

namespace {

void words_rec(int dx, int dy, std::string& cur, std::vector<std::string>& out) {
  if (dx == 0 && dy == 0) {
    out.push_back(cur);
    return;
  }
  if (dx > 0) {
    cur.push_back('E');
    words_rec(dx - 1, dy, cur, out);
    cur.pop_back();
  }
  if (dy > 0) {
    cur.push_back('N');
    words_rec(dx, dy - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::string> all_walk_words(LatticePoint from, LatticePoint to) {
  std::vector<std::string> out;
  int dx = to.x - from.x, dy = to.y - from.y;
  if (dx < 0 || dy < 0) return out;
  std::string cur;
  words_rec(dx, dy, cur, out);
  return out;
}

namespace {

void compositions_rec(int rem, int idx, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  int parts = static_cast<int>(cur.size());
  if (idx == parts - 1) {
    cur[idx] = rem;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= rem; ++v) {
    cur[idx] = v;
    compositions_rec(rem - v, idx + 1, cur, out);
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, int parts) {
  if (total < 0 || parts < 0) throw contract_error("compositions: negative argument");
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 0);
  compositions_rec(total, 0, cur, out);
  return out;
}

BigInt lgv_count_3(const std::array<LatticePoint, 3>& starts,
                   const std::array<LatticePoint, 3>& ends) {
  BigInt m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = walk_count(starts[i], ends[j]);
  BigInt det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det < 0)
    throw contract_error("lgv_count_3: negative determinant, configuration is permutable");
  return det;
}

std::vector<std::array<BinaryWalk, 3>> enumerate_disjoint_triples(
    const std::array<LatticePoint, 3>& starts, const std::array<LatticePoint, 3>& ends,
    int max_total_steps) {
  std::vector<std::array<BinaryWalk, 3>> out;
  long long total = 0;
  for (int i = 0; i < 3; ++i) {
    long long dx = ends[i].x - starts[i].x, dy = ends[i].y - starts[i].y;
    if (dx < 0 || dy < 0) return out;  // one walk has no instances at all
    total += dx + dy;
  }
  if (total > max_total_steps)
    throw capacity_error("enumerate_disjoint_triples: combined walk length " +
                         std::to_string(total) + " exceeds bound " +
                         std::to_string(max_total_steps));

  std::array<std::vector<std::string>, 3> words;
  std::array<std::vector<std::vector<LatticePoint>>, 3> pts;
  for (int i = 0; i < 3; ++i) {
    words[i] = all_walk_words(starts[i], ends[i]);
    pts[i].reserve(words[i].size());
    for (const std::string& w : words[i]) pts[i].push_back(sorted_points({starts[i], w}));
  }

  for (size_t a = 0; a < words[0].size(); ++a)
    for (size_t b = 0; b < words[1].size(); ++b) {
      if (!sorted_disjoint(pts[0][a], pts[1][b])) continue;
      for (size_t c = 0; c < words[2].size(); ++c) {
        if (!sorted_disjoint(pts[0][a], pts[2][c])) continue;
        if (!sorted_disjoint(pts[1][b], pts[2][c])) continue;
        out.push_back({BinaryWalk{starts[0], words[0][a]}, BinaryWalk{starts[1], words[1][b]},
                       BinaryWalk{starts[2], words[2][c]}});
      }
    }
  return out;
}

std::array<LatticePoint, 3> theorem1_starts() { return {{{-1, 1}, {0, 0}, {0, -1}}}; }

std::array<LatticePoint, 3> theorem1_ends(const ParameterProfile& q) {
  return {{{q.k - 1, q.n + q.p - q.k},
           {q.k, q.n + q.p - q.k - 1},
           {q.k + q.r, q.n - q.k - q.r - 1}}};
}

BigInt theorem1_tuple_count(const ParameterProfile& q) {
  if (!profile_feasible(q)) return 0;
  return binomial(q.p + q.r, q.r) * lgv_count_3(theorem1_starts(), theorem1_ends(q));
}

std::vector<Theorem1Tuple> enumerate_theorem1_tuples(const ParameterProfile& q,
                                                     int max_total_steps) {
  std::vector<Theorem1Tuple> out;
  if (!profile_feasible(q)) return out;
  auto triples = enumerate_disjoint_triples(theorem1_starts(), theorem1_ends(q), max_total_steps);
  auto weights = compositions(q.p, q.r + 1);
  for (const auto& t : triples) {
    // w3 has length n >= 1 and cannot open north without hitting w2's start
    if (q.p == 0 && t[2].steps.front() != 'E')
      throw contract_error("enumerate_theorem1_tuples: p = 0 tuple with north-opening w3");
    for (const auto& s : weights) out.push_back({t[0], t[1], t[2], s});
  }
  return out;
}

std::string class_e_violation(const BinaryWalk& w1, const BinaryWalk& w2, const BinaryWalk& w3,
                              const std::vector<int>& s) {
  const auto starts = theorem1_starts();
  for (char c : w1.steps + w2.steps + w3.steps)
    if (c != 'E' && c != 'N') return "step words may only contain E and N";
  if (w1.start != starts[0] || w2.start != starts[1] || w3.start != starts[2])
    return "start points must be (-1,1), (0,0), (0,-1)";
  if (w1.length() != w2.length() || w1.east_count() != w2.east_count())
    return "w1 and w2 must share length and east count";
  if (!vertex_disjoint(w1, w2) || !vertex_disjoint(w1, w3) || !vertex_disjoint(w2, w3))
    return "walks must be pairwise vertex-disjoint";
  LatticePoint e2 = w2.end(), e3 = w3.end();
  if (e3.x < e2.x) return "w3 must end weakly east of w2";
  if (e2.x + e2.y < e3.x + e3.y) return "w3 must end weakly below w2's anti-diagonal";
  int a = e3.x - e2.x, b = e2.x + e2.y - e3.x - e3.y;
  if (static_cast<int>(s.size()) != a + 1) return "weight sequence must have a+1 entries";
  long long sum = 0;
  for (int v : s) {
    if (v < 0) return "weights must be non-negative";
    sum += v;
  }
  if (sum != b) return "weights must sum to b";
  return "";
}

bool is_class_e(const BinaryWalk& w1, const BinaryWalk& w2, const BinaryWalk& w3,
                const std::vector<int>& s) {
  return class_e_violation(w1, w2, w3, s).empty();
}

ClassETuple make_class_e(BinaryWalk w1, BinaryWalk w2, BinaryWalk w3, std::vector<int> s) {
  std::string why = class_e_violation(w1, w2, w3, s);
  if (!why.empty()) throw contract_error("make_class_e: " + why);
  return {std::move(w1), std::move(w2), std::move(w3), std::move(s)};
}

}  // namespace baxter
