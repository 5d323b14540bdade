#include "baxter/path_swap.hpp"

#include <algorithm>
#include <cstdlib>

#include "baxter/errors.hpp"

namespace baxter {

int DiagonalPath::x_at(int t) const {
  int x = start_x;
  for (int u = 0; u < t; ++u) x += steps[u] == 'R' ? 1 : -1;
  return x;
}

DiagonalPath reflect(const DiagonalPath& p) {
  DiagonalPath out;
  out.start_x = -p.start_x;
  out.steps.reserve(p.steps.size());
  for (char c : p.steps) out.steps.push_back(c == 'R' ? 'L' : 'R');
  return out;
}

DiagonalTriple mirror(const DiagonalTriple& t) {
  return {reflect(t.right), reflect(t.mid), reflect(t.left)};
}

namespace {

void check_triple(const DiagonalTriple& t) {
  if (t.left.start_x != -2 || t.mid.start_x != 0 || t.right.start_x != 2)
    throw contract_error("diagonal triple: starts must be -2, 0, +2");
  if (t.left.length() != t.mid.length() || t.mid.length() != t.right.length())
    throw contract_error("diagonal triple: paths must have equal lengths");
  for (char c : t.left.steps + t.mid.steps + t.right.steps)
    if (c != 'L' && c != 'R') throw contract_error("diagonal triple: steps must be L or R");
}

std::vector<int> positions(const DiagonalPath& p) {
  std::vector<int> xs(p.length() + 1);
  xs[0] = p.start_x;
  for (int t = 0; t < p.length(); ++t) xs[t + 1] = xs[t] + (p.steps[t] == 'R' ? 1 : -1);
  return xs;
}

bool disjoint_xs(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t t = 0; t < a.size(); ++t)
    if (a[t] == b[t]) return false;
  return true;
}

struct BaseFlags {
  bool in_u = false, in_r = false, in_s = false, in_v = false;
};

BaseFlags base_flags(const std::vector<int>& l, const std::vector<int>& m,
                     const std::vector<int>& r) {
  BaseFlags f;
  f.in_u = disjoint_xs(l, m) && std::abs(l.back() - m.back()) == 2;
  if (f.in_u) {
    bool third_clear = disjoint_xs(r, l) && disjoint_xs(r, m);
    f.in_r = third_clear;
    f.in_s = !disjoint_xs(r, m);
  }
  f.in_v = disjoint_xs(l, r) && std::abs(l.back() - r.back()) == 2;
  return f;
}

std::vector<int> negated(const std::vector<int>& xs) {
  std::vector<int> out(xs.size());
  for (size_t t = 0; t < xs.size(); ++t) out[t] = -xs[t];
  return out;
}

ClassFlags flags_from_positions(const std::vector<int>& l, const std::vector<int>& m,
                                const std::vector<int>& r) {
  BaseFlags f = base_flags(l, m, r);
  // the mirror triple is (-r, -m, -l)
  BaseFlags mf = base_flags(negated(r), negated(m), negated(l));
  return {f.in_r, f.in_u, f.in_s, mf.in_s, f.in_v};
}

}  // namespace

ClassFlags classify(const DiagonalTriple& t) {
  check_triple(t);
  return flags_from_positions(positions(t.left), positions(t.mid), positions(t.right));
}

std::optional<Meeting> first_meeting(const DiagonalTriple& t) {
  check_triple(t);
  std::vector<int> l = positions(t.left), m = positions(t.mid), r = positions(t.right);
  for (int time = 1; time <= t.mid.length(); ++time) {
    if (m[time] == l[time]) return Meeting{time, Side::left};
    if (m[time] == r[time]) return Meeting{time, Side::right};
  }
  return std::nullopt;
}

DiagonalTriple rotate_from_binary(const Theorem1Tuple& t) {
  const auto starts = theorem1_starts();
  if (t.w1.start != starts[0] || t.w2.start != starts[1] || t.w3.start != starts[2])
    throw contract_error("rotate_from_binary: tuple has wrong start points");
  for (int v : t.s)
    if (v != 0) throw contract_error("rotate_from_binary: tuple must have p = 0");
  if (t.w1.length() != t.w2.length() || t.w3.length() != t.w1.length() + 1)
    throw contract_error("rotate_from_binary: walk lengths must be n-1, n-1, n");
  if (t.w3.steps.empty() || t.w3.steps.front() != 'E')
    throw contract_error("rotate_from_binary: w3 must open east");
  if (!vertex_disjoint(t.w1, t.w2) || !vertex_disjoint(t.w1, t.w3) ||
      !vertex_disjoint(t.w2, t.w3))
    throw contract_error("rotate_from_binary: walks must be pairwise vertex-disjoint");

  auto diagonal = [](const std::string& steps) {
    std::string out;
    out.reserve(steps.size());
    for (char c : steps) out.push_back(c == 'E' ? 'R' : 'L');
    return out;
  };
  return {{-2, diagonal(t.w1.steps)},
          {0, diagonal(t.w2.steps)},
          {2, diagonal(t.w3.steps.substr(1))}};
}

namespace {

// The paths coincide at `time`, so exchanging the head segments amounts to
// swapping the step tails while each path keeps its own start.
std::pair<std::string, std::string> swap_tails(const std::string& a, const std::string& b,
                                               int time) {
  return {a.substr(0, time) + b.substr(time), b.substr(0, time) + a.substr(time)};
}

int first_meeting_with(const std::vector<int>& m, const std::vector<int>& other) {
  for (size_t time = 1; time < m.size(); ++time)
    if (m[time] == other[time]) return static_cast<int>(time);
  throw contract_error("head swap: expected intersection is missing");
}

}  // namespace

DiagonalTriple swap_v_to_shat(const DiagonalTriple& t) {
  if (!classify(t).in_v) throw contract_error("swap_v_to_shat: input must lie in class V");
  auto mtg = first_meeting(t);
  if (!mtg)
    throw contract_error("swap_v_to_shat: middle path never meets the outer paths, "
                         "class-V claim falsified");
  DiagonalTriple out = t;
  if (mtg->side == Side::right) {
    auto [nm, nr] = swap_tails(t.mid.steps, t.right.steps, mtg->time);
    out.mid.steps = std::move(nm);
    out.right.steps = std::move(nr);
  } else {
    auto [nm, nl] = swap_tails(t.mid.steps, t.left.steps, mtg->time);
    out.mid.steps = std::move(nm);
    out.left.steps = std::move(nl);
  }
  return out;
}

DiagonalTriple swap_shat_to_v(const DiagonalTriple& t) {
  ClassFlags f = classify(t);
  if (f.in_s == f.in_mir_s)
    throw contract_error("swap_shat_to_v: input must lie in exactly one of S and mir(S)");
  DiagonalTriple out = t;
  std::vector<int> m = positions(t.mid);
  if (f.in_s) {
    int time = first_meeting_with(m, positions(t.right));
    auto [nm, nr] = swap_tails(t.mid.steps, t.right.steps, time);
    out.mid.steps = std::move(nm);
    out.right.steps = std::move(nr);
  } else {
    int time = first_meeting_with(m, positions(t.left));
    auto [nm, nl] = swap_tails(t.mid.steps, t.left.steps, time);
    out.mid.steps = std::move(nm);
    out.left.steps = std::move(nl);
  }
  return out;
}

std::vector<DiagonalTriple> enumerate_class(int n, PathClass cls, int max_n) {
  if (n < 1) throw contract_error("enumerate_class: n must be >= 1");
  if (n > max_n)
    throw capacity_error("enumerate_class: n = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(max_n));
  int len = n - 1;

  std::vector<std::string> words;
  std::string cur;
  // lexicographic L < R word generation
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      words.push_back(cur);
      return;
    }
    for (char ch : {'L', 'R'}) {
      cur.push_back(ch);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, len);

  std::vector<std::vector<int>> lpos(words.size()), mpos(words.size()), rpos(words.size());
  for (size_t w = 0; w < words.size(); ++w) {
    lpos[w] = positions({-2, words[w]});
    mpos[w] = positions({0, words[w]});
    rpos[w] = positions({2, words[w]});
  }

  auto member = [&](const ClassFlags& f) {
    switch (cls) {
      case PathClass::R: return f.in_r;
      case PathClass::U: return f.in_u;
      case PathClass::S: return f.in_s;
      case PathClass::MirS: return f.in_mir_s;
      case PathClass::V: return f.in_v;
      case PathClass::Shat: return f.in_s || f.in_mir_s;
    }
    return false;
  };

  std::vector<DiagonalTriple> out;
  for (size_t a = 0; a < words.size(); ++a)
    for (size_t b = 0; b < words.size(); ++b)
      for (size_t c = 0; c < words.size(); ++c) {
        if (member(flags_from_positions(lpos[a], mpos[b], rpos[c])))
          out.push_back({{-2, words[a]}, {0, words[b]}, {2, words[c]}});
      }
  return out;
}

}  // namespace baxter
