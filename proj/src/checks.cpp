#include "baxter/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "baxter/closed_forms.hpp"
#include "baxter/errors.hpp"
#include "baxter/perm.hpp"
#include "baxter/sink_code.hpp"

namespace baxter {

std::string render_text(const CheckReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS" : "FAIL") << " " << report.name;
  for (const auto& [key, value] : report.parameters) out << " " << key << "=" << value;
  out << " (" << report.checks_run << " checks)\n";
  for (const auto& row : report.rows)
    out << "  " << (row.ok ? "ok  " : "FAIL") << " " << row.item << ": expected "
        << row.expected << ", got " << row.actual << "\n";
  if (!report.counterexample.empty()) {
    out << "  counterexample:";
    for (const auto& [key, value] : report.counterexample) out << " " << key << "=" << value;
    out << "\n";
  }
  return out.str();
}

namespace {

bool record(CheckReport& rep, const std::string& item, const std::string& expected,
            const std::string& actual, bool visible) {
  bool ok = expected == actual;
  ++rep.checks_run;
  if (!ok) {
    rep.passed = false;
    if (rep.counterexample.empty())
      rep.counterexample = {{"item", item}, {"expected", expected}, {"actual", actual}};
  }
  if (visible || !ok) rep.rows.push_back({item, expected, actual, ok});
  return ok;
}

bool expect_eq(CheckReport& rep, const std::string& item, const BigInt& expected,
               const BigInt& actual) {
  return record(rep, item, expected.str(), actual.str(), true);
}

bool expect_quiet(CheckReport& rep, const std::string& item, const BigInt& expected,
                  const BigInt& actual) {
  return record(rep, item, expected.str(), actual.str(), false);
}

bool require(CheckReport& rep, const std::string& item, bool ok) {
  return record(rep, item, "satisfied", ok ? "satisfied" : "violated", false);
}

// visible aggregate row over a quiet loop: `failures` of `cases` went wrong
void summarize(CheckReport& rep, const std::string& item, long long cases, long long failures) {
  record(rep, item, std::to_string(cases) + " ok", std::to_string(cases - failures) + " ok",
         true);
}

std::vector<ParameterProfile> feasible_profiles_of_size(int m) {
  std::vector<ParameterProfile> out;
  for (int n = 1; 2 * n <= m; ++n) {
    int p = m - 2 * n;
    for (int k = 0; k <= n + p - 1; ++k)
      for (int r = 0; k + r <= n; ++r) out.push_back({n, k, p, r});
  }
  return out;
}

}  // namespace

CheckReport check_baxter_numbers(int max_size) {
  CheckReport rep;
  rep.name = "baxter-numbers";
  rep.parameters["max_size"] = std::to_string(max_size);
  if (max_size < 1 || max_size > 8)
    throw contract_error("check_baxter_numbers: max_size must be in 1..8");
  static const long long kKnown[] = {1, 2, 6, 22, 92, 422, 2074, 10754};
  for (int m = 1; m <= max_size; ++m) {
    std::vector<int> line(m);
    std::iota(line.begin(), line.end(), 1);
    long long count = 0;
    do {
      if (is_baxter(Permutation(line))) ++count;
    } while (std::next_permutation(line.begin(), line.end()));
    expect_eq(rep, "size " + std::to_string(m) + " pattern scan vs known count",
              BigInt(kKnown[m - 1]), BigInt(count));
  }
  return rep;
}

CheckReport check_fpf(int max_n) {
  CheckReport rep;
  rep.name = "fpf";
  rep.parameters["max_n"] = std::to_string(max_n);
  if (max_n < 1) throw contract_error("check_fpf: max_n must be >= 1");
  static const long long kFrozen[] = {1, 3, 12, 56, 288, 1584};
  for (int n = 1; n <= max_n; ++n) {
    long long brute = 0;
    for_each_involution(2 * n, true, [&](const Permutation& pi) {
      if (is_baxter(pi)) ++brute;
    });
    std::string tag = "2n=" + std::to_string(2 * n) + " ";
    expect_eq(rep, tag + "closed form vs exhaustive count", b_fpf(n), BigInt(brute));
    if (n <= 6) expect_eq(rep, tag + "frozen value", BigInt(kFrozen[n - 1]), BigInt(brute));
  }
  return rep;
}

CheckReport check_formula(int max_size, int jobs) {
  CheckReport rep;
  rep.name = "formula";
  rep.parameters["max_size"] = std::to_string(max_size);
  rep.parameters["jobs"] = std::to_string(jobs);
  if (max_size < 0) throw contract_error("check_formula: max_size must be >= 0");
  for (int m = 0; m <= max_size; ++m) {
    ProfileCensus census = profile_census(m, jobs);
    std::set<ParameterProfile> profiles;
    for (const ParameterProfile& q : feasible_profiles_of_size(m)) profiles.insert(q);
    profiles.insert({0, 0, m, 0});  // the identity of size m
    for (const auto& [q, count] : census) profiles.insert(q);
    BigInt total_formula = 0, total_census = 0;
    for (const ParameterProfile& q : profiles) {
      BigInt formula =
          q.n == 0 ? BigInt(q.k == 0 && q.r == 0 && q.p == m ? 1 : 0) : a_multi(q);
      auto it = census.find(q);
      BigInt counted = it == census.end() ? BigInt(0) : it->second;
      expect_quiet(rep, "m=" + std::to_string(m) + " " + to_string(q), formula, counted);
      total_formula += formula;
      total_census += counted;
    }
    expect_eq(rep,
              "m=" + std::to_string(m) + " total over " + std::to_string(profiles.size()) +
                  " profiles",
              total_formula, total_census);
  }
  return rep;
}

CheckReport check_bijection(int max_size, int jobs, int max_total_steps) {
  CheckReport rep;
  rep.name = "bijection";
  rep.parameters["max_size"] = std::to_string(max_size);
  rep.parameters["jobs"] = std::to_string(jobs);
  if (max_size < 1) throw contract_error("check_bijection: max_size must be >= 1");
  for (int m = 1; m <= max_size; ++m) {
    ProfileCensus census = profile_census(m, jobs);
    std::set<ParameterProfile> profiles;
    for (const ParameterProfile& q : feasible_profiles_of_size(m)) profiles.insert(q);
    for (const auto& [q, count] : census)
      if (q.n >= 1) profiles.insert(q);
    BigInt total_tuples = 0, total_census = 0;
    for (const ParameterProfile& q : profiles) {
      BigInt tuples = BigInt(enumerate_theorem1_tuples(q, max_total_steps).size());
      auto it = census.find(q);
      BigInt counted = it == census.end() ? BigInt(0) : it->second;
      expect_quiet(rep, "m=" + std::to_string(m) + " " + to_string(q) + " tuples vs census",
                   tuples, counted);
      total_tuples += tuples;
      total_census += counted;
    }
    expect_eq(rep, "m=" + std::to_string(m) + " tuple total vs non-identity census total",
              total_tuples, total_census);
  }
  return rep;
}

CheckReport check_lgv(int max_profile_size, int random_configs, int max_random_steps,
                      unsigned int seed, int max_total_steps) {
  CheckReport rep;
  rep.name = "lgv";
  rep.parameters["max_profile_size"] = std::to_string(max_profile_size);
  rep.parameters["random_configs"] = std::to_string(random_configs);
  rep.parameters["max_random_steps"] = std::to_string(max_random_steps);
  rep.parameters["seed"] = std::to_string(seed);

  for (int m = 2; m <= max_profile_size; ++m) {
    BigInt sum_det = 0, sum_brute = 0;
    for (const ParameterProfile& q : feasible_profiles_of_size(m)) {
      auto ends = theorem1_ends(q);
      BigInt det = lgv_count_3(theorem1_starts(), ends);
      BigInt brute =
          BigInt(enumerate_disjoint_triples(theorem1_starts(), ends, max_total_steps).size());
      expect_quiet(rep, to_string(q) + " determinant vs enumeration", det, brute);
      sum_det += det;
      sum_brute += brute;
    }
    expect_eq(rep, "m=" + std::to_string(m) + " determinant total vs enumeration total",
              sum_det, sum_brute);
  }

  if (random_configs > 0) {
    std::mt19937 rng(seed);
    auto pick = [&](int lo, int hi) {
      return lo + static_cast<int>(rng() % static_cast<unsigned int>(hi - lo + 1));
    };
    static const int kOtherRoutings[5][3] = {
        {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int accepted = 0;
    long long nonzero = 0;
    long long attempts = 0;
    const long long attempt_cap = 200LL * random_configs;
    while (accepted < random_configs && attempts < attempt_cap) {
      ++attempts;
      std::array<LatticePoint, 3> starts, ends;
      starts[0] = {pick(-2, 2), pick(-2, 2)};
      starts[1] = {starts[0].x + pick(0, 2), starts[0].y - pick(1, 2)};
      starts[2] = {starts[1].x + pick(0, 2), starts[1].y - pick(1, 2)};
      int total = 0;
      for (int i = 0; i < 3; ++i) {
        int dx = pick(0, 3), dy = pick(0, 3);
        ends[i] = {starts[i].x + dx, starts[i].y + dy};
        total += dx + dy;
      }
      if (total > max_random_steps) continue;
      // the determinant only counts disjoint triples when no other routing
      // admits one; verify that by brute force, else resample
      bool permutable = false;
      for (const auto& routing : kOtherRoutings) {
        std::array<LatticePoint, 3> routed = {ends[routing[0]], ends[routing[1]],
                                              ends[routing[2]]};
        if (!enumerate_disjoint_triples(starts, routed, max_total_steps).empty()) {
          permutable = true;
          break;
        }
      }
      if (permutable) continue;
      ++accepted;
      BigInt brute =
          BigInt(enumerate_disjoint_triples(starts, ends, max_total_steps).size());
      BigInt det = lgv_count_3(starts, ends);
      if (brute > 0) ++nonzero;
      expect_quiet(rep,
                   "random configuration " + std::to_string(accepted) +
                       " determinant vs enumeration",
                   det, brute);
    }
    record(rep, "random configurations verified", std::to_string(random_configs),
           std::to_string(accepted), true);
    record(rep, "random configurations with a nonzero count", "some", nonzero > 0 ? "some" : "none",
           true);
  }
  return rep;
}

CheckReport check_sinkcode(int max_corner_count) {
  CheckReport rep;
  rep.name = "sinkcode";
  rep.parameters["max_corner_count"] = std::to_string(max_corner_count);
  if (max_corner_count < 0) throw contract_error("check_sinkcode: max_corner_count must be >= 0");
  for (int i = 0; i <= max_corner_count; ++i) {
    std::string tag = "i=" + std::to_string(i) + " ";
    auto decorations = enumerate_decorations(i);
    auto pairs = enumerate_code_pairs(i);
    expect_eq(rep, tag + "decoration count vs code pair count", BigInt(decorations.size()),
              BigInt(pairs.size()));

    std::map<std::pair<int, int>, long long> decoration_stats, pair_stats;
    long long failures = 0;
    for (const SinkDecoration& d : decorations) {
      SinkCodePair c = encode(d);
      if (!require(rep, tag + "encode image is a valid code pair", is_valid_code_pair(c, i)))
        ++failures;
      if (!require(rep, tag + "decode inverts encode", decode(c, i) == d)) ++failures;
      if (!require(rep, tag + "empty word iff every edge marked",
                   c.w.empty() == (marked_edge_count(d) == i + 1)))
        ++failures;
      ++decoration_stats[{marked_edge_count(d), marked_corner_count(d)}];
    }
    summarize(rep, tag + "decoration side round trips", 3 * decorations.size(), failures);

    failures = 0;
    for (const SinkCodePair& c : pairs) {
      SinkDecoration d = decode(c, i);
      if (!require(rep, tag + "encode inverts decode", encode(d) == c)) ++failures;
      int p = std::accumulate(c.s.begin(), c.s.end(), 0);
      int easts = static_cast<int>(std::count(c.w.begin(), c.w.end(), 'E'));
      ++pair_stats[{p, easts + p - 1}];
    }
    summarize(rep, tag + "code pair side round trips", pairs.size(), failures);
    require(rep, tag + "marked-edge and marked-corner statistics are preserved",
            decoration_stats == pair_stats);
  }

  // splice round trips: suffix east-north^i against every code word
  long long splice_cases = 0, splice_failures = 0;
  for (int i = 0; i <= std::min(max_corner_count, 3); ++i) {
    std::vector<std::string> prefixes = {""};
    for (int len = 0; len < 3; ++len) {
      std::vector<std::string> next;
      for (const std::string& u : prefixes) {
        if (static_cast<int>(u.size()) == len) {
          next.push_back(u + 'E');
          next.push_back(u + 'N');
        }
      }
      prefixes.insert(prefixes.end(), next.begin(), next.end());
    }
    for (const std::string& u : prefixes) {
      BinaryWalk w3{{0, -1}, u + "E" + std::string(i, 'N')};
      LatticePoint w2_end{w3.end().x - 1, w3.end().y + 1};
      for (const SinkCodePair& c : enumerate_code_pairs(i)) {
        BinaryWalk spliced = splice(w3, i, c.w);
        ++splice_cases;
        if (!require(rep, "i=" + std::to_string(i) + " unsplice inverts splice",
                     unsplice(spliced, w2_end) == w3))
          ++splice_failures;
      }
    }
  }
  summarize(rep, "splice round trips", splice_cases, splice_failures);
  return rep;
}

CheckReport check_involution(int max_n, int class_bound, int max_total_steps) {
  CheckReport rep;
  rep.name = "involution";
  rep.parameters["max_n"] = std::to_string(max_n);
  rep.parameters["class_bound"] = std::to_string(class_bound);
  if (max_n < 1) throw contract_error("check_involution: max_n must be >= 1");
  for (int n = 1; n <= max_n; ++n) {
    std::string tag = "n=" + std::to_string(n) + " ";
    auto class_r = enumerate_class(n, PathClass::R, class_bound);
    auto class_u = enumerate_class(n, PathClass::U, class_bound);
    auto class_s = enumerate_class(n, PathClass::S, class_bound);
    auto class_mir_s = enumerate_class(n, PathClass::MirS, class_bound);
    auto class_v = enumerate_class(n, PathClass::V, class_bound);

    expect_eq(rep, tag + "|U| = |R| + |S|", BigInt(class_u.size()),
              BigInt(class_r.size()) + BigInt(class_s.size()));
    expect_eq(rep, tag + "|U| closed form", u_count(n), BigInt(class_u.size()));
    expect_eq(rep, tag + "|R| fixed-point-free closed form", b_fpf(n), BigInt(class_r.size()));
    expect_eq(rep, tag + "|S| closed form", s_count(n), BigInt(class_s.size()));
    expect_eq(rep, tag + "|mir(S)| = |S|", BigInt(class_s.size()), BigInt(class_mir_s.size()));
    expect_eq(rep, tag + "|V| = 2 |S|", 2 * s_count(n), BigInt(class_v.size()));

    long long failures = 0;
    for (const DiagonalTriple& t : class_u) {
      ClassFlags f = classify(t);
      if (!require(rep, tag + "U splits into R xor S", f.in_r != f.in_s)) ++failures;
    }
    summarize(rep, tag + "U membership split", class_u.size(), failures);

    failures = 0;
    for (const DiagonalTriple& t : class_s)
      if (!require(rep, tag + "S avoids mir(S)", !classify(t).in_mir_s)) ++failures;
    for (const DiagonalTriple& t : class_mir_s)
      if (!require(rep, tag + "mir(S) avoids S", !classify(t).in_s)) ++failures;
    summarize(rep, tag + "S and mir(S) disjointness", class_s.size() + class_mir_s.size(),
              failures);

    failures = 0;
    for (const DiagonalTriple& t : class_v) {
      if (!require(rep, tag + "middle path meets an outer path on V",
                   first_meeting(t).has_value()))
        ++failures;
      DiagonalTriple image = swap_v_to_shat(t);
      ClassFlags f = classify(image);
      if (!require(rep, tag + "head swap sends V into exactly one of S and mir(S)",
                   f.in_s != f.in_mir_s))
        ++failures;
      if (!require(rep, tag + "head swap round trip from V", swap_shat_to_v(image) == t))
        ++failures;
    }
    summarize(rep, tag + "head swap on V", 3 * class_v.size(), failures);

    failures = 0;
    std::vector<DiagonalTriple> shat = class_s;
    shat.insert(shat.end(), class_mir_s.begin(), class_mir_s.end());
    for (const DiagonalTriple& t : shat) {
      DiagonalTriple image = swap_shat_to_v(t);
      if (!require(rep, tag + "head swap sends S and mir(S) into V", classify(image).in_v))
        ++failures;
      if (!require(rep, tag + "head swap round trip from S and mir(S)",
                   swap_v_to_shat(image) == t))
        ++failures;
    }
    summarize(rep, tag + "head swap on S and mir(S)", 2 * shat.size(), failures);

    BigInt tuple_total = 0;
    for (int k = 0; k <= n - 1; ++k)
      for (int r = 0; k + r <= n; ++r) tuple_total += theorem1_tuple_count({n, k, 0, r});
    expect_eq(rep, tag + "walk tuple total at p=0 vs |R|", tuple_total, BigInt(class_r.size()));

    if (n <= 6) {
      failures = 0;
      long long tuples_seen = 0;
      std::set<DiagonalTriple> images;
      for (int k = 0; k <= n - 1; ++k)
        for (int r = 0; k + r <= n; ++r)
          for (const Theorem1Tuple& tup :
               enumerate_theorem1_tuples({n, k, 0, r}, max_total_steps)) {
            ++tuples_seen;
            DiagonalTriple image = rotate_from_binary(tup);
            if (!require(rep, tag + "rotated tuple lands in class R", classify(image).in_r))
              ++failures;
            images.insert(image);
          }
      summarize(rep, tag + "rotated tuples land in class R", tuples_seen, failures);
      std::set<DiagonalTriple> r_set(class_r.begin(), class_r.end());
      require(rep, tag + "rotation image equals class R as a set", images == r_set);
      expect_eq(rep, tag + "rotation image size vs |R|", BigInt(r_set.size()),
                BigInt(images.size()));
    }
  }
  return rep;
}

CheckReport check_identities(int max_n) {
  CheckReport rep;
  rep.name = "identities";
  rep.parameters["max_n"] = std::to_string(max_n);
  if (max_n < 1) throw contract_error("check_identities: max_n must be >= 1");

  for (int n = 1; n <= max_n; ++n) {
    std::string tag = "n=" + std::to_string(n) + " ";
    expect_eq(rep, tag + "b = u - s", b_fpf(n), u_count(n) - s_count(n));
    expect_eq(rep, tag + "u from start-gap-1 disjoint pairs", u_count(n),
              pow2(n - 1) * disjoint_pair_count(n, 1, 1));
    expect_eq(rep, tag + "2s from start-gap-2 disjoint pairs", 2 * s_count(n),
              pow2(n - 1) * disjoint_pair_count(n, 2, 1));
  }

  long long profiles_checked = 0, failures = 0;
  for (int m = 2; m <= max_n; ++m)
    for (const ParameterProfile& q : feasible_profiles_of_size(m)) {
      ++profiles_checked;
      bool ok = true;
      try {
        ok = a_multi(q) >= 0;
      } catch (const std::exception&) {
        ok = false;
      }
      if (!require(rep, "formula integral and non-negative at " + to_string(q), ok))
        ++failures;
    }
  summarize(rep, "formula integrality sweep", profiles_checked, failures);

  failures = 0;
  profiles_checked = 0;
  for (int m = 2; m <= std::min(max_n, 12); ++m)
    for (const ParameterProfile& q : feasible_profiles_of_size(m)) {
      ++profiles_checked;
      if (!expect_quiet(rep, "closed form vs determinant count at " + to_string(q), a_multi(q),
                        theorem1_tuple_count(q)))
        ++failures;
    }
  summarize(rep, "closed form vs determinant count", profiles_checked, failures);
  return rep;
}

}  // namespace baxter
