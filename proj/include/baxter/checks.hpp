#pragma once

#include <map>
#include <string>
#include <vector>

#include "baxter/path_swap.hpp"
#include "baxter/walks.hpp"

namespace baxter {

struct CheckRow {
  std::string item;  // no commas, so csv rendering stays trivial
  std::string expected;
  std::string actual;
  bool ok = true;
};

struct CheckReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::vector<CheckRow> rows;
  bool passed = true;
  // first failing comparison, empty while passed
  std::map<std::string, std::string> counterexample;
  long long checks_run = 0;
};

std::string render_text(const CheckReport& report);

// Brute-force pattern scan against the known Baxter numbers
// 1, 2, 6, 22, 92, 422, 2074, 10754 (sizes 1..8).
CheckReport check_baxter_numbers(int max_size);

// Fixed-point-free involutive Baxter counts: exhaustive enumeration of
// involutions of size 2n against the closed form, plus frozen values for
// n <= 6.
CheckReport check_fpf(int max_n);

// Profile census of sizes 0..max_size against the multivariate closed form.
CheckReport check_formula(int max_size, int jobs = 1);

// Profile census against exhaustive enumeration of the walk-tuple images.
CheckReport check_bijection(int max_size, int jobs = 1,
                            int max_total_steps = kDefaultTripleStepBound);

// Disjoint-triple determinant against brute-force enumeration: every walk
// start/end configuration arising from a profile with 2n+p <= max_profile_size,
// then `random_configs` sampled configurations (rejection-sampled to be
// non-permutable, which the brute force verifies routing by routing).
CheckReport check_lgv(int max_profile_size, int random_configs, int max_random_steps,
                      unsigned int seed, int max_total_steps = kDefaultTripleStepBound);

// Sink decorations <-> code pairs: round trips both ways, cardinalities by
// (marked-edge, marked-corner) statistics, the empty-word criterion, and
// splice/unsplice round trips, for corner counts 0..max_corner_count.
CheckReport check_sinkcode(int max_corner_count);

// Diagonal-path classes: cardinalities against the closed forms, the
// U = R + S split, the head-swap involution between V and S u mir(S) both
// ways, and the rotation from p = 0 walk tuples onto class R.
CheckReport check_involution(int max_n, int class_bound = kDefaultClassBound,
                             int max_total_steps = kDefaultTripleStepBound);

// Closed-form identities: b = u - s and the pair-count factorizations for
// n <= max_n, formula integrality over all feasible profiles with
// 2n+p <= max_n, and agreement of the closed form with the determinant count
// on small profiles.
CheckReport check_identities(int max_n);

}  // namespace baxter
