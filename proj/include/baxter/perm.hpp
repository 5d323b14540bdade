#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "baxter/bigint.hpp"

namespace baxter {

// Permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation
  explicit Permutation(std::vector<int> one_line);  // contract: bijective on {1..m}
  static Permutation identity(int m);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int pos) const { return values_[pos - 1]; }  // 1-based position
  const std::vector<int>& one_line() const { return values_; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// (n, k, p, r): a permutation with 2n non-fixed points, 2k non-crossing
// descents, p fixed points and r crossing descents.
struct ParameterProfile {
  int n = 0;
  int k = 0;
  int p = 0;
  int r = 0;
  friend bool operator==(const ParameterProfile&, const ParameterProfile&) = default;
  friend auto operator<=>(const ParameterProfile&, const ParameterProfile&) = default;
};

std::string to_string(const ParameterProfile& q);

// Parameter quadruples realizable by a non-empty involutive Baxter
// permutation: n >= 1, k <= n+p-1, r <= n-k, nothing negative.
bool profile_feasible(const ParameterProfile& q);

// A descent position i (so perm(i) > perm(i+1)); it crosses the main
// diagonal exactly when perm(i) > i and perm(i+1) < i+1.
struct Descent {
  int index = 0;
  bool crossing = false;
  friend bool operator==(const Descent&, const Descent&) = default;
};

bool is_involution(const Permutation& pi);

// Direct scan for the vincular patterns 2-41-3 and 3-14-2: positions
// i < j, j+1 < l with value chains pi(j+1) < pi(i) < pi(l) < pi(j)
// respectively pi(j) < pi(l) < pi(i) < pi(j+1).
bool is_baxter(const Permutation& pi);

Permutation inverse(const Permutation& pi);
Permutation reverse_complement(const Permutation& pi);

std::vector<Descent> descent_profile(const Permutation& pi);

// Contract: pi is an involutive Baxter permutation. Signals a contract
// violation when the non-fixed-point count or the non-crossing-descent count
// is odd.
ParameterProfile profile(const Permutation& pi);

// Involutions of {1..m} in lexicographic order of the one-line notation.
void for_each_involution(int m, bool fixed_point_free,
                         const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_involutions(int m, bool fixed_point_free);

using ProfileCensus = std::map<ParameterProfile, BigInt>;

// Profile counts over all involutive Baxter permutations of size m.  With
// jobs > 1 the involution space is partitioned on the image of element 1 and
// the partial censuses merged in partition order, so the result does not
// depend on the job count.
ProfileCensus profile_census(int m, int jobs = 1);

}  // namespace baxter
