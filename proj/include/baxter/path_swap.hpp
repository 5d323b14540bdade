#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "baxter/walks.hpp"

namespace baxter {

// Diagonal path in doubled x-coordinates: one time unit per step, 'L' moves
// x by -1 and 'R' by +1, so two paths can only meet at equal times and the
// paper's distance d reads as doubled distance 2d.
struct DiagonalPath {
  int start_x = 0;  // even
  std::string steps;

  int length() const { return static_cast<int>(steps.size()); }
  int x_at(int t) const;  // position after t steps
  int end_x() const { return x_at(length()); }

  friend bool operator==(const DiagonalPath&, const DiagonalPath&) = default;
  friend auto operator<=>(const DiagonalPath&, const DiagonalPath&) = default;
};

DiagonalPath reflect(const DiagonalPath& p);  // x -> -x

// Triple of equal-length diagonal paths started at doubled x = -2, 0, +2.
struct DiagonalTriple {
  DiagonalPath left, mid, right;
  friend bool operator==(const DiagonalTriple&, const DiagonalTriple&) = default;
  friend auto operator<=>(const DiagonalTriple&, const DiagonalTriple&) = default;
};

// Vertical mirror: reflect each path and swap the outer roles.
DiagonalTriple mirror(const DiagonalTriple& t);

// U: left and mid vertex-disjoint with ends at doubled distance 2.
// R: U and right disjoint from both others.      S: U and right meets mid.
// mir(S): the mirror image lies in S.
// V: left and right vertex-disjoint with ends at doubled distance 2.
struct ClassFlags {
  bool in_r = false, in_u = false, in_s = false, in_mir_s = false, in_v = false;
};

ClassFlags classify(const DiagonalTriple& t);

enum class Side { left, right };
struct Meeting {
  int time = 0;
  Side side = Side::left;
  friend bool operator==(const Meeting&, const Meeting&) = default;
};

// Earliest time t >= 1 at which mid coincides with left or right (left is
// reported first on a tie; the side is unique whenever left and right are
// disjoint, in particular on class V).
std::optional<Meeting> first_meeting(const DiagonalTriple& t);

// Rotate a p = 0 tuple by (x,y) -> (x-y, x+y): east becomes R, north becomes
// L, the starts become -2, 0 and, after dropping w3's forced opening east
// step, +2.  The image lies in class R.
DiagonalTriple rotate_from_binary(const Theorem1Tuple& t);

// Head-swap involution: on V, exchange the head segments of mid and the
// first-met outer path (landing in S for a right meeting, mir(S) for a left
// one); on S or mir(S), exchange the heads of mid and the outer path it
// meets, landing back in V.
DiagonalTriple swap_v_to_shat(const DiagonalTriple& t);
DiagonalTriple swap_shat_to_v(const DiagonalTriple& t);

enum class PathClass { R, U, S, MirS, V, Shat };

inline constexpr int kDefaultClassBound = 8;

// All triples of the class at size n (paths of n-1 steps), in lexicographic
// order of (left, mid, right) step words with 'L' < 'R'.  Raises a capacity
// error when n exceeds max_n.
std::vector<DiagonalTriple> enumerate_class(int n, PathClass cls, int max_n = kDefaultClassBound);

}  // namespace baxter
