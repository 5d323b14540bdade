#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "baxter/bigint.hpp"
#include "baxter/perm.hpp"

namespace baxter {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(LatticePoint p);

// Walk on Z^2 with unit east ('E') and north ('N') steps.
struct BinaryWalk {
  LatticePoint start;
  std::string steps;

  int length() const { return static_cast<int>(steps.size()); }
  int east_count() const;
  int north_count() const { return length() - east_count(); }
  LatticePoint end() const;
  std::vector<LatticePoint> points() const;  // length()+1 visited points

  friend bool operator==(const BinaryWalk&, const BinaryWalk&) = default;
  friend auto operator<=>(const BinaryWalk&, const BinaryWalk&) = default;
};

void validate_steps(const std::string& steps);  // format error on non-E/N chars
bool vertex_disjoint(const BinaryWalk& a, const BinaryWalk& b);

// Number of east/north walks from one point to another: C(dx+dy, dx), zero
// when the displacement has a negative component.
BigInt walk_count(LatticePoint from, LatticePoint to);

// Every step word from `from` to `to`, lexicographically ('E' < 'N').
std::vector<std::string> all_walk_words(LatticePoint from, LatticePoint to);

// All sequences of `parts` non-negative integers summing to `total`,
// lexicographically ascending.
std::vector<std::vector<int>> compositions(int total, int parts);

inline constexpr int kDefaultTripleStepBound = 24;

// Lindstrom-Gessel-Viennot count of vertex-disjoint walk triples for a
// non-permutable start/end configuration (any disjoint routing connects
// start i to end i).  A negative determinant signals a violated
// precondition and raises a contract error.
BigInt lgv_count_3(const std::array<LatticePoint, 3>& starts,
                   const std::array<LatticePoint, 3>& ends);

// Exhaustive list of pairwise vertex-disjoint triples (walk i from starts[i]
// to ends[i]), ordered lexicographically by step words.  Raises a capacity
// error when the combined walk length exceeds max_total_steps.
std::vector<std::array<BinaryWalk, 3>> enumerate_disjoint_triples(
    const std::array<LatticePoint, 3>& starts, const std::array<LatticePoint, 3>& ends,
    int max_total_steps = kDefaultTripleStepBound);

// Walk triple plus weight sequence encoding an involutive Baxter permutation
// with profile (n, k, p, r): w1, w2, w3 start at (-1,1), (0,0), (0,-1), end
// at (k-1, n+p-k), (k, n+p-k-1), (k+r, n-k-r-1), are pairwise
// vertex-disjoint, and s holds r+1 non-negative entries summing to p.
struct Theorem1Tuple {
  BinaryWalk w1, w2, w3;
  std::vector<int> s;
  friend bool operator==(const Theorem1Tuple&, const Theorem1Tuple&) = default;
};

std::array<LatticePoint, 3> theorem1_starts();
std::array<LatticePoint, 3> theorem1_ends(const ParameterProfile& q);

// C(p+r, r) times the disjoint-triple determinant; 0 for infeasible profiles.
BigInt theorem1_tuple_count(const ParameterProfile& q);

std::vector<Theorem1Tuple> enumerate_theorem1_tuples(
    const ParameterProfile& q, int max_total_steps = kDefaultTripleStepBound);

// Member of the class of spliced triples: same start points as above, w1 and
// w2 of equal length and east count ending at (x2, y2), w3 ending at
// (x3, y3) with x3 >= x2 and x2+y2 >= x3+y3, all pairwise vertex-disjoint,
// and s of a+1 entries summing to b where a = x3-x2, b = (x2+y2)-(x3+y3).
struct ClassETuple {
  BinaryWalk w1, w2, w3;
  std::vector<int> s;
  int a() const { return w3.end().x - w2.end().x; }
  int b() const {
    LatticePoint e2 = w2.end(), e3 = w3.end();
    return e2.x + e2.y - e3.x - e3.y;
  }
};

// Empty string when (w1, w2, w3, s) is a class member, otherwise the first
// violated clause.
std::string class_e_violation(const BinaryWalk& w1, const BinaryWalk& w2, const BinaryWalk& w3,
                              const std::vector<int>& s);
bool is_class_e(const BinaryWalk& w1, const BinaryWalk& w2, const BinaryWalk& w3,
                const std::vector<int>& s);
ClassETuple make_class_e(BinaryWalk w1, BinaryWalk w2, BinaryWalk w3, std::vector<int> s);

}  // namespace baxter
