#pragma once

#include <string>
#include <vector>

#include "baxter/walks.hpp"

namespace baxter {

// Decoration of a sink of degree i+1: i corners and i+1 edges around it,
// each possibly marked.  Edge j sits between corners j-1 and j; it may be
// marked only when every adjacent corner that exists is marked.
struct SinkDecoration {
  int corner_count = 0;            // i
  std::vector<bool> corner_marks;  // size i
  std::vector<bool> edge_marks;    // size i+1
  friend bool operator==(const SinkDecoration&, const SinkDecoration&) = default;
};

// Indices of the edges the marking rule allows, ascending.  Equivalently: in
// the corner walk padded with an east step on both ends, these are the edges
// whose point is flanked by east steps.
std::vector<int> markable_edges(const std::vector<bool>& corner_marks);

void validate_decoration(const SinkDecoration& d);  // contract error when violated
int marked_edge_count(const SinkDecoration& d);     // p
int marked_corner_count(const SinkDecoration& d);   // q

// Code of a decoration: a walk word w (east count q+1-p, north count i-q,
// beginning east when non-empty) and a weight sequence s of q+2-p entries
// summing to p.  s is aligned with the east steps of w plus one trailing
// east step that the encoding procedure drops from the walk.
struct SinkCodePair {
  std::string w;
  std::vector<int> s;
  friend bool operator==(const SinkCodePair&, const SinkCodePair&) = default;
  friend auto operator<=>(const SinkCodePair&, const SinkCodePair&) = default;
};

bool is_valid_code_pair(const SinkCodePair& c, int corner_count);

// Corner walk -> pad east on both ends -> delete the point of every marked
// edge, merging its two east steps and accumulating one weight per surviving
// east step -> drop the final east step.  w is empty exactly when every edge
// is marked.
SinkCodePair encode(const SinkDecoration& d);

// Inverse of encode; format error on malformed input.
SinkDecoration decode(const SinkCodePair& c, int corner_count);

std::vector<SinkDecoration> enumerate_decorations(int corner_count);
std::vector<SinkCodePair> enumerate_code_pairs(int corner_count);

// Replace the suffix east-north^i of w3 (which must be exactly its trailing
// north run, preceded by an east step) by the walk word w.
BinaryWalk splice(const BinaryWalk& w3, int corner_count, const std::string& w);

// Inverse of splice given the end point (x2, y2) of the enclosing tuple's
// w2: keep the maximal prefix of w3_prime inside {x <= x2}, then append one
// east step and norths up to the pre-splice end point (x2+1, y2-1).
BinaryWalk unsplice(const BinaryWalk& w3_prime, LatticePoint w2_end);

}  // namespace baxter
