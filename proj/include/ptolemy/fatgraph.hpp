#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptolemy {

using Dart = int;  // 1-based oriented-edge index

// Domain error with a stable code string ("TailMove", "NotBordered", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A fatgraph as a combinatorial map on darts 1..n:
//  - edge_mate is the fixed-point-free involution pairing a dart with its
//    reversal;
//  - rotation_next is the permutation whose cycles are the vertices, each
//    cycle listing the inbound darts in counterclockwise order;
//  - tail is the dart of the univalent-vertex edge oriented away from that
//    vertex (so its mate forms the length-1 rotation cycle).
//
// The boundary cycle follows the fixed convention
//     boundary_next(d) = edge_mate(rotation_next(d)),
// i.e. the next edge in the cyclic order at the head of d, reversed so that
// it points away.  Values are immutable after construction; every operation
// returns a fresh graph.
class FatGraph {
 public:
  FatGraph(std::vector<Dart> edge_mate, std::vector<Dart> rotation_next, Dart tail);

  int dart_count() const { return static_cast<int>(mate_.size()) - 1; }
  Dart edge_mate(Dart d) const { return mate_[check(d)]; }
  Dart rotation_next(Dart d) const { return rot_[check(d)]; }
  Dart boundary_next(Dart d) const { return mate_[rot_[check(d)]]; }
  Dart tail() const { return tail_; }

  // Vertex id of the head of d (darts point toward their vertex).
  int vertex_of(Dart d) const { return vertex_of_[check(d)]; }
  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  const std::vector<std::vector<Dart>>& vertices() const { return vertex_cycles_; }
  int valence(int vertex) const { return static_cast<int>(vertex_cycles_[vertex].size()); }

  int edge_count() const { return dart_count() / 2; }
  bool is_tail_edge(Dart d) const { return d == tail_ || d == mate_[d]; }

  friend bool operator==(const FatGraph& a, const FatGraph& b) {
    return a.mate_ == b.mate_ && a.rot_ == b.rot_ && a.tail_ == b.tail_;
  }

 private:
  Dart check(Dart d) const {
    if (d < 1 || d > dart_count()) throw std::out_of_range("dart id out of range");
    return d;
  }
  std::vector<Dart> mate_;  // 1-based, slot 0 unused
  std::vector<Dart> rot_;
  Dart tail_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<Dart>> vertex_cycles_;
};

struct ValidationReport {
  bool structurally_ok = false;  // involution/rotation/tail/connectivity
  int boundary_cycles = 0;
  int genus = 0;       // meaningful only when boundary_cycles == 1
  bool trivalent = false;  // all non-univalent vertices have valence 3
  std::vector<std::string> issues;

  bool bordered() const { return structurally_ok && boundary_cycles == 1; }
  bool trivalent_bordered() const { return bordered() && trivalent; }
};

// Checks the fatgraph invariants.  A wrong boundary-cycle count is reported,
// not fatal; structural defects (fixed point of the involution, missing or
// ambiguous univalent vertex, disconnected graph) are flagged in `issues`.
ValidationReport validate(const FatGraph& g);

// Total order on darts by first traversal of the boundary cycle starting at
// the tail.  `rank` is the inverse of `sequence`; `preferred(d)` is the
// earlier of d and its mate.
struct BoundaryOrder {
  std::vector<Dart> sequence;
  std::vector<int> rank;  // 1-based by dart

  int rank_of(Dart d) const { return rank[d]; }
  Dart preferred(Dart d, const FatGraph& g) const {
    Dart m = g.edge_mate(d);
    return rank[d] < rank[m] ? d : m;
  }
};

BoundaryOrder boundary_order(const FatGraph& g);  // throws NotBordered

// Collapse of the edge of `d` followed by the unique distinct expansion.
// The four outer darts and the two darts of the move edge keep their ids;
// only incidences change.  Requires a trivalent bordered graph and a
// non-tail edge.
FatGraph whitehead_move(const FatGraph& g, Dart d);

// Whitehead moves fall into six classes read off from the linear order in
// which the boundary cycle traverses the four sectors surrounding the move
// edge.  `forward` distinguishes a move from its inverse within a class:
// for kinds 3..6 the forward move carries the edge out of the greedy tree.
struct MoveType {
  int kind = 0;  // 1..6
  bool forward = true;

  friend bool operator==(const MoveType& a, const MoveType& b) {
    return a.kind == b.kind && a.forward == b.forward;
  }
};

MoveType classify_move(const FatGraph& g, Dart d);

// One Whitehead move together with its classification and result.
struct MoveStep {
  Dart edge;  // a dart of the move edge, in the source graph's labels
  MoveType type;
  FatGraph result;
};

// A composable chain of Whitehead moves (a Ptolemy-groupoid morphism).
class MoveSequence {
 public:
  explicit MoveSequence(FatGraph start) : start_(std::move(start)) {}

  const FatGraph& start() const { return start_; }
  const FatGraph& end() const { return steps_.empty() ? start_ : steps_.back().result; }
  const std::vector<MoveStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  // Applies a move to the current endpoint and records it.
  void push(Dart edge_dart);
  // Appends another sequence; its start must equal the current endpoint.
  void append(const MoveSequence& tail);
  MoveSequence reversed() const;  // the inverse morphism

 private:
  FatGraph start_;
  std::vector<MoveStep> steps_;
};

// Renumbers darts by first appearance along the boundary and serializes.
// Two bordered fatgraphs are isomorphic iff their encodings are equal
// (bordered fatgraphs are rigid).
std::string canonical_encoding(const FatGraph& g);
FatGraph canonical_form(const FatGraph& g);

// `.fat` text format:
//   darts N
//   tail d
//   v: d1 d2 ... dk      (one line per vertex, cyclic order of inbound darts)
//   e: d d'              (one line per edge)
// The writer emits vertices sorted by minimal dart id and each cycle rotated
// to start at its minimal dart.
std::string write_fat(const FatGraph& g);
FatGraph read_fat(std::istream& in);
FatGraph read_fat_string(const std::string& text);
FatGraph read_fat_file(const std::string& path);

}  // namespace ptolemy
