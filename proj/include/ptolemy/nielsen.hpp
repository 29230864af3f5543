#pragma once

#include <optional>
#include <vector>

#include "ptolemy/fatgraph.hpp"
#include "ptolemy/word.hpp"

namespace ptolemy {

// Maximal tree selected by the greedy rule: an edge is a tree edge iff its
// preferred dart is boundary-first among the darts into its head.  The
// complement, in boundary order of preferred darts, is the canonical ordered
// generating set; its size is 2g.
struct GreedyTree {
  BoundaryOrder order;
  std::vector<char> in_tree;        // by dart: true iff the dart's edge is a tree edge
  std::vector<Dart> generators;     // preferred darts of non-tree edges, boundary order
  std::vector<int> generator_index; // by dart: 1-based index if the dart is a listed generator, else 0

  int rank() const { return static_cast<int>(generators.size()); }
  bool edge_in_tree(Dart d) const { return in_tree[d]; }
};

GreedyTree greedy(const FatGraph& g);

// The abstract F_{2g}-marking that assigns letter i to the i-th generator:
// values of all darts, solved from the vertex conditions leaf-inward.  The
// univalent vertex carries no condition (its dart holds the boundary class).
std::vector<Word> canonical_marking(const FatGraph& g, const GreedyTree& t);

// Value of a single dart under the canonical marking.
Word express(const FatGraph& g, const GreedyTree& t, Dart d);

// Canonical word of the boundary class, carried by the tail edge.  Equals
// the left-to-right chord-diagram reading on linear diagrams.
Word boundary_word(const FatGraph& g);

// The Whitehead-move action on canonical generators: letter i is sent to the
// expression, in the source graph's letters, of the i-th generator of the
// moved graph.  Computed by transporting the canonical marking across the
// move and reading off the new generators.
EndoMap nielsen_of_move(const FatGraph& g, Dart d);

// Closed-form construction from the six-case classification; defined for
// kinds 1 and 2 (identity) and for forward moves of kinds 3..6.  Returns
// nullopt for inverse-direction moves of kinds 3..6, whose formula is the
// automorphism inverse of the reverse move's.  Used as a differential oracle
// against nielsen_of_move.
std::optional<EndoMap> nielsen_closed_form(const FatGraph& g, Dart d);

// Right-to-left composition over the steps; the empty sequence gives the
// identity on F_{2g}.
EndoMap nielsen_of_sequence(const MoveSequence& s);

}  // namespace ptolemy
