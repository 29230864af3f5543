#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ptolemy/fatgraph.hpp"
#include "ptolemy/nielsen.hpp"
#include "ptolemy/word.hpp"

namespace ptolemy {

// A linear chord diagram: a bordered fatgraph whose greedy tree is a path
// rooted at the tail, viewed with its 4g chord attachment points numbered
// left to right.  The rightmost true vertex carries two chord ends; the
// presentation splits them by a bookkeeping bivalent point on the rightmost
// chord, which exists only in this view, never in the underlying graph.
struct ChordDiagram {
  explicit ChordDiagram(FatGraph g) : graph(std::move(g)) {}

  FatGraph graph;
  int genus = 0;
  // Presentation data, all 1-based by position 1..4g:
  std::vector<Dart> inbound;      // chord dart arriving at each position
  std::vector<int> letter;        // signed generator index read at each position
  std::vector<Dart> core_edge;    // core_edge[k] = eastward dart between positions k,k+1
                                  // (1..4g-2; the 4g-1/4g "gap" is the bookkeeping point)

  // Positions of the two ends of the chord with generator index i.
  std::pair<int, int> chord_ends(int i) const;  // (departure, arrival) of x_i
};

// Reads the chord-diagram structure off a fatgraph.  Throws NotLinear when
// the greedy tree is not a path or a chord attaches on the wrong side of
// the core.
ChordDiagram as_chord_diagram(const FatGraph& g);
bool is_chord_diagram(const FatGraph& g);

// Observation-style word of the boundary class: the letters read left to
// right along the core.  Always reduced, one occurrence of each letter per
// sign.
Word read_word(const ChordDiagram& c);

// Moves every branch of the greedy tree into the core, left to right; every
// emitted move is of kind 1 or 2 and acts trivially on the canonical
// generators.  Deterministic: always the boundary-first candidate.
std::pair<MoveSequence, ChordDiagram> branch_reduce(const FatGraph& g);

struct RealizationResult {
  bool accepted = false;
  int boundary_cycles = 0;              // odd and > 1 when rejected
  std::optional<ChordDiagram> diagram;  // present iff accepted
  std::vector<int> flipped;             // input letters whose preferred orientation reversed
};

// Builds the attachment pattern of a word with each letter appearing exactly
// once per sign; accepts iff the result has a single boundary cycle.
RealizationResult diagram_from_word(const Word& w);

enum class SlideDir { kLeft, kRight };

// Slide of the chord endpoint at `position` along its neighbour in the given
// direction: a Whitehead move on the separating core edge followed by one on
// the neighbouring chord.  Across the bookkeeping point the core move is an
// isotopy and a single Whitehead move is emitted.
std::pair<MoveSequence, ChordDiagram> chord_slide(const ChordDiagram& c, int position,
                                                  SlideDir dir);

// Drives a diagram to the symplectic chord diagram S by chord slides,
// processing crossing pairs left to right.  Returns the full move sequence
// (each slide contributes its one or two Whitehead moves).
std::pair<MoveSequence, ChordDiagram> slide_normal_form(const ChordDiagram& c);

// The genus-g symplectic chord diagram S and its boundary word, the product
// of side-by-side commutator blocks.
Word symplectic_word(int genus);
FatGraph symplectic_graph(int genus);
ChordDiagram symplectic_diagram(int genus);
bool is_symplectic_diagram(const ChordDiagram& c);

// All trivalent bordered fatgraphs of the given genus, as canonical forms,
// found by closing the move graph from the symplectic diagram.
std::vector<FatGraph> enumerate_bordered(int genus);

// Chord-diagram text format: `core: N` then one `chord i: p q +` line per
// chord (attachment positions ascending; '+' when x_i departs at p).
std::string write_diagram(const ChordDiagram& c);
ChordDiagram read_diagram(const std::string& text);

}  // namespace ptolemy
