#pragma once

#include <string>
#include <vector>

#include "ptolemy/exactmat.hpp"
#include "ptolemy/fatgraph.hpp"
#include "ptolemy/nielsen.hpp"
#include "ptolemy/word.hpp"

namespace ptolemy {

// Abstract markings assign a group element to every dart subject to
//   (edge)    value(d) * value(mate d) = 1,
//   (vertex)  cyclic product over inbound darts = 1 at every vertex except
//             the univalent one, whose dart carries the boundary class.
// Values are stored against dart ids; the dart-persistence convention of
// Whitehead moves makes transport local to the move edge.
struct Pi1Marking {
  std::vector<Word> value;  // 1-based by dart; slot 0 unused
  int rank = 0;             // 2g, the letter alphabet size
};

struct HMarking {
  std::vector<IntVec> value;  // 1-based by dart; vectors of length 2g
  int rank = 0;
};

enum class VerifyLevel { kEdgeVertex, kSurjective, kHGeometric };

struct MarkingReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(const std::string& v) {
    ok = false;
    violations.push_back(v);
  }
};

MarkingReport verify(const FatGraph& g, const Pi1Marking& m, VerifyLevel level);
MarkingReport verify(const FatGraph& g, const HMarking& m, VerifyLevel level);

// Marking after a Whitehead move on the edge of d: untouched darts keep
// their values, the move edge's darts take the values forced by the new
// vertex conditions.
Pi1Marking transport(const FatGraph& g, const Pi1Marking& m, Dart d);
HMarking transport(const FatGraph& g, const HMarking& m, Dart d);

// Combinatorial skew pairing: -1 iff the boundary cycle meets the four darts
// in the cyclic pattern x, y, mate(x), mate(y); +1 for the mirrored pattern;
// 0 otherwise (including shared edges).
int skew_pairing(const FatGraph& g, Dart x, Dart y);
int skew_pairing(const BoundaryOrder& bo, const FatGraph& g, Dart x, Dart y);

// Marking whose i-th canonical generator carries letter i.
Pi1Marking canonical_pi1_marking(const FatGraph& g);
HMarking abelianized(const Pi1Marking& m);

// Marking file format: one line per dart, `d: <word>` or `d: <2g integers>`.
std::string write_marking(const Pi1Marking& m);
std::string write_marking(const HMarking& m);
Pi1Marking read_pi1_marking(const std::string& text, int dart_count, int rank);
HMarking read_h_marking(const std::string& text, int dart_count, int rank);

}  // namespace ptolemy
