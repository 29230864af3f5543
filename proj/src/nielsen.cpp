#include "ptolemy/nielsen.hpp"

#include <algorithm>

namespace ptolemy {

GreedyTree greedy(const FatGraph& g) {
  GreedyTree t;
  t.order = boundary_order(g);
  int n = g.dart_count();
  t.in_tree.assign(n + 1, 0);
  t.generator_index.assign(n + 1, 0);

  // First-entered dart per vertex.
  std::vector<Dart> first_in(g.vertex_count(), 0);
  for (Dart d : t.order.sequence) {
    int v = g.vertex_of(d);
    if (!first_in[v]) first_in[v] = d;
  }
  for (Dart d = 1; d <= n; ++d) {
    Dart pref = t.order.preferred(d, g);
    bool in = (first_in[g.vertex_of(pref)] == pref);
    if (in) t.in_tree[d] = 1;
  }
  for (Dart d : t.order.sequence) {
    if (t.in_tree[d]) continue;
    Dart m = g.edge_mate(d);
    if (t.order.rank_of(d) < t.order.rank_of(m)) {  // preferred orientation
      t.generators.push_back(d);
      t.generator_index[d] = static_cast<int>(t.generators.size());
    }
  }
  return t;
}

std::vector<Word> canonical_marking(const FatGraph& g, const GreedyTree& t) {
  int n = g.dart_count();
  std::vector<Word> value(n + 1);
  std::vector<char> known(n + 1, 0);
  for (Dart d : t.generators) {
    value[d] = Word::letter(t.generator_index[d]);
    value[g.edge_mate(d)] = value[d].inverse();
    known[d] = known[g.edge_mate(d)] = 1;
  }

  // Peel vertex conditions: any trivalent-or-higher vertex with exactly one
  // unknown inbound dart determines it.  The univalent vertex carries no
  // condition; the tail edge is solved at its inner endpoint.
  int solved = 0, target = 0;
  for (Dart d = 1; d <= n; ++d)
    if (!known[d]) ++target;
  target /= 2;

  bool progress = true;
  while (solved < target && progress) {
    progress = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& cyc = g.vertices()[v];
      if (cyc.size() == 1) continue;
      int unknowns = 0;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!known[cyc[i]]) {
          ++unknowns;
          pos = i;
        }
      if (unknowns != 1) continue;
      // value[cyc[pos]] = (product of the rest, cyclically after pos)^{-1}
      Word prod;
      for (std::size_t k = 1; k < cyc.size(); ++k) prod *= value[cyc[(pos + k) % cyc.size()]];
      Dart d = cyc[pos];
      value[d] = prod.inverse();
      value[g.edge_mate(d)] = prod;
      known[d] = known[g.edge_mate(d)] = 1;
      ++solved;
      progress = true;
    }
  }
  if (solved < target) throw Error("Internal", "canonical_marking failed to solve tree values");
  return value;
}

Word express(const FatGraph& g, const GreedyTree& t, Dart d) {
  return canonical_marking(g, t)[d];
}

Word boundary_word(const FatGraph& g) {
  GreedyTree t = greedy(g);
  return canonical_marking(g, t)[g.tail()];
}

namespace {

// Transport of the canonical marking across a move: the four outer darts
// keep their values; the move edge's darts take the values forced by the
// vertex conditions of the new vertices X' = (em, q, r), Y' = (e, s, p).
std::vector<Word> transport_words(const FatGraph& g, const std::vector<Word>& val, Dart d) {
  Dart e = d, em = g.edge_mate(d);
  Dart r = g.rotation_next(e), p = g.rotation_next(em), q = g.rotation_next(p);
  std::vector<Word> out = val;
  out[e] = val[q] * val[r];
  out[em] = out[e].inverse();
  return out;
}

}  // namespace

EndoMap nielsen_of_move(const FatGraph& g, Dart d) {
  GreedyTree t = greedy(g);
  std::vector<Word> val = transport_words(g, canonical_marking(g, t), d);
  FatGraph moved = whitehead_move(g, d);
  GreedyTree t2 = greedy(moved);
  EndoMap out;
  out.images.reserve(t2.generators.size());
  for (Dart gen : t2.generators) out.images.push_back(val[gen]);
  return out;
}

std::optional<EndoMap> nielsen_closed_form(const FatGraph& g, Dart d) {
  MoveType type = classify_move(g, d);
  GreedyTree t = greedy(g);
  int rank = t.rank();
  if (type.kind <= 2) return EndoMap::identity(rank);
  if (!type.forward) return std::nullopt;

  // Orient the frame so that the sector pattern starts at the Q or S label
  // associated with dart e: the table pairs each case with its relabelled
  // twin under e <-> mate(e), p <-> r, q <-> s.
  Dart e = d, em = g.edge_mate(d);
  Dart r = g.rotation_next(e), s = g.rotation_next(r);
  Dart p = g.rotation_next(em), q = g.rotation_next(p);
  FatGraph moved = whitehead_move(g, d);
  BoundaryOrder bo2 = boundary_order(moved);
  bool e_preferred_after = bo2.rank_of(e) < bo2.rank_of(em);

  std::vector<Word> val = canonical_marking(g, t);
  EndoMap out = EndoMap::identity(rank);

  if (type.kind == 3 || type.kind == 4) {
    // New edge value b~c on its preferred dart; c is the displaced generator.
    Dart b_dart = e_preferred_after ? q : s;   // value enters directly
    Dart c_dart = e_preferred_after ? r : p;   // preferred dart of a generator
    int i = t.generator_index[c_dart];
    if (i == 0) throw Error("Internal", "case 3/4 frame: c is not a canonical generator");
    if (type.kind == 3 && val[b_dart].size() != 1)
      throw Error("Internal", "case 3 frame: b is not a single letter");
    out.images[i - 1] = val[b_dart] * Word::letter(i);
    return out;
  }

  // Kinds 5 and 6: the displaced generator is x_i, the move edge enters the
  // new generator list at a derived index j, and the generators in between
  // shift down by one.
  Dart disp, c_dart;
  bool c_on_left;  // kind 5: new value c * inv(x_i); kind 6: x_i * c
  if (type.kind == 5) {
    disp = e_preferred_after ? s : q;  // preferred dart of x_i; enters inverted
    c_dart = e_preferred_after ? g.edge_mate(p) : g.edge_mate(r);
    c_on_left = true;
  } else {
    disp = e_preferred_after ? q : s;  // preferred dart of x_i; enters directly
    c_dart = e_preferred_after ? r : p;
    c_on_left = false;
  }
  int i = t.generator_index[disp];
  if (i == 0) throw Error("Internal", "case 5/6 frame: displaced edge is not a generator");

  GreedyTree t2 = greedy(moved);
  int j = t2.generator_index[e] ? t2.generator_index[e] : t2.generator_index[em];
  if (j == 0) throw Error("Internal", "case 5/6 frame: move edge is not a generator after the move");
  if (j < i) throw Error("Internal", "case 5/6 frame: derived index precedes the displaced one");

  Word newval = c_on_left ? val[c_dart] * Word::letter(-i) : Word::letter(i) * val[c_dart];
  for (int k = i; k < j; ++k) out.images[k - 1] = Word::letter(k + 1);
  out.images[j - 1] = newval;
  return out;
}

EndoMap nielsen_of_sequence(const MoveSequence& s) {
  GreedyTree t = greedy(s.start());
  EndoMap acc = EndoMap::identity(t.rank());
  const FatGraph* cur = &s.start();
  for (const MoveStep& step : s.steps()) {
    acc = compose_endos(acc, nielsen_of_move(*cur, step.edge));
    cur = &step.result;
  }
  return acc;
}

}  // namespace ptolemy
