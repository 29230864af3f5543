#include "ptolemy/chorddiag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ptolemy {

std::pair<int, int> ChordDiagram::chord_ends(int i) const {
  int dep = 0, arr = 0;
  for (std::size_t p = 1; p < letter.size(); ++p) {
    if (letter[p] == i) dep = static_cast<int>(p);
    if (letter[p] == -i) arr = static_cast<int>(p);
  }
  if (!dep || !arr) throw Error("IndexOutOfRange", "no chord with index " + std::to_string(i));
  return {dep, arr};
}

bool is_chord_diagram(const FatGraph& g) {
  try {
    as_chord_diagram(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ChordDiagram as_chord_diagram(const FatGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.bordered()) throw Error("NotBordered", "chord diagram must be bordered");
  GreedyTree t = greedy(g);

  ChordDiagram c(g);
  c.genus = rep.genus;
  int positions = 4 * rep.genus;
  c.inbound.assign(positions + 1, 0);
  c.letter.assign(positions + 1, 0);
  c.core_edge.assign(positions - 1, 0);

  // Walk the tree from the univalent vertex; it must be a path.
  Dart into_next = g.tail();  // tree dart pointing into the next core vertex
  int pos = 1;
  int core_vertices = g.vertex_count() - 1;
  for (int k = 1; k <= core_vertices; ++k) {
    int v = g.vertex_of(into_next);
    if (g.valence(v) != 3) throw Error("NotLinear", "core vertex is not trivalent");
    Dart a = into_next;                 // west slot: inbound from the parent
    Dart y = g.rotation_next(a);        // east slot in a planar diagram
    Dart z = g.rotation_next(y);        // north slot
    bool last = (k == core_vertices);
    if (!last) {
      // y must continue the tree eastward: y is the inbound dart of a tree
      // edge whose far endpoint is unvisited, i.e. mate(y) points on.
      if (!t.edge_in_tree(y) || t.edge_in_tree(z))
        throw Error("NotLinear", "greedy tree is not a line segment");
      if (t.generator_index[z] == 0 && t.generator_index[g.edge_mate(z)] == 0)
        throw Error("NotLinear", "north slot does not carry a chord");
      c.inbound[pos] = z;
      ++pos;
      into_next = g.edge_mate(y);
    } else {
      if (t.edge_in_tree(y) || t.edge_in_tree(z))
        throw Error("NotLinear", "extra tree edge at the rightmost vertex");
      c.inbound[pos + 1] = y;  // east slot is the bookkeeping position
      c.inbound[pos] = z;
      pos += 2;
    }
  }
  if (pos != positions + 1) throw Error("NotLinear", "attachment count mismatch");

  for (int p = 1; p <= positions; ++p) {
    Dart in = c.inbound[p];
    int idx = t.generator_index[in];
    c.letter[p] = idx ? -idx : t.generator_index[g.edge_mate(in)];
    if (c.letter[p] == 0) throw Error("NotLinear", "position dart is not a chord");
  }

  // Eastward core darts between consecutive positions.  Rebuild by walking
  // again: core edge k sits between position-vertices k and k+1.
  into_next = g.tail();
  for (int k = 1; k <= positions - 2; ++k) {
    int v = g.vertex_of(into_next);
    Dart y = g.rotation_next(into_next);
    (void)v;
    c.core_edge[k] = g.edge_mate(y);  // eastward dart of the next core edge
    into_next = g.edge_mate(y);
  }
  return c;
}

Word read_word(const ChordDiagram& c) {
  std::vector<int> letters(c.letter.begin() + 1, c.letter.end());
  Word w(letters);
  if (w.size() != letters.size()) throw Error("Internal", "chord-diagram word not reduced");
  return w;
}

std::pair<MoveSequence, ChordDiagram> branch_reduce(const FatGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.trivalent_bordered()) throw Error("NotTrivalent", "branch reduction needs a trivalent bordered graph");
  MoveSequence seq(g);
  for (;;) {
    const FatGraph& cur = seq.end();
    GreedyTree t = greedy(cur);
    // The initial segment: tree edges whose preferred dart precedes every
    // generator dart.
    int first_gen_rank = t.order.rank_of(t.generators.front());
    auto in_segment = [&](Dart d) {
      return t.edge_in_tree(d) && t.order.rank_of(t.order.preferred(d, cur)) < first_gen_rank;
    };
    // Count segment edges and find branch candidates: tree edges outside the
    // segment whose source vertex carries two segment edges.
    int segment_edges = 0;
    for (Dart d = 1; d <= cur.dart_count(); ++d)
      if (d < cur.edge_mate(d) && in_segment(d)) ++segment_edges;
    if (segment_edges == cur.vertex_count() - 1) break;  // tree is a path

    // Boundary-first tree edge outside the segment whose preferred dart
    // points away from a segment vertex.
    Dart best = 0;
    int best_rank = cur.dart_count();
    for (Dart d = 1; d <= cur.dart_count(); ++d) {
      if (!t.edge_in_tree(d) || in_segment(d)) continue;
      Dart pref = t.order.preferred(d, cur);
      if (pref != d) continue;  // consider each edge once, via its preferred dart
      int src = cur.vertex_of(cur.edge_mate(pref));
      bool touches_segment = false;
      for (Dart in : cur.vertices()[src])
        if (in != cur.edge_mate(pref) && in_segment(in)) touches_segment = true;
      if (touches_segment && t.order.rank_of(pref) < best_rank) {
        best = pref;
        best_rank = t.order.rank_of(pref);
      }
    }
    if (!best) throw Error("Internal", "branch reduction found no candidate");
    seq.push(best);
    if (seq.steps().back().type.kind > 2)
      throw Error("Internal", "branch reduction emitted a move of kind > 2");
  }
  return {std::move(seq), as_chord_diagram(seq.end())};
}

RealizationResult diagram_from_word(const Word& w) {
  RealizationResult res;
  int rank = w.max_index();
  int len = static_cast<int>(w.size());
  if (rank == 0 || len != 2 * rank || rank % 2)
    throw Error("LetterMultiplicity", "word must use letters 1..2g once per sign");
  std::vector<int> pos_count(rank + 1, 0), neg_count(rank + 1, 0);
  for (int l : w.letters()) (l > 0 ? pos_count[l] : neg_count[-l])++;
  for (int i = 1; i <= rank; ++i)
    if (pos_count[i] != 1 || neg_count[i] != 1)
      throw Error("LetterMultiplicity", "letter " + std::to_string(i) + " not exactly once per sign");

  // Build the attachment fatgraph.  Core edge k (0-based, 0 = tail) has
  // eastward dart 2k+1 and westward dart 2k+2; chord i has darts
  // base+2i-1 = x_i (arriving where letter -i sits) and base+2i.
  int positions = len;
  int core_edges = positions - 1;
  int base = 2 * core_edges;
  int n = base + 2 * rank;
  std::vector<Dart> mate(n), rot(n, 0);
  for (int k = 0; k < core_edges; ++k) {
    mate[2 * k] = 2 * k + 2;
    mate[2 * k + 1] = 2 * k + 1;
  }
  for (int i = 1; i <= rank; ++i) {
    mate[base + 2 * i - 2] = base + 2 * i;
    mate[base + 2 * i - 1] = base + 2 * i - 1;
  }
  auto chord_in = [&](int p) {  // inbound chord dart at position p
    int l = w.letters()[p - 1];
    return l > 0 ? base + 2 * l : base + 2 * (-l) - 1;
  };
  auto set_cycle = [&](std::initializer_list<Dart> cyc) {
    auto it = cyc.begin();
    Dart first = *it, prev = *it;
    for (++it; it != cyc.end(); ++it) {
      rot[prev - 1] = *it;
      prev = *it;
    }
    rot[prev - 1] = first;
  };
  set_cycle({2});  // univalent vertex
  for (int p = 1; p <= positions - 2; ++p) {
    // Vertex at position p: east = westward dart of core edge p, north =
    // chord, west = eastward dart of core edge p-1.
    set_cycle({2 * p + 2, chord_in(p), 2 * p - 1});
  }
  // Rightmost vertex carries positions 4g-1 (north) and 4g (east).
  set_cycle({chord_in(positions), chord_in(positions - 1), 2 * (positions - 2) + 1});

  FatGraph g(std::move(mate), std::move(rot), 1);

  // Count boundary cycles directly.
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (Dart d = 1; d <= n; ++d) {
    if (seen[d]) continue;
    ++cycles;
    Dart cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = g.boundary_next(cur);
    }
  }
  res.boundary_cycles = cycles;
  if (cycles != 1) return res;

  res.accepted = true;
  BoundaryOrder bo = boundary_order(g);
  for (int i = 1; i <= rank; ++i) {
    Dart xi = base + 2 * i - 1;
    if (bo.rank_of(g.edge_mate(xi)) < bo.rank_of(xi)) res.flipped.push_back(i);
  }
  res.diagram = as_chord_diagram(g);
  return res;
}

Word symplectic_word(int genus) {
  std::vector<int> letters;
  for (int i = genus; i >= 1; --i) {
    int a = 2 * i - 1, b = 2 * i;
    letters.insert(letters.end(), {b, -a, -b, a});
  }
  return Word(std::move(letters));
}

FatGraph symplectic_graph(int genus) {
  RealizationResult r = diagram_from_word(symplectic_word(genus));
  if (!r.accepted || !r.flipped.empty())
    throw Error("Internal", "symplectic word failed to realize");
  return r.diagram->graph;
}

ChordDiagram symplectic_diagram(int genus) { return as_chord_diagram(symplectic_graph(genus)); }

bool is_symplectic_diagram(const ChordDiagram& c) {
  return read_word(c) == symplectic_word(c.genus);
}

std::pair<MoveSequence, ChordDiagram> chord_slide(const ChordDiagram& c, int position,
                                                  SlideDir dir) {
  int last = 4 * c.genus;
  if (position < 1 || position > last) throw Error("IndexOutOfRange", "no such position");
  int neighbour = position + (dir == SlideDir::kRight ? 1 : -1);
  if (neighbour < 1 || neighbour > last)
    throw Error("NoNeighbor", "endpoint at the core extremity");
  Dart moving = c.inbound[position], over = c.inbound[neighbour];
  if (c.graph.edge_mate(moving) == over || moving == over)
    throw Error("Internal", "adjacent endpoints of one chord");

  MoveSequence seq(c.graph);
  int lo = std::min(position, neighbour);
  if (lo == last - 1) {
    // The two endpoints share the rightmost vertex; the separating core
    // edge is the bookkeeping half of the rightmost chord and its collapse
    // is an isotopy, so the slide is the single move on the slid-over chord.
    seq.push(over);
  } else {
    seq.push(c.core_edge[lo]);
    seq.push(over);
  }
  return {std::move(seq), as_chord_diagram(seq.end())};
}

// slide_normal_form is defined in normalform.cpp.

std::vector<FatGraph> enumerate_bordered(int genus) {
  std::vector<FatGraph> out;
  std::set<std::string> seen;
  std::vector<FatGraph> frontier{canonical_form(symplectic_graph(genus))};
  seen.insert(write_fat(frontier.front()));
  while (!frontier.empty()) {
    FatGraph g = std::move(frontier.back());
    frontier.pop_back();
    for (Dart d = 1; d <= g.dart_count(); ++d) {
      if (d >= g.edge_mate(d) || g.is_tail_edge(d)) continue;
      FatGraph h = canonical_form(whitehead_move(g, d));
      if (seen.insert(write_fat(h)).second) frontier.push_back(h);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string write_diagram(const ChordDiagram& c) {
  std::ostringstream os;
  os << "core: " << 4 * c.genus << "\n";
  for (int i = 1; i <= 2 * c.genus; ++i) {
    auto [dep, arr] = c.chord_ends(i);
    os << "chord " << i << ": " << std::min(dep, arr) << ' ' << std::max(dep, arr) << ' '
       << (dep < arr ? '+' : '-') << "\n";
  }
  return os.str();
}

ChordDiagram read_diagram(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int positions = 0, chords = 0;
  std::vector<int> letters;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "core:") {
      if (!(ls >> positions) || positions <= 0 || positions % 4)
        throw Error("ParseError", "bad core length");
      letters.assign(positions + 1, 0);
    } else if (key == "chord") {
      if (letters.empty()) throw Error("ParseError", "chord line before core line");
      std::string tag;
      int p, q;
      char sign;
      if (!(ls >> tag >> p >> q >> sign) || tag.back() != ':')
        throw Error("ParseError", "bad chord line");
      int idx = std::stoi(tag.substr(0, tag.size() - 1));
      if (p < 1 || q <= p || q > positions) throw Error("ParseError", "bad chord positions");
      int dep = (sign == '+') ? p : q, arr = (sign == '+') ? q : p;
      if (letters[dep] || letters[arr]) throw Error("ParseError", "position used twice");
      letters[dep] = idx;
      letters[arr] = -idx;
      ++chords;
    } else {
      throw Error("ParseError", "unknown key '" + key + "'");
    }
  }
  if (chords * 2 != positions) throw Error("ParseError", "chord count mismatch");
  RealizationResult r =
      diagram_from_word(Word(std::vector<int>(letters.begin() + 1, letters.end())));
  if (!r.accepted) throw Error("NotBordered", "diagram file has several boundary cycles");
  return *r.diagram;
}

}  // namespace ptolemy
