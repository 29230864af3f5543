#include "ptolemy/fatgraph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace ptolemy {

FatGraph::FatGraph(std::vector<Dart> edge_mate, std::vector<Dart> rotation_next, Dart tail)
    : tail_(tail) {
  int n = static_cast<int>(edge_mate.size());
  if (static_cast<int>(rotation_next.size()) != n)
    throw std::invalid_argument("FatGraph: involution/rotation size mismatch");
  mate_.resize(n + 1);
  rot_.resize(n + 1);
  for (int d = 1; d <= n; ++d) {
    mate_[d] = edge_mate[d - 1];
    rot_[d] = rotation_next[d - 1];
    if (mate_[d] < 1 || mate_[d] > n || rot_[d] < 1 || rot_[d] > n)
      throw std::invalid_argument("FatGraph: dart id out of range");
  }
  if (tail_ < 1 || tail_ > n) throw std::invalid_argument("FatGraph: bad tail dart");

  // Decompose the rotation into vertex cycles.
  vertex_of_.assign(n + 1, -1);
  for (int d = 1; d <= n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    std::vector<Dart> cycle;
    int v = static_cast<int>(vertex_cycles_.size());
    Dart cur = d;
    while (vertex_of_[cur] < 0) {
      vertex_of_[cur] = v;
      cycle.push_back(cur);
      cur = rot_[cur];
    }
    if (cur != d) throw std::invalid_argument("FatGraph: rotation is not a permutation");
    vertex_cycles_.push_back(std::move(cycle));
  }
}

ValidationReport validate(const FatGraph& g) {
  ValidationReport rep;
  int n = g.dart_count();
  bool ok = true;

  for (Dart d = 1; d <= n; ++d) {
    if (g.edge_mate(d) == d) {
      rep.issues.push_back("InvolutionFixedPoint: dart " + std::to_string(d));
      ok = false;
    } else if (g.edge_mate(g.edge_mate(d)) != d) {
      rep.issues.push_back("InvolutionNotOrder2: dart " + std::to_string(d));
      ok = false;
    }
  }
  if (!ok) {
    rep.structurally_ok = false;
    return rep;
  }

  // Exactly one univalent vertex, and it must be the head of the tail's mate.
  int univalent = 0;
  bool bivalent = false;
  rep.trivalent = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int k = g.valence(v);
    if (k == 1) ++univalent;
    if (k == 2) bivalent = true;
    if (k != 1 && k != 3) rep.trivalent = false;
  }
  if (univalent != 1) {
    rep.issues.push_back("MissingTail: univalent vertex count is " + std::to_string(univalent));
    ok = false;
  } else if (g.valence(g.vertex_of(g.edge_mate(g.tail()))) != 1) {
    rep.issues.push_back("MissingTail: tail dart does not point away from the univalent vertex");
    ok = false;
  }
  if (bivalent) rep.issues.push_back("BivalentVertex");

  // Connectivity over the union of involution and rotation orbits.
  if (ok && n > 0) {
    std::vector<char> seen(n + 1, 0);
    std::vector<Dart> stack{1};
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      ++count;
      for (Dart e : {g.edge_mate(d), g.rotation_next(d)})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    if (count != n) {
      rep.issues.push_back("Disconnected");
      ok = false;
    }
  }

  rep.structurally_ok = ok;
  if (!ok) return rep;

  // Count boundary cycles (orbits of boundary_next).
  std::vector<char> seen(n + 1, 0);
  for (Dart d = 1; d <= n; ++d) {
    if (seen[d]) continue;
    ++rep.boundary_cycles;
    Dart cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = g.boundary_next(cur);
    }
  }
  if (rep.boundary_cycles == 1) {
    // chi = V - E = 2 - 2g - n with n = 1.
    int chi = g.vertex_count() - g.edge_count();
    rep.genus = (1 - chi) / 2;
    if ((1 - chi) % 2 != 0 || rep.genus < 1) {
      rep.issues.push_back("BadGenus");
      rep.structurally_ok = false;
    }
  } else {
    rep.issues.push_back("NotBordered: boundary_cycles = " + std::to_string(rep.boundary_cycles));
  }
  return rep;
}

BoundaryOrder boundary_order(const FatGraph& g) {
  int n = g.dart_count();
  BoundaryOrder bo;
  bo.sequence.reserve(n);
  bo.rank.assign(n + 1, -1);
  Dart cur = g.tail();
  for (int i = 0; i < n; ++i) {
    if (bo.rank[cur] >= 0) throw Error("NotBordered", "boundary cycle does not cover all darts");
    bo.rank[cur] = i;
    bo.sequence.push_back(cur);
    cur = g.boundary_next(cur);
  }
  if (cur != g.tail()) throw Error("NotBordered", "boundary traversal failed to close");
  return bo;
}

namespace {

// Local frame around a move edge: e points to Y = (e, r, s), its mate points
// to X = (mate, p, q).  All six darts are distinct for a legal move.
struct MoveFrame {
  Dart e, em, p, q, r, s;
};

MoveFrame move_frame(const FatGraph& g, Dart d) {
  if (g.is_tail_edge(d)) throw Error("TailMove", "Whitehead move on the tail edge");
  MoveFrame f;
  f.e = d;
  f.em = g.edge_mate(d);
  int y = g.vertex_of(f.e), x = g.vertex_of(f.em);
  if (g.valence(x) != 3 || g.valence(y) != 3)
    throw Error("NotTrivalent", "move endpoints must be trivalent");
  if (x == y) throw Error("NotBordered", "move edge is a loop");
  f.r = g.rotation_next(f.e);
  f.s = g.rotation_next(f.r);
  f.p = g.rotation_next(f.em);
  f.q = g.rotation_next(f.p);
  return f;
}

}  // namespace

FatGraph whitehead_move(const FatGraph& g, Dart d) {
  MoveFrame f = move_frame(g, d);
  int n = g.dart_count();
  std::vector<Dart> mate(n), rot(n);
  for (Dart k = 1; k <= n; ++k) {
    mate[k - 1] = g.edge_mate(k);
    rot[k - 1] = g.rotation_next(k);
  }
  // New vertices X' = (em, q, r) and Y' = (e, s, p).
  rot[f.em - 1] = f.q;
  rot[f.q - 1] = f.r;
  rot[f.r - 1] = f.em;
  rot[f.e - 1] = f.s;
  rot[f.s - 1] = f.p;
  rot[f.p - 1] = f.e;
  return FatGraph(std::move(mate), std::move(rot), g.tail());
}

MoveType classify_move(const FatGraph& g, Dart d) {
  MoveFrame f = move_frame(g, d);
  BoundaryOrder bo = boundary_order(g);

  // The four sectors surrounding the edge are crossed while traversing the
  // darts p (corner between the X-side outer edges), e (alongside the edge),
  // r (corner between the Y-side outer edges) and mate(e) (other side).
  std::array<std::pair<int, char>, 4> cross = {{{bo.rank_of(f.p), 'P'},
                                                {bo.rank_of(f.e), 'Q'},
                                                {bo.rank_of(f.r), 'R'},
                                                {bo.rank_of(f.em), 'S'}}};
  std::sort(cross.begin(), cross.end());
  std::string pat;
  for (auto& [rk, c] : cross) pat += c;

  static const std::map<std::string, MoveType> kTable = {
      {"PQRS", {1, true}},  {"RSPQ", {1, true}},  {"QRSP", {1, false}}, {"SPQR", {1, false}},
      {"PQSR", {2, true}},  {"RSQP", {2, true}},  {"QRPS", {2, false}}, {"SPRQ", {2, false}},
      {"QPSR", {3, true}},  {"SRQP", {3, true}},  {"PSRQ", {3, false}}, {"RQPS", {3, false}},
      {"QPRS", {4, true}},  {"SRPQ", {4, true}},  {"PSQR", {4, false}}, {"RQSP", {4, false}},
      {"QSRP", {5, true}},  {"SQPR", {5, true}},  {"PRQS", {5, false}}, {"RPSQ", {5, false}},
      {"QSPR", {6, true}},  {"SQRP", {6, true}},  {"PRSQ", {6, false}}, {"RPQS", {6, false}},
  };
  return kTable.at(pat);
}

void MoveSequence::push(Dart edge_dart) {
  const FatGraph& cur = end();
  MoveStep step{edge_dart, classify_move(cur, edge_dart), whitehead_move(cur, edge_dart)};
  steps_.push_back(std::move(step));
}

void MoveSequence::append(const MoveSequence& tail) {
  if (!(tail.start() == end())) throw Error("NonComposable", "sequence endpoints do not match");
  for (const MoveStep& s : tail.steps_) push(s.edge);
}

MoveSequence MoveSequence::reversed() const {
  MoveSequence out(end());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.push(it->edge);
  return out;
}

FatGraph canonical_form(const FatGraph& g) {
  BoundaryOrder bo = boundary_order(g);
  int n = g.dart_count();
  std::vector<Dart> newid(n + 1);
  for (Dart d = 1; d <= n; ++d) newid[d] = bo.rank[d] + 1;
  std::vector<Dart> mate(n), rot(n);
  for (Dart d = 1; d <= n; ++d) {
    mate[newid[d] - 1] = newid[g.edge_mate(d)];
    rot[newid[d] - 1] = newid[g.rotation_next(d)];
  }
  return FatGraph(std::move(mate), std::move(rot), newid[g.tail()]);
}

std::string canonical_encoding(const FatGraph& g) { return write_fat(canonical_form(g)); }

std::string write_fat(const FatGraph& g) {
  std::ostringstream os;
  os << "darts " << g.dart_count() << "\n";
  os << "tail " << g.tail() << "\n";
  std::vector<std::vector<Dart>> verts = g.vertices();
  for (auto& cyc : verts) {
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
  }
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& cyc : verts) {
    os << "v:";
    for (Dart d : cyc) os << ' ' << d;
    os << "\n";
  }
  for (Dart d = 1; d <= g.dart_count(); ++d)
    if (d < g.edge_mate(d)) os << "e: " << d << ' ' << g.edge_mate(d) << "\n";
  return os.str();
}

FatGraph read_fat(std::istream& in) {
  int n = -1;
  Dart tail = 0;
  std::vector<Dart> mate, rot;
  std::vector<char> have_rot;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("ParseError", "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;  // blank line
    if (key == "darts") {
      if (!(ls >> n) || n <= 0 || n % 2) fail("bad dart count");
      mate.assign(n, 0);
      rot.assign(n, 0);
      have_rot.assign(n + 1, 0);
    } else if (key == "tail") {
      if (!(ls >> tail)) fail("bad tail");
    } else if (key == "v:") {
      if (n < 0) fail("vertex line before darts line");
      std::vector<Dart> cyc;
      Dart d;
      while (ls >> d) {
        if (d < 1 || d > n) fail("dart id out of range");
        cyc.push_back(d);
      }
      if (cyc.empty()) fail("empty vertex");
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Dart a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (have_rot[a]) fail("dart " + std::to_string(a) + " listed twice");
        have_rot[a] = 1;
        rot[a - 1] = b;
      }
    } else if (key == "e:") {
      if (n < 0) fail("edge line before darts line");
      Dart a, b;
      if (!(ls >> a >> b) || a < 1 || a > n || b < 1 || b > n || a == b) fail("bad edge");
      mate[a - 1] = b;
      mate[b - 1] = a;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (n < 0) throw Error("ParseError", "missing darts line");
  for (int d = 1; d <= n; ++d) {
    if (!have_rot[d]) throw Error("ParseError", "dart " + std::to_string(d) + " missing from vertices");
    if (mate[d - 1] == 0) throw Error("ParseError", "dart " + std::to_string(d) + " missing from edges");
  }
  if (tail < 1 || tail > n) throw Error("ParseError", "missing or bad tail line");
  return FatGraph(std::move(mate), std::move(rot), tail);
}

FatGraph read_fat_string(const std::string& text) {
  std::istringstream is(text);
  return read_fat(is);
}

FatGraph read_fat_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("ParseError", "cannot open " + path);
  return read_fat(f);
}

}  // namespace ptolemy
