#include "ptolemy/marking.hpp"

#include <sstream>

namespace ptolemy {

namespace {

IntMat standard_j_local(int rank) {
  IntMat j(rank, rank);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) j(a, b) = 0;
  for (int i = 0; i + 1 < rank; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

}  // namespace

MarkingReport verify(const FatGraph& g, const Pi1Marking& m, VerifyLevel level) {
  MarkingReport rep;
  int n = g.dart_count();
  if (static_cast<int>(m.value.size()) != n + 1) {
    rep.fail("MarkingIncomplete");
    return rep;
  }
  for (Dart d = 1; d <= n; ++d)
    if (!(m.value[d] * m.value[g.edge_mate(d)]).empty())
      rep.fail("EdgeCondition: dart " + std::to_string(d));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = g.vertices()[v];
    if (cyc.size() == 1) continue;  // boundary class lives on the tail
    Word prod;
    for (Dart d : cyc) prod *= m.value[d];
    if (!prod.empty()) rep.fail("VertexCondition: vertex " + std::to_string(v));
  }
  if (!rep.ok || level == VerifyLevel::kEdgeVertex) return rep;

  // Surjectivity, checked on the abelianized values: the spanned lattice
  // must be all of Z^rank.
  IntMat rows(n, m.rank);
  for (Dart d = 1; d <= n; ++d) {
    auto e = m.value[d].exponent_sums(m.rank);
    for (int j = 0; j < m.rank; ++j) rows(d - 1, j) = static_cast<long>(e[j]);
  }
  if (!rows_span_full_lattice(rows)) rep.fail("NotSurjective");
  return rep;
}

MarkingReport verify(const FatGraph& g, const HMarking& m, VerifyLevel level) {
  MarkingReport rep;
  int n = g.dart_count();
  if (static_cast<int>(m.value.size()) != n + 1) {
    rep.fail("MarkingIncomplete");
    return rep;
  }
  for (Dart d = 1; d <= n; ++d)
    if (!is_zero(IntVec(m.value[d] + m.value[g.edge_mate(d)])))
      rep.fail("EdgeCondition: dart " + std::to_string(d));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = g.vertices()[v];
    if (cyc.size() == 1) continue;
    IntVec sum = int_zero(m.rank);
    for (Dart d : cyc) sum += m.value[d];
    if (!is_zero(sum)) rep.fail("VertexCondition: vertex " + std::to_string(v));
  }
  if (!rep.ok || level == VerifyLevel::kEdgeVertex) return rep;

  IntMat rows(n, m.rank);
  for (Dart d = 1; d <= n; ++d)
    for (int j = 0; j < m.rank; ++j) rows(d - 1, j) = m.value[d](j);
  if (!rows_span_full_lattice(rows)) rep.fail("NotSurjective");
  if (!rep.ok || level == VerifyLevel::kSurjective) return rep;

  IntMat j = standard_j_local(m.rank);
  BoundaryOrder bo = boundary_order(g);
  for (Dart x = 1; x <= n; ++x)
    for (Dart y = x + 1; y <= n; ++y) {
      mpz_class form = (m.value[x].transpose() * j * m.value[y])(0);
      if (form != skew_pairing(bo, g, x, y)) {
        rep.fail("HGeometricity: darts " + std::to_string(x) + "," + std::to_string(y));
        return rep;  // one witness is enough
      }
    }
  return rep;
}

namespace {

struct MoveEnds {
  Dart e, em, p, q, r, s;
};

MoveEnds ends(const FatGraph& g, Dart d) {
  MoveEnds f;
  f.e = d;
  f.em = g.edge_mate(d);
  f.r = g.rotation_next(f.e);
  f.s = g.rotation_next(f.r);
  f.p = g.rotation_next(f.em);
  f.q = g.rotation_next(f.p);
  return f;
}

}  // namespace

Pi1Marking transport(const FatGraph& g, const Pi1Marking& m, Dart d) {
  if (g.is_tail_edge(d)) throw Error("TailMove", "cannot transport across the tail");
  MoveEnds f = ends(g, d);
  Pi1Marking out = m;
  out.value[f.e] = m.value[f.q] * m.value[f.r];
  out.value[f.em] = out.value[f.e].inverse();
  return out;
}

HMarking transport(const FatGraph& g, const HMarking& m, Dart d) {
  if (g.is_tail_edge(d)) throw Error("TailMove", "cannot transport across the tail");
  MoveEnds f = ends(g, d);
  HMarking out = m;
  out.value[f.e] = m.value[f.q] + m.value[f.r];
  out.value[f.em] = -out.value[f.e];
  return out;
}

int skew_pairing(const BoundaryOrder& bo, const FatGraph& g, Dart x, Dart y) {
  Dart xm = g.edge_mate(x), ym = g.edge_mate(y);
  if (y == x || y == xm) return 0;
  int n = g.dart_count();
  auto rel = [&](Dart d) { return (bo.rank_of(d) - bo.rank_of(x) + n) % n; };
  int ry = rel(y), rxm = rel(xm), rym = rel(ym);
  if (ry < rxm && rxm < rym) return -1;
  if (rym < rxm && rxm < ry) return +1;
  return 0;
}

int skew_pairing(const FatGraph& g, Dart x, Dart y) {
  return skew_pairing(boundary_order(g), g, x, y);
}

Pi1Marking canonical_pi1_marking(const FatGraph& g) {
  GreedyTree t = greedy(g);
  Pi1Marking m;
  m.value = canonical_marking(g, t);
  m.rank = t.rank();
  return m;
}

HMarking abelianized(const Pi1Marking& m) {
  HMarking out;
  out.rank = m.rank;
  out.value.resize(m.value.size());
  for (std::size_t d = 1; d < m.value.size(); ++d) {
    auto e = m.value[d].exponent_sums(m.rank);
    IntVec v(m.rank);
    for (int j = 0; j < m.rank; ++j) v(j) = static_cast<long>(e[j]);
    out.value[d] = v;
  }
  if (!m.value.empty()) out.value[0] = int_zero(m.rank);
  return out;
}

std::string write_marking(const Pi1Marking& m) {
  std::ostringstream os;
  for (std::size_t d = 1; d < m.value.size(); ++d) os << d << ": " << m.value[d].str() << "\n";
  return os.str();
}

std::string write_marking(const HMarking& m) {
  std::ostringstream os;
  for (std::size_t d = 1; d < m.value.size(); ++d) {
    os << d << ':';
    for (int j = 0; j < m.rank; ++j) os << ' ' << m.value[d](j).get_str();
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::pair<int, std::string>> parse_dart_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw Error("ParseError", "marking line without ':'");
    out.emplace_back(std::stoi(line.substr(0, colon)), line.substr(colon + 1));
  }
  return out;
}

}  // namespace

Pi1Marking read_pi1_marking(const std::string& text, int dart_count, int rank) {
  Pi1Marking m;
  m.rank = rank;
  m.value.assign(dart_count + 1, Word());
  std::vector<char> seen(dart_count + 1, 0);
  for (auto& [d, rest] : parse_dart_lines(text)) {
    if (d < 1 || d > dart_count) throw Error("ParseError", "marking dart out of range");
    m.value[d] = Word::parse(rest);
    seen[d] = 1;
  }
  for (int d = 1; d <= dart_count; ++d)
    if (!seen[d]) throw Error("ParseError", "marking missing dart " + std::to_string(d));
  return m;
}

HMarking read_h_marking(const std::string& text, int dart_count, int rank) {
  HMarking m;
  m.rank = rank;
  m.value.assign(dart_count + 1, int_zero(rank));
  std::vector<char> seen(dart_count + 1, 0);
  for (auto& [d, rest] : parse_dart_lines(text)) {
    if (d < 1 || d > dart_count) throw Error("ParseError", "marking dart out of range");
    std::istringstream ls(rest);
    IntVec v(rank);
    std::string num;
    for (int j = 0; j < rank; ++j) {
      if (!(ls >> num)) throw Error("ParseError", "marking vector too short");
      v(j) = mpz_class(num);
    }
    m.value[d] = v;
    seen[d] = 1;
  }
  for (int d = 1; d <= dart_count; ++d)
    if (!seen[d]) throw Error("ParseError", "marking missing dart " + std::to_string(d));
  return m;
}

}  // namespace ptolemy
