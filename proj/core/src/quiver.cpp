#include "tautilt/quiver.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace tautilt {

int Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return int(i);
  throw ParseError("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return int(i);
  throw ParseError("unknown arrow '" + id + "'");
}

void Quiver::validate() const {
  if (vertices.empty()) throw ParseError("quiver needs at least one vertex");
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size())
    throw ParseError("duplicate vertex labels");
  std::set<std::string> ids;
  for (const auto& a : arrows) {
    if (a.src < 0 || a.src >= n() || a.tgt < 0 || a.tgt >= n())
      throw ParseError("arrow endpoint out of range");
    if (!ids.insert(a.id).second)
      throw ParseError("duplicate arrow id '" + a.id + "'");
  }
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices != b.vertices || a.arrows.size() != b.arrows.size())
    return false;
  for (size_t i = 0; i < a.arrows.size(); ++i) {
    if (a.arrows[i].id != b.arrows[i].id || a.arrows[i].src != b.arrows[i].src ||
        a.arrows[i].tgt != b.arrows[i].tgt)
      return false;
  }
  return true;
}

bool PathWord::composable(const Quiver& q) const {
  int at = source;
  for (int idx : arrows) {
    if (idx < 0 || idx >= int(q.arrows.size())) return false;
    if (q.arrows[idx].src != at) return false;
    at = q.arrows[idx].tgt;
  }
  return true;
}

PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b) {
  if (a.target(q) != b.source)
    throw InternalError("concatenating non-composable paths");
  PathWord p;
  p.source = a.source;
  p.arrows = a.arrows;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

PathWord reversed(const Quiver& q, const PathWord& p) {
  PathWord r;
  r.source = p.target(q);
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  return r;
}

std::string path_str(const Quiver& q, const PathWord& p) {
  if (p.arrows.empty()) return "e(" + q.vertices[p.source] + ")";
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrows[p.arrows[i]].id;
  }
  return s;
}

int Relation::min_length() const {
  int m = terms.front().second.length();
  for (const auto& [c, p] : terms) m = std::min(m, p.length());
  return m;
}

int Relation::max_length() const {
  int m = 0;
  for (const auto& [c, p] : terms) m = std::max(m, p.length());
  return m;
}

void Relation::validate(const Quiver& q) const {
  if (terms.empty()) throw MalformedRelation("relation with no terms");
  int src = terms.front().second.source;
  int tgt = terms.front().second.target(q);
  for (const auto& [c, p] : terms) {
    if (is_zero(c)) throw MalformedRelation("zero coefficient");
    if (!p.composable(q)) throw MalformedRelation("non-composable path");
    if (p.length() < 2)
      throw MalformedRelation("path of length < 2 in relation");
    if (p.source != src || p.target(q) != tgt)
      throw MalformedRelation("paths in relation are not parallel");
  }
}

void AlgebraPresentation::validate() const {
  quiver.validate();
  if (length_cap < 2) throw ParseError("lengthcap must be >= 2");
  if (field.kind == FieldDesc::Kind::Prime) {
    unsigned p = field.p;
    if (p < 2) throw ParseError("prime field modulus must be >= 2");
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ParseError("field modulus is not prime");
  }
  for (const auto& r : relations) r.validate(quiver);
}

std::string AlgebraPresentation::str() const {
  std::ostringstream os;
  os << "field " << field.str() << "\n";
  os << "lengthcap " << length_cap << "\n";
  for (const auto& v : quiver.vertices) os << "vertex " << v << "\n";
  for (const auto& a : quiver.arrows)
    os << "arrow " << a.id << ": " << quiver.vertices[a.src] << " -> "
       << quiver.vertices[a.tgt] << "\n";
  for (const auto& r : relations) {
    os << "relation ";
    bool first = true;
    for (const auto& [c, p] : r.terms) {
      Rat cc = c;
      if (!first) {
        os << (sgn(cc) < 0 ? " - " : " + ");
        if (sgn(cc) < 0) cc = -cc;
      }
      os << rat_str(cc) << "*" << path_str(quiver, p);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  return a.str() == b.str();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

PathWord parse_path(const Quiver& q, const std::string& text) {
  PathWord p;
  std::string cur;
  std::vector<std::string> parts;
  for (char ch : text) {
    if (ch == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.empty()) throw ParseError("empty path");
  for (const auto& id : parts) p.arrows.push_back(q.arrow_index(id));
  p.source = q.arrows[p.arrows.front()].src;
  if (!p.composable(q)) throw ParseError("non-composable path '" + text + "'");
  return p;
}

Relation parse_relation(const Quiver& q, const std::vector<std::string>& tk) {
  // relation <coef>*<path> [+|- <coef>*<path> ...]
  Relation rel;
  int sign = 1;
  for (size_t i = 1; i < tk.size(); ++i) {
    if (tk[i] == "+") { sign = 1; continue; }
    if (tk[i] == "-") { sign = -1; continue; }
    auto star = tk[i].find('*');
    if (star == std::string::npos)
      throw ParseError("relation term must look like coef*path");
    Rat c = rat_parse(tk[i].substr(0, star)) * sign;
    PathWord p = parse_path(q, tk[i].substr(star + 1));
    rel.terms.emplace_back(c, p);
    sign = 1;
  }
  if (rel.terms.empty()) throw ParseError("relation with no terms");
  return rel;
}

}  // namespace

Relation parse_relation_text(const Quiver& q, const std::string& text) {
  auto tk = tokens("relation " + text);
  return parse_relation(q, tk);
}

AlgebraPresentation parse_presentation(std::istream& in) {
  AlgebraPresentation pres;
  pres.length_cap = 12;
  std::vector<std::vector<std::string>> relation_lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto tk = tokens(line);
    if (tk.empty()) continue;
    const std::string& head = tk[0];
    if (head == "vertex") {
      if (tk.size() != 2) throw ParseError("vertex expects one label");
      pres.quiver.vertices.push_back(tk[1]);
    } else if (head == "arrow") {
      // arrow <id>: <src> -> <tgt>
      if (tk.size() != 5 || tk[3] != "->")
        throw ParseError("arrow expects '<id>: <src> -> <tgt>'");
      std::string id = tk[1];
      if (id.empty() || id.back() != ':')
        throw ParseError("arrow id must be followed by ':'");
      id.pop_back();
      Arrow a;
      a.id = id;
      a.src = pres.quiver.vertex_index(tk[2]);
      a.tgt = pres.quiver.vertex_index(tk[4]);
      pres.quiver.arrows.push_back(a);
    } else if (head == "relation") {
      relation_lines.push_back(tk);
    } else if (head == "field") {
      if (tk.size() != 2) throw ParseError("field expects one token");
      if (tk[1] == "Q") {
        pres.field = FieldDesc::rationals();
      } else if (tk[1].size() > 1 && tk[1][0] == 'F') {
        pres.field = FieldDesc::prime(unsigned(std::stoul(tk[1].substr(1))));
      } else {
        throw ParseError("field must be Q or F<p>");
      }
    } else if (head == "lengthcap") {
      if (tk.size() != 2) throw ParseError("lengthcap expects one integer");
      pres.length_cap = std::stoi(tk[1]);
    } else {
      throw ParseError("unknown directive '" + head + "'");
    }
  }
  for (const auto& tk : relation_lines)
    pres.relations.push_back(parse_relation(pres.quiver, tk));
  pres.validate();
  return pres;
}

AlgebraPresentation parse_presentation_string(const std::string& text) {
  std::istringstream is(text);
  return parse_presentation(is);
}

namespace {

// Drops every relation term whose path uses a removed arrow (by old index);
// relations that lose all terms vanish. Surviving paths are re-indexed.
std::vector<Relation> restrict_relations(
    const Quiver& old_q, const std::vector<Relation>& rels,
    const std::vector<int>& arrow_old2new, const std::vector<int>& vert_old2new) {
  std::vector<Relation> out;
  for (const auto& r : rels) {
    Relation nr;
    for (const auto& [c, p] : r.terms) {
      bool alive = vert_old2new[p.source] >= 0;
      PathWord np;
      for (int a : p.arrows) {
        if (arrow_old2new[a] < 0) { alive = false; break; }
        np.arrows.push_back(arrow_old2new[a]);
      }
      if (!alive) continue;
      np.source = vert_old2new[p.source];
      nr.terms.emplace_back(c, np);
    }
    if (nr.terms.empty()) continue;
    for (const auto& [c, p] : nr.terms)
      if (p.length() < 2)
        throw MalformedRelation("restricted relation has a path of length < 2");
    out.push_back(nr);
  }
  return out;
}

}  // namespace

QuotientMap quotient_by_arrow_kill(const AlgebraPresentation& a,
                                   const std::vector<std::string>& arrow_ids) {
  a.validate();
  std::set<int> killed;
  for (const auto& id : arrow_ids) killed.insert(a.quiver.arrow_index(id));
  QuotientMap qm;
  qm.base = a;
  qm.killed_arrows = arrow_ids;

  AlgebraPresentation b;
  b.field = a.field;
  b.length_cap = a.length_cap;
  b.quiver.vertices = a.quiver.vertices;
  std::vector<int> arrow_old2new(a.quiver.arrows.size(), -1);
  for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    if (killed.count(int(i))) continue;
    arrow_old2new[i] = int(b.quiver.arrows.size());
    b.quiver.arrows.push_back(a.quiver.arrows[i]);
  }
  std::vector<int> vid(a.quiver.n());
  for (int i = 0; i < a.quiver.n(); ++i) vid[i] = i;
  b.relations = restrict_relations(a.quiver, a.relations, arrow_old2new, vid);
  b.killed_arrows = a.killed_arrows;
  for (const auto& id : arrow_ids) b.killed_arrows.push_back(id);
  b.validate();
  qm.quotient = b;
  return qm;
}

QuotientMap quotient_by_relations(const AlgebraPresentation& a,
                                  const std::vector<Relation>& extra) {
  a.validate();
  // split degenerate single-arrow terms (arrow kills) from proper relations
  std::vector<std::string> kills;
  std::vector<Relation> proper;
  for (const auto& r : extra) {
    if (r.terms.size() == 1 && r.terms.front().second.length() == 1) {
      kills.push_back(a.quiver.arrows[r.terms.front().second.arrows[0]].id);
      continue;
    }
    if (r.terms.empty()) throw MalformedRelation("relation with no terms");
    r.validate(a.quiver);
    proper.push_back(r);
  }
  QuotientMap qm;
  if (!kills.empty()) {
    qm = quotient_by_arrow_kill(a, kills);
    // proper relations still refer to base arrow indices; re-map them
    std::vector<int> arrow_old2new(a.quiver.arrows.size(), -1);
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
      for (size_t j = 0; j < qm.quotient.quiver.arrows.size(); ++j)
        if (qm.quotient.quiver.arrows[j].id == a.quiver.arrows[i].id)
          arrow_old2new[i] = int(j);
    }
    std::vector<int> vid(a.quiver.n());
    for (int i = 0; i < a.quiver.n(); ++i) vid[i] = i;
    auto mapped = restrict_relations(a.quiver, proper, arrow_old2new, vid);
    for (auto& r : mapped) qm.quotient.relations.push_back(r);
  } else {
    qm.base = a;
    qm.quotient = a;
    for (const auto& r : proper) qm.quotient.relations.push_back(r);
  }
  qm.extra_relations = proper;
  qm.quotient.validate();
  return qm;
}

QuotientMap quotient_by_idempotent(const AlgebraPresentation& a,
                                   const std::set<int>& dropped) {
  a.validate();
  if (dropped.empty() || int(dropped.size()) >= a.quiver.n())
    throw EmptyOrFullVertexSet("dropped set must be nonempty and proper");
  for (int v : dropped)
    if (v < 0 || v >= a.quiver.n())
      throw EmptyOrFullVertexSet("vertex index out of range");

  QuotientMap qm;
  qm.base = a;
  qm.dropped_vertices.assign(dropped.begin(), dropped.end());

  AlgebraPresentation b;
  b.field = a.field;
  b.length_cap = a.length_cap;
  std::vector<int> vert_old2new(a.quiver.n(), -1);
  for (int i = 0; i < a.quiver.n(); ++i) {
    if (dropped.count(i)) continue;
    vert_old2new[i] = int(b.quiver.vertices.size());
    b.quiver.vertices.push_back(a.quiver.vertices[i]);
  }
  std::vector<int> arrow_old2new(a.quiver.arrows.size(), -1);
  for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const Arrow& ar = a.quiver.arrows[i];
    if (vert_old2new[ar.src] < 0 || vert_old2new[ar.tgt] < 0) continue;
    arrow_old2new[i] = int(b.quiver.arrows.size());
    b.quiver.arrows.push_back(
        Arrow{ar.id, vert_old2new[ar.src], vert_old2new[ar.tgt]});
  }
  b.relations =
      restrict_relations(a.quiver, a.relations, arrow_old2new, vert_old2new);
  b.validate();
  qm.quotient = b;
  return qm;
}

AlgebraPresentation opposite(const AlgebraPresentation& a) {
  AlgebraPresentation op;
  op.field = a.field;
  op.length_cap = a.length_cap;
  op.killed_arrows = a.killed_arrows;
  op.quiver.vertices = a.quiver.vertices;
  for (const auto& ar : a.quiver.arrows)
    op.quiver.arrows.push_back(Arrow{ar.id, ar.tgt, ar.src});
  for (const auto& r : a.relations) {
    Relation nr;
    for (const auto& [c, p] : r.terms) {
      PathWord rp;
      rp.source = p.target(a.quiver);
      rp.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      nr.terms.emplace_back(c, rp);
    }
    op.relations.push_back(nr);
  }
  op.validate();
  return op;
}

}  // namespace tautilt
