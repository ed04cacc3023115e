#ifndef TAUTILT_QUIVER_HPP
#define TAUTILT_QUIVER_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "tautilt/errors.hpp"
#include "tautilt/field.hpp"

namespace tautilt {

struct Arrow {
  std::string id;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;  // distinct labels; index = internal id
  std::vector<Arrow> arrows;

  int n() const { return int(vertices.size()); }
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& id) const;
  void validate() const;

  friend bool operator==(const Quiver& a, const Quiver& b);
};

// A path in the quiver: either the trivial path at `source` (no arrows) or a
// composable arrow sequence read left to right ("first then second").
struct PathWord {
  int source = 0;
  std::vector<int> arrows;

  int length() const { return int(arrows.size()); }
  int target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].tgt;
  }
  bool composable(const Quiver& q) const;

  friend bool operator==(const PathWord& a, const PathWord& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
  friend bool operator<(const PathWord& a, const PathWord& b) {
    if (a.arrows.size() != b.arrows.size())
      return a.arrows.size() < b.arrows.size();
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b);
PathWord reversed(const Quiver& q, const PathWord& p);
std::string path_str(const Quiver& q, const PathWord& p);

// Linear combination of parallel paths, each of length >= 2 (admissibility).
struct Relation {
  std::vector<std::pair<Rat, PathWord>> terms;

  int source() const { return terms.front().second.source; }
  int target(const Quiver& q) const { return terms.front().second.target(q); }
  int min_length() const;
  int max_length() const;
  void validate(const Quiver& q) const;
};

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<std::string> killed_arrows;  // arrows removed from an ancestor
  FieldDesc field = FieldDesc::rationals();
  int length_cap = 12;

  void validate() const;
  std::string str() const;

  friend bool operator==(const AlgebraPresentation& a,
                         const AlgebraPresentation& b);
};

AlgebraPresentation parse_presentation(std::istream& in);
AlgebraPresentation parse_presentation_string(const std::string& text);

// Parses "coef*path [+|- coef*path ...]" over the given quiver, the same
// syntax as relation lines in the algebra file format.
Relation parse_relation_text(const Quiver& q, const std::string& text);

// Records how a quotient presentation was derived, so modules can be moved
// along the projection later.
struct QuotientMap {
  AlgebraPresentation base;
  AlgebraPresentation quotient;
  std::vector<Relation> extra_relations;
  std::vector<std::string> killed_arrows;
  std::vector<int> dropped_vertices;  // indices into base.quiver.vertices
};

// Appends relations. A degenerate single-path "relation" of length one is
// treated as killing that arrow: the arrow is removed from the quiver and
// every relation term passing through it is dropped.
QuotientMap quotient_by_relations(const AlgebraPresentation& a,
                                  const std::vector<Relation>& extra);

QuotientMap quotient_by_arrow_kill(const AlgebraPresentation& a,
                                   const std::vector<std::string>& arrow_ids);

QuotientMap quotient_by_idempotent(const AlgebraPresentation& a,
                                   const std::set<int>& dropped);

AlgebraPresentation opposite(const AlgebraPresentation& a);

}  // namespace tautilt

#endif
