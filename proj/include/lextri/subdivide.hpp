#pragma once

#include "lextri/exactgeom.hpp"

#include <set>
#include <string>

namespace lextri {

enum class Sign { Pull, Push };

struct ScriptEntry {
  Label label;
  Sign sign;
  bool operator==(const ScriptEntry&) const = default;
};

// Construction recipe for a lexicographic subdivision; a full script
// contains every label exactly once.
using LexScript = std::vector<ScriptEntry>;

// A set of full-dimensional cells over a point set. Structural equality is
// cell-set equality, used everywhere for "same subdivision".
struct Subdivision {
  const PointSet* base = nullptr;
  std::set<Cell> cells;

  bool operator==(const Subdivision& o) const { return cells == o.cells; }
};

// A subdivision whose every cell is the vertex set of a d-simplex.
struct Triangulation : Subdivision {
  Triangulation() = default;
  explicit Triangulation(Subdivision s);  // throws NotSimplicialError
};

Subdivision trivial(const PointSet& v);

// Refine by pulling label k: each cell containing k is replaced by cones
// from k over the cell's facets avoiding k. Absent labels are a no-op.
Subdivision pull_point(const Subdivision& s, Label k);

// Refine by pushing label k: pyramid cells with apex k are kept; other
// cells containing k split into the cell minus k plus cones from k over
// the visible facets of the remainder. Absent labels are a no-op.
Subdivision push_point(const Subdivision& s, Label k);

Subdivision lex_subdivision(const PointSet& v, const LexScript& script);

// Requires a full script; the result is verified simplicial.
Triangulation lex_triangulation(const PointSet& v, const LexScript& script);

struct Violation {
  enum class Kind { DegenerateCell, ImproperPair, VolumeMismatch };
  Kind kind;
  Cell a, b;
  Rational cell_sum, hull_volume;
  std::string message() const;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
};

// Certifies the subdivision invariants: full-dimensional cells, pairwise
// proper intersections, and cell volumes summing to the hull volume.
ValidationReport validate(const Subdivision& s);

bool is_refinement(const Subdivision& t, const Subdivision& s);

Cell present_points(const Subdivision& s);

enum class LiftSide { Lower, Upper };

// Regular subdivision induced by lifting point i to height h_i and
// projecting the lower (or upper) facets. A flat lift induces the trivial
// subdivision.
Subdivision regular_from_heights(const PointSet& v, const std::vector<Rational>& heights,
                                 LiftSide side);

// Heights sigma_i * M^(-r_i) certifying the script's subdivision as a
// regular one (sigma = +1 for Push, -1 for Pull, r = script position); M is
// doubled until the induced lower subdivision matches.
std::vector<Rational> lex_as_lift(const PointSet& v, const LexScript& script);

bool is_full_script(const PointSet& v, const LexScript& script);

}  // namespace lextri
