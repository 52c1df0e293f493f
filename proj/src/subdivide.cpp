#include "lextri/subdivide.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lextri {

namespace {

std::string cell_str(const Cell& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  return os.str();
}

}  // namespace

Triangulation::Triangulation(Subdivision s) : Subdivision(std::move(s)) {
  const int d = base->dim();
  for (const Cell& c : cells) {
    if (static_cast<int>(c.size()) != d + 1 ||
        simplex_volume(base->points_of(c)) == 0) {
      throw NotSimplicialError("cell " + cell_str(c) + " is not a " +
                               std::to_string(d) + "-simplex");
    }
  }
}

Subdivision trivial(const PointSet& v) {
  Subdivision s;
  s.base = &v;
  s.cells.insert(v.all_labels());
  return s;
}

Subdivision pull_point(const Subdivision& s, Label k) {
  const PointSet& ps = *s.base;
  Subdivision out;
  out.base = s.base;
  for (const Cell& c : s.cells) {
    if (!cell_contains(c, k)) {
      out.cells.insert(c);
      continue;
    }
    for (const Facet& f : hull_facets(ps, c))
      if (!cell_contains(f.vertices, k)) out.cells.insert(cell_union(f.vertices, k));
  }
  return out;
}

Subdivision push_point(const Subdivision& s, Label k) {
  const PointSet& ps = *s.base;
  Subdivision out;
  out.base = s.base;
  for (const Cell& c : s.cells) {
    if (!cell_contains(c, k)) {
      out.cells.insert(c);
      continue;
    }
    const Cell rest = cell_minus(c, k);
    if (affine_dimension(ps, rest) == ps.dim() - 1) {
      out.cells.insert(c);  // pyramid with apex k
      continue;
    }
    out.cells.insert(rest);
    const Point& p = ps.point(k);
    for (const Facet& f : hull_facets(ps, rest))
      if (is_visible(f, p)) out.cells.insert(cell_union(f.vertices, k));
  }
  return out;
}

Subdivision lex_subdivision(const PointSet& v, const LexScript& script) {
  Subdivision s = trivial(v);
  for (const ScriptEntry& e : script)
    s = e.sign == Sign::Pull ? pull_point(s, e.label) : push_point(s, e.label);
  return s;
}

bool is_full_script(const PointSet& v, const LexScript& script) {
  if (static_cast<int>(script.size()) != v.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(v.size()) + 1, false);
  for (const ScriptEntry& e : script) {
    if (e.label < 1 || e.label > v.size() || seen[static_cast<std::size_t>(e.label)])
      return false;
    seen[static_cast<std::size_t>(e.label)] = true;
  }
  return true;
}

Triangulation lex_triangulation(const PointSet& v, const LexScript& script) {
  if (!is_full_script(v, script))
    throw std::invalid_argument("script does not cover every point exactly once");
  return Triangulation(lex_subdivision(v, script));
}

std::string Violation::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::DegenerateCell:
      os << "degenerate cell: " << cell_str(a);
      break;
    case Kind::ImproperPair:
      os << "improper pair: " << cell_str(a) << " | " << cell_str(b);
      break;
    case Kind::VolumeMismatch:
      os << "volume mismatch: cells sum " << cell_sum.str() << ", hull volume "
         << hull_volume.str();
      break;
  }
  return os.str();
}

ValidationReport validate(const Subdivision& s) {
  const PointSet& ps = *s.base;
  ValidationReport report;
  std::vector<Cell> cs(s.cells.begin(), s.cells.end());
  for (const Cell& c : cs) {
    if (affine_dimension(ps, c) < ps.dim()) {
      Violation v;
      v.kind = Violation::Kind::DegenerateCell;
      v.a = c;
      report.violations.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cells_meet_properly(ps, cs[i], cs[j])) {
        Violation v;
        v.kind = Violation::Kind::ImproperPair;
        v.a = cs[i];
        v.b = cs[j];
        report.violations.push_back(std::move(v));
      }
    }
  }
  Rational sum = 0;
  for (const Cell& c : cs) sum += volume(ps, c);
  const Rational& hull = volume(ps, ps.all_labels());
  if (sum != hull) {
    Violation v;
    v.kind = Violation::Kind::VolumeMismatch;
    v.cell_sum = sum;
    v.hull_volume = hull;
    report.violations.push_back(std::move(v));
  }
  report.valid = report.violations.empty();
  return report;
}

bool is_refinement(const Subdivision& t, const Subdivision& s) {
  for (const Cell& tc : t.cells) {
    bool covered = false;
    for (const Cell& sc : s.cells) {
      if (cell_subset(tc, sc)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Cell present_points(const Subdivision& s) {
  std::set<Label> labels;
  for (const Cell& c : s.cells) labels.insert(c.begin(), c.end());
  return Cell(labels.begin(), labels.end());
}

Subdivision regular_from_heights(const PointSet& v, const std::vector<Rational>& heights,
                                 LiftSide side) {
  if (heights.size() != static_cast<std::size_t>(v.size()))
    throw std::invalid_argument("heights length does not match point count");
  const int d = v.dim();
  std::vector<Point> lifted;
  lifted.reserve(static_cast<std::size_t>(v.size()));
  for (Label l = 1; l <= v.size(); ++l) {
    Point p = v.point(l);
    p.push_back(heights[static_cast<std::size_t>(l) - 1]);
    lifted.push_back(std::move(p));
  }
  if (affine_dimension(lifted) < d + 1) return trivial(v);  // flat lift
  Subdivision out;
  out.base = &v;
  for (const RawFacet& f : hull_facets_of(lifted, d + 1)) {
    const int last = f.plane.normal.back().sign();
    if ((side == LiftSide::Lower && last >= 0) || (side == LiftSide::Upper && last <= 0))
      continue;
    Cell c;
    c.reserve(f.indices.size());
    for (int i : f.indices) c.push_back(static_cast<Label>(i + 1));
    out.cells.insert(std::move(c));
  }
  return out;
}

std::vector<Rational> lex_as_lift(const PointSet& v, const LexScript& script) {
  if (!is_full_script(v, script))
    throw std::invalid_argument("script does not cover every point exactly once");
  const Subdivision target = lex_subdivision(v, script);
  Rational max_coord = 0;
  for (Label l = 1; l <= v.size(); ++l)
    for (const Rational& c : v.point(l))
      if (abs(c) > max_coord) max_coord = abs(c);
  Rational m = Rational(v.size()) * (1 + max_coord) * (1 + max_coord);
  for (int round = 0; round < 60; ++round, m *= 2) {
    std::vector<Rational> heights(static_cast<std::size_t>(v.size()));
    Rational scale = 1;
    for (const ScriptEntry& e : script) {
      scale /= m;  // position r gets magnitude M^(-r)
      heights[static_cast<std::size_t>(e.label) - 1] =
          e.sign == Sign::Push ? scale : -scale;
    }
    if (regular_from_heights(v, heights, LiftSide::Lower) == target) return heights;
  }
  throw NoConvergenceError("no lifting height base certified the subdivision");
}

}  // namespace lextri
