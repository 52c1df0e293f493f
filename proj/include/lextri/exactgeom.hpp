#pragma once

#include "lextri/errors.hpp"
#include "lextri/types.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace lextri {

// Oriented hyperplane { x : normal.x = offset } with integral coefficients,
// content 1. For facets the orientation is outward: the hull side satisfies
// normal.x <= offset.
struct Hyperplane {
  std::vector<Integer> normal;
  Integer offset;

  Rational eval(const Point& p) const;  // normal.p - offset
  int side(const Point& p) const;       // sign of eval
  void flip();

  // Sign-normalized copy (first nonzero coefficient positive); two planes
  // are geometrically equal iff their keys are equal.
  std::pair<std::vector<Integer>, Integer> key() const;

  // Hyperplane spanned by dim affinely independent points in R^dim;
  // nullopt when the points are affinely dependent.
  static std::optional<Hyperplane> through(const std::vector<Point>& pts);

  bool operator==(const Hyperplane& o) const = default;
};

struct Facet {
  Cell vertices;  // labels of all subset points on the hyperplane, sorted
  Hyperplane plane;
};

// Facet of a raw point list; indices are 0-based into the list.
struct RawFacet {
  std::vector<int> indices;
  Hyperplane plane;
};

struct SubsetCache;

// Immutable labelled point set, full-dimensional by construction.
// Subset queries (facets, volumes, affine dimension) are memoized behind a
// mutex, so values stay safe for concurrent reads.
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> pts);  // throws PointSetError
  ~PointSet();
  PointSet(PointSet&&) noexcept;
  PointSet& operator=(PointSet&&) noexcept;
  PointSet(const PointSet&) = delete;
  PointSet& operator=(const PointSet&) = delete;

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(pts_.size()); }
  const Point& point(Label l) const { return pts_[static_cast<std::size_t>(l) - 1]; }
  std::vector<Point> points_of(const Cell& c) const;
  Cell all_labels() const;

  SubsetCache& subset_cache() const { return *cache_; }

 private:
  int dim_;
  std::vector<Point> pts_;
  std::unique_ptr<SubsetCache> cache_;
};

// ---- raw kernel (point lists) ----

int affine_dimension(const std::vector<Point>& pts);

// Sign of det[(p2-p1), ..., (p_{d+1}-p1)] for d+1 points in dimension d.
int orientation(const std::vector<Point>& simplex);

// |det| / d! for d+1 points in dimension d; 0 iff degenerate.
Rational simplex_volume(const std::vector<Point>& simplex);

// All facets of conv(pts) by brute-force enumeration of spanning
// dim-subsets; requires affine_dimension(pts) == dim.
std::vector<RawFacet> hull_facets_of(const std::vector<Point>& pts, int dim);

// Exact coordinates of pts in an affine basis of their span (target_dim =
// affine_dimension(pts)).
std::vector<Point> affine_coordinates(const std::vector<Point>& pts, int target_dim);

// ---- label-level kernel (memoized per PointSet) ----

int affine_dimension(const PointSet& ps, const Cell& subset);

// Facets of conv(subset); throws DegenerateSetError unless the subset is
// full-dimensional.
const std::vector<Facet>& hull_facets(const PointSet& ps, const Cell& subset);

// (k-1)-faces of conv(subset) as label sets, where k = affine dimension of
// the subset (works below full dimension too).
const std::vector<Cell>& relative_facet_sets(const PointSet& ps, const Cell& subset);

// Volume of conv(subset) in ambient dimension; 0 when the subset is flat.
// Computed by coning the lowest label over facets avoiding it, recursively.
const Rational& volume(const PointSet& ps, const Cell& subset);

// Strict visibility: p lies in the open halfspace opposite the hull.
bool is_visible(const Facet& f, const Point& p);

// Facets of conv(w) visible from the point with label `viewer`.
std::vector<Facet> shadow_facets(const PointSet& ps, const Cell& w, Label viewer);

// Subfacets of w contained in exactly one visible facet.
std::vector<Cell> shadow_boundary(const PointSet& ps, const Cell& w, Label viewer);

// Face test per the supporting-hyperplane definition; T = S (nonempty) is
// not a face, T = {} is.
bool is_face(const PointSet& ps, const Cell& s, const Cell& t);

// True iff conv(a) and conv(b) intersect in conv(a n b) with a n b a common
// face of both, certified by an exact separating hyperplane.
bool cells_meet_properly(const PointSet& ps, const Cell& a, const Cell& b);

}  // namespace lextri
