#include "lextri/exactgeom.hpp"

#include "lextri/linalg.hpp"
#include "lextri/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace lextri {

Cell cell_minus(const Cell& c, Label k) {
  Cell out;
  out.reserve(c.size());
  for (Label l : c)
    if (l != k) out.push_back(l);
  return out;
}

Cell cell_union(const Cell& c, Label k) {
  Cell out = c;
  out.insert(std::lower_bound(out.begin(), out.end(), k), k);
  return out;
}

Cell cell_intersect(const Cell& a, const Cell& b) {
  Cell out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cell cell_difference(const Cell& a, const Cell& b) {
  Cell out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cell_subset(const Cell& sub, const Cell& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// ---- Hyperplane ----

Rational Hyperplane::eval(const Point& p) const {
  Rational acc = -Rational(offset);
  for (std::size_t i = 0; i < normal.size(); ++i)
    acc += Rational(normal[i]) * p[i];
  return acc;
}

int Hyperplane::side(const Point& p) const { return eval(p).sign(); }

void Hyperplane::flip() {
  for (Integer& a : normal) a = -a;
  offset = -offset;
}

std::pair<std::vector<Integer>, Integer> Hyperplane::key() const {
  std::vector<Integer> a = normal;
  Integer b = offset;
  int lead = 0;
  for (const Integer& v : a) {
    if (v != 0) {
      lead = v.sign();
      break;
    }
  }
  if (lead < 0) {
    for (Integer& v : a) v = -v;
    b = -b;
  }
  return {std::move(a), std::move(b)};
}

std::optional<Hyperplane> Hyperplane::through(const std::vector<Point>& pts) {
  const std::size_t d = pts[0].size();
  assert(pts.size() == d);
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(row));
  }
  std::vector<Vec> ker = kernel_basis(std::move(diffs), d);
  if (ker.size() != 1) return std::nullopt;
  const Vec& a = ker[0];
  Rational alpha = 0;
  for (std::size_t j = 0; j < d; ++j) alpha += a[j] * pts[0][j];

  // Scale (a, alpha) to an integral vector with content 1, leading
  // coefficient positive.
  Integer l = 1;
  for (const Rational& v : a) l = lcm(l, denominator(v));
  l = lcm(l, denominator(alpha));
  std::vector<Integer> na(d);
  for (std::size_t j = 0; j < d; ++j)
    na[j] = numerator(a[j]) * (l / denominator(a[j]));
  Integer nb = numerator(alpha) * (l / denominator(alpha));
  Integer g = 0;
  for (const Integer& v : na) g = gcd(g, v);
  g = gcd(g, nb);
  if (g != 0) {
    for (Integer& v : na) v /= g;
    nb /= g;
  }
  Hyperplane h{std::move(na), std::move(nb)};
  int lead = 0;
  for (const Integer& v : h.normal) {
    if (v != 0) {
      lead = v.sign();
      break;
    }
  }
  if (lead < 0) h.flip();
  return h;
}

// ---- raw kernel ----

int affine_dimension(const std::vector<Point>& pts) {
  assert(!pts.empty());
  if (pts.size() == 1) return 0;
  const std::size_t d = pts[0].size();
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(row));
  }
  return matrix_rank(std::move(diffs));
}

namespace {

Mat difference_matrix(const std::vector<Point>& simplex) {
  const std::size_t d = simplex[0].size();
  assert(simplex.size() == d + 1);
  Mat m;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = simplex[i][j] - simplex[0][j];
    m.push_back(std::move(row));
  }
  return m;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls fn with every k-subset of {0, ..., n-1}.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

int orientation(const std::vector<Point>& simplex) {
  return determinant(difference_matrix(simplex)).sign();
}

Rational simplex_volume(const std::vector<Point>& simplex) {
  const int d = static_cast<int>(simplex[0].size());
  Rational det = determinant(difference_matrix(simplex));
  if (det < 0) det = -det;
  return det / Rational(factorial(d));
}

std::vector<RawFacet> hull_facets_of(const std::vector<Point>& pts, int dim) {
  const int n = static_cast<int>(pts.size());
  std::set<std::pair<std::vector<Integer>, Integer>> seen;
  std::vector<RawFacet> facets;
  for_each_combination(n, dim, [&](const std::vector<int>& idx) {
    std::vector<Point> span;
    span.reserve(idx.size());
    for (int i : idx) span.push_back(pts[static_cast<std::size_t>(i)]);
    std::optional<Hyperplane> h = Hyperplane::through(span);
    if (!h) return;
    if (!seen.insert(h->key()).second) return;
    int pos = 0, neg = 0;
    std::vector<int> on;
    for (int i = 0; i < n; ++i) {
      const int s = h->side(pts[static_cast<std::size_t>(i)]);
      if (s > 0)
        ++pos;
      else if (s < 0)
        ++neg;
      else
        on.push_back(i);
    }
    if ((pos > 0 && neg > 0) || (pos == 0 && neg == 0)) return;
    if (pos > 0) h->flip();  // outward: hull side satisfies normal.x <= offset
    facets.push_back(RawFacet{std::move(on), std::move(*h)});
  });
  std::sort(facets.begin(), facets.end(),
            [](const RawFacet& a, const RawFacet& b) { return a.indices < b.indices; });
  return facets;
}

std::vector<Point> affine_coordinates(const std::vector<Point>& pts, int target_dim) {
  const std::size_t d = pts[0].size();
  const std::size_t k = static_cast<std::size_t>(target_dim);
  // Greedy affine basis from difference vectors.
  Mat basis;
  for (std::size_t i = 1; i < pts.size() && basis.size() < k; ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = pts[i][j] - pts[0][j];
    Mat trial = basis;
    trial.push_back(row);
    if (matrix_rank(trial) == static_cast<int>(basis.size()) + 1)
      basis.push_back(std::move(row));
  }
  assert(basis.size() == k);
  // Columns of the solve are the basis vectors.
  Mat system(d, Vec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) system[i][j] = basis[j][i];
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    Vec rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = p[i] - pts[0][i];
    std::optional<Vec> lambda = solve_linear(system, std::move(rhs));
    assert(lambda.has_value());
    out.push_back(std::move(*lambda));
  }
  return out;
}

// ---- PointSet ----

struct SubsetCache {
  std::mutex mu;
  std::map<Cell, int> affdim;
  std::map<Cell, Rational> vol;
  std::map<Cell, std::shared_ptr<const std::vector<Facet>>> facets;
  std::map<Cell, std::shared_ptr<const std::vector<Cell>>> rel_facets;
  std::map<Cell, std::shared_ptr<const std::vector<Cell>>> cone_tri;
};

PointSet::PointSet(int dim, std::vector<Point> pts)
    : dim_(dim), pts_(std::move(pts)), cache_(std::make_unique<SubsetCache>()) {
  if (dim_ < 1) throw PointSetError("ambient dimension must be at least 1");
  if (pts_.empty()) throw PointSetError("point set is empty");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (static_cast<int>(pts_[i].size()) != dim_) {
      std::ostringstream os;
      os << "point " << i + 1 << " has " << pts_[i].size()
         << " coordinates, expected " << dim_;
      throw PointSetError(os.str());
    }
  }
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    for (std::size_t j = i + 1; j < pts_.size(); ++j) {
      if (pts_[i] == pts_[j]) {
        std::ostringstream os;
        os << "duplicate points: " << i + 1 << " and " << j + 1;
        throw PointSetError(os.str());
      }
    }
  }
  if (lextri::affine_dimension(pts_) != dim_) {
    std::ostringstream os;
    os << "points span affine dimension " << lextri::affine_dimension(pts_)
       << ", expected " << dim_;
    throw PointSetError(os.str());
  }
}

PointSet::~PointSet() = default;
PointSet::PointSet(PointSet&&) noexcept = default;
PointSet& PointSet::operator=(PointSet&&) noexcept = default;

std::vector<Point> PointSet::points_of(const Cell& c) const {
  std::vector<Point> out;
  out.reserve(c.size());
  for (Label l : c) out.push_back(point(l));
  return out;
}

Cell PointSet::all_labels() const {
  Cell out(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) out[i] = static_cast<Label>(i + 1);
  return out;
}

// ---- memoized label-level kernel ----

namespace {

template <typename MapT, typename ComputeFn>
const typename MapT::mapped_type& memoize(std::mutex& mu, MapT& map, const Cell& key,
                                          ComputeFn&& compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  typename MapT::mapped_type value = compute();
  std::lock_guard<std::mutex> lock(mu);
  return map.emplace(key, std::move(value)).first->second;
}

const std::vector<Cell>& cone_triangulation(const PointSet& ps, const Cell& subset);

}  // namespace

int affine_dimension(const PointSet& ps, const Cell& subset) {
  SubsetCache& cache = ps.subset_cache();
  return memoize(cache.mu, cache.affdim, subset,
                 [&] { return affine_dimension(ps.points_of(subset)); });
}

const std::vector<Facet>& hull_facets(const PointSet& ps, const Cell& subset) {
  if (affine_dimension(ps, subset) != ps.dim())
    throw DegenerateSetError("subset is not full-dimensional");
  SubsetCache& cache = ps.subset_cache();
  return *memoize(cache.mu, cache.facets, subset, [&] {
    std::vector<RawFacet> raw = hull_facets_of(ps.points_of(subset), ps.dim());
    auto out = std::make_shared<std::vector<Facet>>();
    out->reserve(raw.size());
    for (RawFacet& rf : raw) {
      Cell verts;
      verts.reserve(rf.indices.size());
      for (int i : rf.indices) verts.push_back(subset[static_cast<std::size_t>(i)]);
      out->push_back(Facet{std::move(verts), std::move(rf.plane)});
    }
    return out;
  });
}

const std::vector<Cell>& relative_facet_sets(const PointSet& ps, const Cell& subset) {
  SubsetCache& cache = ps.subset_cache();
  return *memoize(cache.mu, cache.rel_facets, subset, [&] {
    auto out = std::make_shared<std::vector<Cell>>();
    const int k = affine_dimension(ps, subset);
    if (k == 0) return out;  // a point has no proper faces of dimension -1
    if (k == ps.dim()) {
      for (const Facet& f : hull_facets(ps, subset)) out->push_back(f.vertices);
      return out;
    }
    std::vector<Point> reduced = affine_coordinates(ps.points_of(subset), k);
    for (const RawFacet& rf : hull_facets_of(reduced, k)) {
      Cell verts;
      verts.reserve(rf.indices.size());
      for (int i : rf.indices) verts.push_back(subset[static_cast<std::size_t>(i)]);
      out->push_back(std::move(verts));
    }
    std::sort(out->begin(), out->end());
    return out;
  });
}

namespace {

// Pulling triangulation of conv(subset): cone the lowest label over the
// recursively triangulated facets avoiding it.
const std::vector<Cell>& cone_triangulation(const PointSet& ps, const Cell& subset) {
  SubsetCache& cache = ps.subset_cache();
  return *memoize(cache.mu, cache.cone_tri, subset, [&] {
    auto out = std::make_shared<std::vector<Cell>>();
    const int k = affine_dimension(ps, subset);
    if (subset.size() == static_cast<std::size_t>(k) + 1) {
      out->push_back(subset);
      return out;
    }
    const Label apex = subset.front();
    for (const Cell& f : relative_facet_sets(ps, subset)) {
      if (cell_contains(f, apex)) continue;
      for (const Cell& simplex : cone_triangulation(ps, f))
        out->push_back(cell_union(simplex, apex));
    }
    return out;
  });
}

}  // namespace

const Rational& volume(const PointSet& ps, const Cell& subset) {
  SubsetCache& cache = ps.subset_cache();
  return memoize(cache.mu, cache.vol, subset, [&]() -> Rational {
    if (subset.empty() || affine_dimension(ps, subset) < ps.dim()) return Rational(0);
    Rational total = 0;
    for (const Cell& simplex : cone_triangulation(ps, subset))
      total += simplex_volume(ps.points_of(simplex));
    return total;
  });
}

bool is_visible(const Facet& f, const Point& p) { return f.plane.eval(p) > 0; }

std::vector<Facet> shadow_facets(const PointSet& ps, const Cell& w, Label viewer) {
  assert(!cell_contains(w, viewer));
  std::vector<Facet> out;
  const Point& p = ps.point(viewer);
  for (const Facet& f : hull_facets(ps, w))
    if (is_visible(f, p)) out.push_back(f);
  return out;
}

std::vector<Cell> shadow_boundary(const PointSet& ps, const Cell& w, Label viewer) {
  const std::vector<Facet>& facets = hull_facets(ps, w);
  if (ps.dim() < 2) return {};
  const Point& p = ps.point(viewer);
  std::set<Cell> subfacets;
  for (const Facet& f : facets)
    for (const Cell& g : relative_facet_sets(ps, f.vertices)) subfacets.insert(g);
  std::vector<Cell> out;
  for (const Cell& g : subfacets) {
    int visible_count = 0;
    for (const Facet& f : facets)
      if (is_visible(f, p) && cell_subset(g, f.vertices)) ++visible_count;
    if (visible_count == 1) out.push_back(g);
  }
  return out;
}

namespace {

// Row (x, -1) so that the unknowns are the hyperplane (a, alpha).
LinearConstraint incidence_row(const Point& x) {
  LinearConstraint c;
  c.coeffs.reserve(x.size() + 1);
  for (const Rational& v : x) c.coeffs.push_back(v);
  c.coeffs.push_back(Rational(-1));
  c.rhs = 0;
  return c;
}

}  // namespace

bool is_face(const PointSet& ps, const Cell& s, const Cell& t) {
  assert(cell_subset(t, s));
  if (t.empty()) return true;
  if (t == s) return false;  // the supporting hyperplane may not contain all of S
  std::vector<LinearConstraint> eq, strict;
  for (Label l : t) eq.push_back(incidence_row(ps.point(l)));
  for (Label l : cell_difference(s, t)) strict.push_back(incidence_row(ps.point(l)));
  return lp_feasible_strict(eq, {}, strict);
}

bool cells_meet_properly(const PointSet& ps, const Cell& a, const Cell& b) {
  const Cell c = cell_intersect(a, b);
  std::vector<LinearConstraint> eq, strict;
  for (Label l : c) eq.push_back(incidence_row(ps.point(l)));
  for (Label l : cell_difference(a, c)) strict.push_back(incidence_row(ps.point(l)));
  for (Label l : cell_difference(b, c)) {
    LinearConstraint row = incidence_row(ps.point(l));
    for (Rational& v : row.coeffs) v = -v;  // a.x > alpha
    strict.push_back(std::move(row));
  }
  return lp_feasible_strict(eq, {}, strict);
}

}  // namespace lextri
