#include "lextri/gkz.hpp"

#include <cassert>

namespace lextri {

GKZVector gkz_vector(const Triangulation& t) {
  const PointSet& ps = *t.base;
  GKZVector z(static_cast<std::size_t>(ps.size()), Rational(0));
  for (const Cell& c : t.cells) {
    const Rational& vol = volume(ps, c);
    for (Label l : c) z[static_cast<std::size_t>(l) - 1] += vol;
  }
  return z;
}

Rational z_max(const PointSet& ps, const Cell& w, Label k) {
  if (affine_dimension(ps, w) != ps.dim())
    throw DegenerateSetError("z_max requires a full-dimensional subset");
  if (!cell_contains(w, k)) return Rational(0);
  return volume(ps, w);
}

Rational z_min(const PointSet& ps, const Cell& w, Label k) {
  if (affine_dimension(ps, w) != ps.dim())
    throw DegenerateSetError("z_min requires a full-dimensional subset");
  if (!cell_contains(w, k)) return Rational(0);
  return volume(ps, w) - volume(ps, cell_minus(w, k));
}

bool is_ear_point(const Triangulation& t, Label k) {
  const PointSet& ps = *t.base;
  const Cell all = ps.all_labels();
  if (!is_face(ps, all, Cell{k})) return false;  // not an extreme point
  const GKZVector z = gkz_vector(t);
  return z[static_cast<std::size_t>(k) - 1] ==
         volume(ps, all) - volume(ps, cell_minus(all, k));
}

std::vector<ScriptEntry> first_candidates(const PointSet& v, const GKZVector& z) {
  assert(z.size() == static_cast<std::size_t>(v.size()));
  const Cell all = v.all_labels();
  std::vector<ScriptEntry> out;
  for (Label k = 1; k <= v.size(); ++k) {
    const Rational& zk = z[static_cast<std::size_t>(k) - 1];
    if (zk == z_max(v, all, k)) out.push_back({k, Sign::Pull});
    if (zk == z_min(v, all, k)) out.push_back({k, Sign::Push});
  }
  return out;
}

std::vector<ScriptEntry> next_candidates(const Subdivision& s, const GKZVector& z,
                                         const std::set<Label>& remaining) {
  const PointSet& ps = *s.base;
  std::vector<ScriptEntry> out;
  for (Label k : remaining) {
    const Rational& zk = z[static_cast<std::size_t>(k) - 1];
    Rational pull_sum = 0, push_sum = 0;
    for (const Cell& c : s.cells) {
      if (!cell_contains(c, k)) continue;
      const Rational& vol = volume(ps, c);
      pull_sum += vol;
      push_sum += vol - volume(ps, cell_minus(c, k));
    }
    if (zk == pull_sum) out.push_back({k, Sign::Pull});
    if (zk == push_sum) out.push_back({k, Sign::Push});
  }
  return out;
}

}  // namespace lextri
