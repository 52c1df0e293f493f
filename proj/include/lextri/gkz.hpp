#pragma once

#include "lextri/subdivide.hpp"

#include <set>

namespace lextri {

// z_i = total volume of the simplices containing label i; entry 0 holds
// label 1.
using GKZVector = std::vector<Rational>;

GKZVector gkz_vector(const Triangulation& t);

// Largest achievable z_k over triangulations of conv(w): the full volume
// when k is in w, otherwise 0.
Rational z_max(const PointSet& ps, const Cell& w, Label k);

// Smallest achievable z_k: volume(w) - volume(w minus k) when k is in w,
// otherwise 0.
Rational z_min(const PointSet& ps, const Cell& w, Label k);

// k is an ear point iff it is an extreme point of the set and its GKZ entry
// equals volume(V) - volume(V minus k).
bool is_ear_point(const Triangulation& t, Label k);

// Labels whose GKZ entry attains z_max (reported with Pull) or z_min
// (reported with Push) over the whole point set; a label may carry both
// tags. Sorted by label, Pull before Push.
std::vector<ScriptEntry> first_candidates(const PointSet& v, const GKZVector& z);

// Same test relative to the cells of a subdivision reached so far,
// restricted to `remaining`: Pull when z_k equals the sum of volumes of
// cells containing k, Push when it equals the sum of volume(C) -
// volume(C minus k). Absent labels qualify for both exactly when z_k = 0.
std::vector<ScriptEntry> next_candidates(const Subdivision& s, const GKZVector& z,
                                         const std::set<Label>& remaining);

}  // namespace lextri
