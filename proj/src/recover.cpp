#include "lextri/recover.hpp"

#include <algorithm>

namespace lextri {

const char* to_string(RecoverFailure f) {
  switch (f) {
    case RecoverFailure::NoCandidate:
      return "NoCandidate";
    case RecoverFailure::VerificationFailed:
      return "VerificationFailed";
    case RecoverFailure::NotSimplicial:
      return "NotSimplicial";
  }
  return "?";
}

bool verify(const PointSet& v, const GKZVector& z, const Triangulation& t) {
  (void)v;
  return validate(t).valid && gkz_vector(t) == z;
}

RecoveryResult recover(const PointSet& v, const GKZVector& z) {
  if (z.size() != static_cast<std::size_t>(v.size()))
    throw std::invalid_argument("GKZ-vector length does not match point count");
  for (const Rational& q : z)
    if (q < 0) throw std::invalid_argument("GKZ-vector entries must be nonnegative");

  Subdivision s = trivial(v);
  std::set<Label> remaining;
  for (Label k = 1; k <= v.size(); ++k) remaining.insert(k);
  LexScript script;
  std::vector<RecoveryStep> steps;

  auto apply = [&](const ScriptEntry& e) {
    s = e.sign == Sign::Pull ? pull_point(s, e.label) : push_point(s, e.label);
    remaining.erase(e.label);
    script.push_back(e);
    steps.push_back({e.label, e.sign, s.cells.size()});
  };

  // Process present labels greedily; absent labels (no-op refinements) are
  // deferred to the end of the script as Push entries.
  for (;;) {
    const Cell present = present_points(s);
    bool any_present = false;
    for (Label k : remaining)
      if (cell_contains(present, k)) any_present = true;
    if (!any_present) break;
    const std::vector<ScriptEntry> cands = next_candidates(s, z, remaining);
    const ScriptEntry* chosen = nullptr;
    for (const ScriptEntry& e : cands) {
      if (!cell_contains(present, e.label)) continue;
      chosen = &e;  // sorted by label with Pull before Push
      break;
    }
    if (!chosen) throw RecoverError(RecoverFailure::NoCandidate);
    apply(*chosen);
  }
  while (!remaining.empty()) {
    const Label k = *remaining.begin();
    if (z[static_cast<std::size_t>(k) - 1] != 0)
      throw RecoverError(RecoverFailure::NoCandidate);
    apply({k, Sign::Push});
  }

  Triangulation t;
  try {
    t = Triangulation(s);
  } catch (const NotSimplicialError&) {
    throw RecoverError(RecoverFailure::NotSimplicial);
  }
  if (!verify(v, z, t)) throw RecoverError(RecoverFailure::VerificationFailed);
  return {std::move(script), std::move(t), std::move(steps)};
}

}  // namespace lextri
