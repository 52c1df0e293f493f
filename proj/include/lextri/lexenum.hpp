#pragma once

#include "lextri/gkz.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace lextri {

struct EnumeratedTriangulation {
  Triangulation triangulation;
  LexScript witness;  // lexicographically least script found producing it
  GKZVector gkz;
};

struct EnumerationReport {
  std::vector<EnumeratedTriangulation> items;  // sorted by cell set
  std::uint64_t scripts_run = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::map<GKZVector, std::vector<std::size_t>> gkz_map;  // vector -> item indices

  bool gkz_injective() const;
};

struct EnumerateOptions {
  std::optional<std::uint64_t> limit;  // sample this many random full scripts
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;  // max scripts for full enumeration
};

// All (or `limit` seeded-random) full scripts, deduped by cell-set
// equality. Full enumeration beyond the budget throws BudgetExceededError.
EnumerationReport enumerate_lex(const PointSet& v, const EnumerateOptions& opts = {});

struct RoundtripReport {
  EnumerationReport enumeration;
  std::size_t checked = 0;
  std::vector<std::size_t> failures;  // item indices that failed to round-trip

  bool all_ok() const { return failures.empty(); }
};

// recover(gkz(T)) == T for every distinct enumerated triangulation.
RoundtripReport roundtrip_all(const PointSet& v, const EnumerateOptions& opts = {});

// n! * 2^n, saturating.
std::uint64_t script_space_size(int n);

bool script_less(const LexScript& a, const LexScript& b);

}  // namespace lextri
