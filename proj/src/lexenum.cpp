#include "lextri/lexenum.hpp"

#include "lextri/recover.hpp"

#include <limits>
#include <random>

namespace lextri {

bool EnumerationReport::gkz_injective() const {
  for (const auto& [z, idxs] : gkz_map)
    if (idxs.size() != 1) return false;
  return true;
}

std::uint64_t script_space_size(int n) {
  std::uint64_t total = 1;
  for (int i = 2; i <= n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(i);
  }
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / 2)
      return std::numeric_limits<std::uint64_t>::max();
    total *= 2;
  }
  return total;
}

bool script_less(const LexScript& a, const LexScript& b) {
  auto rank = [](const ScriptEntry& e) {
    return std::pair<Label, int>(e.label, e.sign == Sign::Pull ? 0 : 1);
  };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const ScriptEntry& x, const ScriptEntry& y) {
                                        return rank(x) < rank(y);
                                      });
}

namespace {

struct Collector {
  const PointSet* v;
  std::map<std::set<Cell>, std::size_t> index;
  std::vector<EnumeratedTriangulation> items;

  void record(const Subdivision& s, const LexScript& script) {
    auto it = index.find(s.cells);
    if (it == index.end()) {
      EnumeratedTriangulation e;
      e.triangulation = Triangulation(s);
      e.witness = script;
      items.push_back(std::move(e));
      index.emplace(s.cells, items.size() - 1);
    } else if (script_less(script, items[it->second].witness)) {
      items[it->second].witness = script;
    }
  }
};

void dfs(const PointSet& v, const Subdivision& cur, std::vector<bool>& used,
         LexScript& prefix, Collector& out) {
  if (prefix.size() == static_cast<std::size_t>(v.size())) {
    out.record(cur, prefix);
    return;
  }
  for (Label k = 1; k <= v.size(); ++k) {
    if (used[static_cast<std::size_t>(k)]) continue;
    used[static_cast<std::size_t>(k)] = true;
    for (Sign sign : {Sign::Pull, Sign::Push}) {
      prefix.push_back({k, sign});
      const Subdivision child =
          sign == Sign::Pull ? pull_point(cur, k) : push_point(cur, k);
      dfs(v, child, used, prefix, out);
      prefix.pop_back();
    }
    used[static_cast<std::size_t>(k)] = false;
  }
}

// Platform-independent bounded draw (std::shuffle is not reproducible
// across standard libraries).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

LexScript random_full_script(const PointSet& v, std::mt19937_64& rng) {
  std::vector<Label> order(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) order[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[bounded(rng, i)]);
  LexScript script;
  script.reserve(order.size());
  for (Label k : order)
    script.push_back({k, (rng() & 1) != 0 ? Sign::Push : Sign::Pull});
  return script;
}

}  // namespace

EnumerationReport enumerate_lex(const PointSet& v, const EnumerateOptions& opts) {
  Collector collector;
  collector.v = &v;
  EnumerationReport report;
  if (opts.limit) {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < *opts.limit; ++i) {
      const LexScript script = random_full_script(v, rng);
      collector.record(lex_subdivision(v, script), script);
    }
    report.scripts_run = *opts.limit;
    report.sampled = true;
    report.seed = opts.seed;
  } else {
    const std::uint64_t total = script_space_size(v.size());
    if (total > opts.budget)
      throw BudgetExceededError(
          "full enumeration of " + std::to_string(total) +
          " scripts exceeds the budget; pass a sampling limit");
    Subdivision start = trivial(v);
    std::vector<bool> used(static_cast<std::size_t>(v.size()) + 1, false);
    LexScript prefix;
    dfs(v, start, used, prefix, collector);
    report.scripts_run = total;
  }

  std::sort(collector.items.begin(), collector.items.end(),
            [](const EnumeratedTriangulation& a, const EnumeratedTriangulation& b) {
              return a.triangulation.cells < b.triangulation.cells;
            });
  report.items = std::move(collector.items);
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    report.items[i].gkz = gkz_vector(report.items[i].triangulation);
    report.gkz_map[report.items[i].gkz].push_back(i);
  }
  return report;
}

RoundtripReport roundtrip_all(const PointSet& v, const EnumerateOptions& opts) {
  RoundtripReport out;
  out.enumeration = enumerate_lex(v, opts);
  for (std::size_t i = 0; i < out.enumeration.items.size(); ++i) {
    const EnumeratedTriangulation& item = out.enumeration.items[i];
    ++out.checked;
    try {
      const RecoveryResult r = recover(v, item.gkz);
      if (!(r.triangulation == item.triangulation)) out.failures.push_back(i);
    } catch (const RecoverError&) {
      out.failures.push_back(i);
    }
  }
  return out;
}

}  // namespace lextri
