#include "lextri/lp.hpp"

#include <cassert>
#include <cstddef>

namespace lextri {

namespace {

// Dense tableau for min-form problems (Ay = b, y >= 0, b >= 0).
// rows 0..m-1 hold constraints, `cost` holds priced-out reduced costs with
// cost.back() == -(objective value).
struct Tableau {
  std::vector<Vec> rows;
  Vec cost;
  std::vector<std::size_t> basis;

  std::size_t width() const { return cost.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / rows[r][c];
    for (Rational& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < width(); ++j) rows[i][j] -= f * rows[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j < width(); ++j) cost[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule; returns false when the problem is unbounded below.
  bool iterate(std::size_t ncols) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;  // optimal
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rational ratio = rows[i].back() / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

SimplexResult simplex_maximize(const Vec& objective,
                               const std::vector<LinearConstraint>& eq,
                               const std::vector<LinearConstraint>& leq) {
  const std::size_t n = objective.size();
  const std::size_t p = eq.size();
  const std::size_t q = leq.size();
  const std::size_t m = p + q;
  // y = [u_1..u_n, w_1..w_n, slacks]; x_j = u_j - w_j.
  const std::size_t ncols = 2 * n + q;

  Tableau t;
  t.basis.resize(m);
  t.rows.assign(m, Vec(ncols + m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = i < p ? eq[i] : leq[i - p];
    assert(c.coeffs.size() == n);
    Vec& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coeffs[j];
      row[n + j] = -c.coeffs[j];
    }
    if (i >= p) row[2 * n + (i - p)] = 1;
    row.back() = c.rhs;
    if (row.back() < 0)
      for (Rational& v : row) v = -v;
    row[ncols + i] = 1;  // artificial
    t.basis[i] = ncols + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.cost.assign(ncols + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) t.cost[ncols + i] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < t.width(); ++j) t.cost[j] -= t.rows[i][j];
  const bool bounded1 = t.iterate(ncols + m);
  assert(bounded1);
  (void)bounded1;
  if (-t.cost.back() != 0)
    return {SimplexStatus::Infeasible, Rational(0), {}};

  // Drive remaining artificials out of the basis; rows that cannot be
  // pivoted are redundant and get dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < ncols) {
      ++i;
      continue;
    }
    std::size_t col = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < ncols) {
      t.pivot(i, col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Strip artificial columns.
  for (Vec& row : t.rows) {
    row[ncols] = row.back();
    row.resize(ncols + 1);
  }

  // Phase 2: minimize -objective over x = u - w.
  t.cost.assign(ncols + 1, Rational(0));
  Vec c2(ncols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = -objective[j];
    c2[n + j] = objective[j];
  }
  for (std::size_t j = 0; j < ncols; ++j) t.cost[j] = c2[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational cb = c2[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < t.width(); ++j) t.cost[j] -= cb * t.rows[i][j];
  }
  if (!t.iterate(ncols))
    return {SimplexStatus::Unbounded, Rational(0), {}};

  Vec y(ncols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rows[i].back();
  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  return {SimplexStatus::Optimal, t.cost.back(), std::move(x)};
}

bool lp_feasible_strict(const std::vector<LinearConstraint>& eq,
                        const std::vector<LinearConstraint>& weak,
                        const std::vector<LinearConstraint>& strict) {
  std::size_t n = 0;
  for (const auto* group : {&eq, &weak, &strict})
    for (const LinearConstraint& c : *group)
      n = std::max(n, c.coeffs.size());

  // Variables (x, eps), maximize eps.
  auto widen = [n](const LinearConstraint& c, const Rational& eps_coeff) {
    LinearConstraint out;
    out.coeffs = c.coeffs;
    out.coeffs.resize(n, Rational(0));
    out.coeffs.push_back(eps_coeff);
    out.rhs = c.rhs;
    return out;
  };
  std::vector<LinearConstraint> eqs, leqs;
  for (const LinearConstraint& c : eq) eqs.push_back(widen(c, Rational(0)));
  for (const LinearConstraint& c : weak) leqs.push_back(widen(c, Rational(0)));
  for (const LinearConstraint& c : strict) leqs.push_back(widen(c, Rational(1)));
  LinearConstraint cap;
  cap.coeffs.assign(n + 1, Rational(0));
  cap.coeffs[n] = 1;
  cap.rhs = 1;
  leqs.push_back(cap);

  Vec obj(n + 1, Rational(0));
  obj[n] = 1;
  const SimplexResult r = simplex_maximize(obj, eqs, leqs);
  switch (r.status) {
    case SimplexStatus::Infeasible:
      return false;
    case SimplexStatus::Unbounded:
      return true;
    case SimplexStatus::Optimal:
      return r.objective > 0;
  }
  return false;
}

}  // namespace lextri
