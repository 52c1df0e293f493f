#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lp_oracle.hpp"

#include "lextri/lp.hpp"

#include <random>

using namespace lextri;

namespace {

LinearConstraint row(std::vector<int> coeffs, int rhs) {
  LinearConstraint c;
  for (int v : coeffs) c.coeffs.push_back(Rational(v));
  c.rhs = rhs;
  return c;
}

}  // namespace

TEST_CASE("simplex solves simple maxima") {
  // max x s.t. x <= 5
  auto r = simplex_maximize({Rational(1)}, {}, {row({1}, 5)});
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == 5);
  CHECK(r.solution[0] == 5);

  // max x + y s.t. x + y <= 3, x - y <= 1
  r = simplex_maximize({Rational(1), Rational(1)}, {},
                       {row({1, 1}, 3), row({1, -1}, 1)});
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == 3);

  // max y s.t. x + y = 2, y <= 5 (x free goes negative)
  r = simplex_maximize({Rational(0), Rational(1)}, {row({1, 1}, 2)}, {row({0, 1}, 5)});
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == 5);
}

TEST_CASE("simplex detects infeasible and unbounded problems") {
  // x <= -1 and -x <= -1
  auto r = simplex_maximize({Rational(1)}, {}, {row({1}, -1), row({-1}, -1)});
  CHECK(r.status == SimplexStatus::Infeasible);

  // max x, no constraints
  r = simplex_maximize({Rational(1)}, {}, {});
  CHECK(r.status == SimplexStatus::Unbounded);

  // redundant equality pair stays feasible: x = 1, x = 1, max x
  r = simplex_maximize({Rational(1)}, {row({1}, 1), row({1}, 1)}, {});
  CHECK(r.status == SimplexStatus::Optimal);
  CHECK(r.objective == 1);
}

TEST_CASE("lp_feasible_strict spec examples") {
  CHECK(lp_feasible_strict({}, {}, {}));
  // x < 0 and -x < 0 contradict
  CHECK_FALSE(lp_feasible_strict({}, {}, {row({1}, 0), row({-1}, 0)}));
  // x + y = 1, x < 1, y < 1 has (1/2, 1/2)
  CHECK(lp_feasible_strict({row({1, 1}, 1)}, {}, {row({1, 0}, 1), row({0, 1}, 1)}));
}

TEST_CASE("lp_feasible_strict boundary cases") {
  // x <= 0 weakly and x > 0 strictly (as -x < 0) cannot both hold
  CHECK_FALSE(lp_feasible_strict({}, {row({1}, 0)}, {row({-1}, 0)}));
  // equality forces the strict row onto its boundary
  CHECK_FALSE(lp_feasible_strict({row({1}, 0)}, {}, {row({1}, 0)}));
  // strict feasibility in a wedge
  CHECK(lp_feasible_strict({}, {row({1, 1}, 4)}, {row({-1, 0}, 0), row({0, -1}, 0)}));
}

TEST_CASE("lp_feasible_strict agrees with brute-force vertex enumeration") {
  std::mt19937_64 rng(20240811u);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int nvars = draw(1, 3);
    auto gen_rows = [&](int count) {
      std::vector<LinearConstraint> rows;
      for (int i = 0; i < count; ++i) {
        std::vector<int> coeffs;
        for (int j = 0; j < nvars; ++j) coeffs.push_back(draw(-3, 3));
        rows.push_back(row(coeffs, draw(-3, 3)));
      }
      return rows;
    };
    const auto eq = gen_rows(draw(0, 1));
    const auto weak = gen_rows(draw(0, 3));
    const auto strict = gen_rows(draw(0, 3));
    const bool fast = lp_feasible_strict(eq, weak, strict);
    const bool slow = oracle::feasible_strict_bruteforce(eq, weak, strict, nvars,
                                                         Rational(1000000));
    CHECK_MESSAGE(fast == slow, "iteration ", iter, " nvars ", nvars);
    ++checked;
  }
  CHECK(checked == 300);
}
