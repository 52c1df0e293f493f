#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_configs.hpp"

#include "lextri/subdivide.hpp"

#include <set>

using namespace lextri;
using namespace lextri::testcfg;

namespace {

std::set<Cell> cells(const std::vector<Cell>& cs) { return {cs.begin(), cs.end()}; }

}  // namespace

TEST_CASE("trivial subdivision") {
  const PointSet sq = square();
  CHECK(trivial(sq).cells == cells({{1, 2, 3, 4}}));
  const PointSet sqc = square_center();
  CHECK(trivial(sqc).cells == cells({{1, 2, 3, 4, 5}}));
}

TEST_CASE("pull_point") {
  const PointSet sq = square();
  CHECK(pull_point(trivial(sq), 1).cells == cells({{1, 2, 4}, {1, 3, 4}}));

  const PointSet sqc = square_center();
  CHECK(pull_point(trivial(sqc), 5).cells ==
        cells({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}));

  // pulling a pyramid apex leaves the cell unchanged
  const PointSet fp = flat_pyramid();
  const Subdivision s = trivial(fp);
  CHECK(pull_point(s, 5).cells == s.cells);

  // absent labels are a no-op
  const Subdivision pushed = push_point(trivial(sqc), 5);
  CHECK(pull_point(pushed, 5).cells == pushed.cells);
}

TEST_CASE("push_point") {
  const PointSet sq = square();
  CHECK(push_point(trivial(sq), 4).cells == cells({{1, 2, 3}, {2, 3, 4}}));

  const PointSet sqc = square_center();
  CHECK(push_point(trivial(sqc), 5).cells == cells({{1, 2, 3, 4}}));

  const PointSet fp = flat_pyramid();
  const Subdivision s = trivial(fp);
  CHECK(push_point(s, 5).cells == s.cells);

  // a present non-vertex on the hull boundary is simply dropped
  const PointSet sqm = square_mid();
  CHECK(push_point(trivial(sqm), 2).cells == cells({{1, 3, 4, 5}}));
}

TEST_CASE("lex_subdivision") {
  const PointSet sq = square();
  CHECK(lex_subdivision(sq, {{1, Sign::Pull}}).cells == cells({{1, 2, 4}, {1, 3, 4}}));
  CHECK(lex_subdivision(sq, {}).cells == trivial(sq).cells);

  const PointSet sqc = square_center();
  CHECK(lex_subdivision(sqc, {{5, Sign::Push}, {1, Sign::Pull}}).cells ==
        cells({{1, 2, 3}, {1, 3, 4}}));
}

TEST_CASE("lex_triangulation") {
  const PointSet sq = square();
  CHECK(lex_triangulation(sq, all_pull(sq)).cells == cells({{1, 2, 4}, {1, 3, 4}}));
  CHECK(lex_triangulation(
            sq, {{4, Sign::Push}, {1, Sign::Pull}, {2, Sign::Pull}, {3, Sign::Pull}})
            .cells == cells({{1, 2, 3}, {2, 3, 4}}));

  const PointSet pent = pentagon();
  const Triangulation fan = lex_triangulation(pent, all_pull(pent));
  CHECK(fan.cells == cells({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));

  CHECK_THROWS_AS(lex_triangulation(sq, {{1, Sign::Pull}}), std::invalid_argument);
}

TEST_CASE("validate") {
  const PointSet sq = square();
  Subdivision good{&sq, cells({{1, 2, 4}, {1, 3, 4}})};
  CHECK(validate(good).valid);

  Subdivision overlap{&sq, cells({{1, 2, 4}, {2, 3, 4}})};
  const ValidationReport r1 = validate(overlap);
  CHECK_FALSE(r1.valid);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].kind == Violation::Kind::ImproperPair);
  // the volume sum alone is blind to this overlap
  CHECK(volume(sq, {1, 2, 4}) + volume(sq, {2, 3, 4}) == volume(sq, sq.all_labels()));

  Subdivision missing{&sq, cells({{1, 2, 4}})};
  const ValidationReport r2 = validate(missing);
  CHECK_FALSE(r2.valid);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].kind == Violation::Kind::VolumeMismatch);

  Subdivision degenerate{&sq, cells({{1, 2}, {1, 2, 4}, {1, 3, 4}})};
  const ValidationReport r3 = validate(degenerate);
  CHECK_FALSE(r3.valid);
  CHECK(r3.violations[0].kind == Violation::Kind::DegenerateCell);
}

TEST_CASE("is_refinement") {
  const PointSet sq = square();
  const Subdivision t = pull_point(trivial(sq), 1);
  CHECK(is_refinement(t, trivial(sq)));
  CHECK_FALSE(is_refinement(trivial(sq), t));
  CHECK(is_refinement(t, t));
}

TEST_CASE("present_points") {
  const PointSet sqc = square_center();
  CHECK(present_points(push_point(trivial(sqc), 5)) == Cell{1, 2, 3, 4});
  CHECK(present_points(trivial(sqc)) == Cell{1, 2, 3, 4, 5});
}

TEST_CASE("script prefixes refine and never regain points") {
  Rng rng(2024u);
  for (const PointSet& ps : {square(), square_center(), pentagon(), square_mid()}) {
    for (int iter = 0; iter < 20; ++iter) {
      const LexScript script = random_script(ps, rng);
      Subdivision prev = trivial(ps);
      Cell prev_present = present_points(prev);
      for (const ScriptEntry& e : script) {
        const Subdivision next =
            e.sign == Sign::Pull ? pull_point(prev, e.label) : push_point(prev, e.label);
        CHECK(is_refinement(next, prev));
        const Cell next_present = present_points(next);
        CHECK(cell_subset(next_present, prev_present));
        CHECK(validate(next).valid);
        prev = next;
        prev_present = next_present;
      }
      // a full script triangulates
      for (const Cell& c : prev.cells) {
        CHECK(static_cast<int>(c.size()) == ps.dim() + 1);
        CHECK(simplex_volume(ps.points_of(c)) > 0);
      }
      Rational total = 0;
      for (const Cell& c : prev.cells) total += volume(ps, c);
      CHECK(total == volume(ps, ps.all_labels()));
    }
  }
}

TEST_CASE("pyramid apex may move anywhere in the script") {
  const PointSet fp = flat_pyramid();
  Rng rng(7u);
  for (int iter = 0; iter < 30; ++iter) {
    LexScript base = random_script(fp, rng);
    LexScript no_apex;
    Sign apex_sign = Sign::Pull;
    for (const ScriptEntry& e : base) {
      if (e.label == 5)
        apex_sign = e.sign;
      else
        no_apex.push_back(e);
    }
    const Triangulation want = lex_triangulation(fp, base);
    for (std::size_t pos = 0; pos <= no_apex.size(); ++pos) {
      LexScript moved = no_apex;
      moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(pos), {5, apex_sign});
      CHECK(lex_triangulation(fp, moved).cells == want.cells);
    }
  }
}

TEST_CASE("regular_from_heights") {
  const PointSet sq = square();
  CHECK(regular_from_heights(sq, {0, 0, 0, 1}, LiftSide::Lower).cells ==
        cells({{1, 2, 3}, {2, 3, 4}}));
  CHECK(regular_from_heights(sq, {0, 0, 0, 0}, LiftSide::Lower).cells ==
        trivial(sq).cells);
  // flat but tilted lifts are degenerate too
  CHECK(regular_from_heights(sq, {0, 1, 0, 1}, LiftSide::Lower).cells ==
        trivial(sq).cells);

  const PointSet sqc = square_center();
  CHECK(regular_from_heights(sqc, {0, 0, 0, 0, -1}, LiftSide::Lower).cells ==
        cells({{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}));

  // upper facets of the same lift give the complementary subdivision
  CHECK(regular_from_heights(sq, {0, 0, 0, 1}, LiftSide::Upper).cells ==
        cells({{1, 2, 4}, {1, 3, 4}}));

  // ties produce non-simplicial cells, returned as-is
  const PointSet hexa = hexagon();
  const Subdivision tie =
      regular_from_heights(hexa, {0, 0, 0, 0, 0, 1}, LiftSide::Lower);
  CHECK(tie.cells == cells({{1, 2, 3, 4, 5}, {1, 5, 6}}));
  CHECK(validate(tie).valid);
  // the upper side of the same lift is the fan at the raised point
  CHECK(regular_from_heights(hexa, {0, 0, 0, 0, 0, 1}, LiftSide::Upper).cells ==
        cells({{1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}}));
}

TEST_CASE("lex_as_lift certifies scripts") {
  const PointSet sq = square();
  const LexScript push4 = {
      {4, Sign::Push}, {1, Sign::Pull}, {2, Sign::Pull}, {3, Sign::Pull}};
  const std::vector<Rational> h = lex_as_lift(sq, push4);
  CHECK(h[3] > 0);
  for (int i = 0; i < 3; ++i) CHECK(h[static_cast<std::size_t>(i)] < 0);
  CHECK(abs(h[3]) > abs(h[0]));  // first processed dominates
  CHECK(regular_from_heights(sq, h, LiftSide::Lower).cells ==
        cells({{1, 2, 3}, {2, 3, 4}}));

  const LexScript pulls = all_pull(sq);
  const std::vector<Rational> h2 = lex_as_lift(sq, pulls);
  for (const Rational& v : h2) CHECK(v < 0);
  CHECK(abs(h2[0]) > abs(h2[1]));
  CHECK(regular_from_heights(sq, h2, LiftSide::Lower).cells ==
        cells({{1, 2, 4}, {1, 3, 4}}));
}

TEST_CASE("lift consistency on random scripts") {
  Rng rng(99u);
  for (const PointSet& ps : {square(), square_center(), square_mid()}) {
    for (int iter = 0; iter < 15; ++iter) {
      const LexScript script = random_script(ps, rng);
      const std::vector<Rational> h = lex_as_lift(ps, script);
      CHECK(regular_from_heights(ps, h, LiftSide::Lower).cells ==
            lex_subdivision(ps, script).cells);
    }
  }
}

// The cells of a triangulation induce on every facet of the hull exactly
// the lexicographic triangulation of the facet under the induced script.
TEST_CASE("facet triangulations follow the induced script") {
  const PointSet sqm = square_mid();
  const Cell bottom{1, 2, 3};  // collinear facet of the hull
  // 1-d point set of the bottom edge, labels remapped 1->1, 2->2, 3->3
  const PointSet line = segment();
  Rng rng(31u);
  for (int iter = 0; iter < 40; ++iter) {
    const LexScript script = random_script(sqm, rng);
    const Triangulation t = lex_triangulation(sqm, script);

    // edges of t lying in the bottom facet
    std::set<Cell> induced;
    for (const Cell& c : t.cells) {
      Cell on = cell_intersect(c, bottom);
      if (on.size() == 2) induced.insert(on);
    }

    LexScript sub;
    for (const ScriptEntry& e : script)
      if (cell_contains(bottom, e.label)) sub.push_back(e);
    const Triangulation expect = lex_triangulation(line, sub);
    CHECK(induced == expect.cells);
  }
}
