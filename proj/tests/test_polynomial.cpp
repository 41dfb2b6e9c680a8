#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "patchwork/polynomial.hpp"

using namespace patchwork;

namespace {

SparsePolynomial make_poly(std::initializer_list<std::tuple<long long, long long, long long>> cs) {
  std::map<LatticePoint, QQ> m;
  for (const auto& [i, j, c] : cs) m[{i, j}] = QQ(c);
  return SparsePolynomial(std::move(m));
}

}  // namespace

TEST_CASE("univariate root machinery") {
  using namespace upoly;
  // x^2 - 3x + 2: roots 1, 2.
  Poly p = {QQ(2), QQ(-3), QQ(1)};
  CHECK(sturm_positive_roots(p) == 2);
  CHECK(sturm_negative_roots(p) == 0);
  CHECK(positive_roots_with_multiplicity(p) == 2);
  CHECK_FALSE(has_multiple_root_in_torus(p));

  // x^2 + 1: no real roots.
  Poly q = {QQ(1), QQ(0), QQ(1)};
  CHECK(sturm_positive_roots(q) == 0);
  CHECK(sturm_negative_roots(q) == 0);

  // (x-1)^2 (x+2): multiplicities.
  Poly r = {QQ(2), QQ(-3), QQ(0), QQ(1)};
  CHECK(positive_roots_with_multiplicity(r) == 2);
  CHECK(negative_roots_with_multiplicity(r) == 1);
  CHECK(has_multiple_root_in_torus(r));

  // s^3 (x+5): root at zero is stripped, torus multiplicity clean.
  Poly s = {QQ(0), QQ(0), QQ(0), QQ(5), QQ(1)};
  CHECK(negative_roots_with_multiplicity(s) == 1);
  CHECK_FALSE(has_multiple_root_in_torus(s));
}

TEST_CASE("truncation") {
  SparsePolynomial f = make_poly({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  SparsePolynomial t = truncation(f, LatticeSegment{{1, 0}, {0, 1}});
  CHECK(t == make_poly({{1, 0, 1}, {0, 1, 1}}));
  // Idempotent.
  CHECK(truncation(t, LatticeSegment{{1, 0}, {0, 1}}) == t);
  // Vertex truncation.
  CHECK(truncation(f, LatticePoint{0, 0}) == make_poly({{0, 0, 1}}));
}

TEST_CASE("is_pns") {
  // x^2 + y^2 - 1: edge truncations squarefree in the torus.
  SparsePolynomial circle = make_poly({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
  CHECK(is_pns(circle));

  // (x-1)^2 + y: bottom edge truncation (x-1)^2 has a double root.
  SparsePolynomial bad = make_poly({{2, 0, 1}, {1, 0, -2}, {0, 0, 1}, {0, 1, 1}});
  CHECK_FALSE(is_pns(bad));

  SparsePolynomial degenerate = make_poly({{0, 0, 1}, {1, 0, 1}});
  CHECK_THROWS_AS(is_pns(degenerate), std::invalid_argument);
}

TEST_CASE("edge root data") {
  // Bottom edge of x^2 - 3x + 2 + y.
  SparsePolynomial f = make_poly({{2, 0, 1}, {1, 0, -3}, {0, 0, 2}, {0, 1, 1}});
  EdgeRootData rd = edge_root_data(f, {{0, 0}, {2, 0}});
  CHECK(rd.positive_roots == 2);
  CHECK(rd.negative_roots == 0);
  CHECK_FALSE(rd.has_multiple_root);

  SparsePolynomial g = make_poly({{2, 0, 1}, {0, 0, 1}, {0, 1, 1}});
  EdgeRootData rg = edge_root_data(g, {{0, 0}, {2, 0}});
  CHECK(rg.positive_roots == 0);
  CHECK(rg.negative_roots == 0);

  // Invariance under re-parametrizing the edge.
  EdgeRootData rd2 = edge_root_data(f, {{2, 0}, {0, 0}});
  CHECK(rd2.positive_roots == rd.positive_roots);
  CHECK(rd2.negative_roots == rd.negative_roots);
}

TEST_CASE("viro polynomial") {
  // Two-cell conic family on the unit square.
  ViroFamily fam;
  fam.lift.domain = make_rect(0, 0, 1, 1);
  fam.lift.values[{0, 0}] = QQ(0);
  fam.lift.values[{1, 0}] = QQ(0);
  fam.lift.values[{0, 1}] = QQ(0);
  fam.lift.values[{1, 1}] = QQ(1);
  fam.cells.push_back(
      {LatticePolygon{{{0, 0}, {1, 0}, {0, 1}}}, make_poly({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})});
  fam.cells.push_back(
      {LatticePolygon{{{1, 0}, {1, 1}, {0, 1}}}, make_poly({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}})});

  SparsePolynomial ft = viro_polynomial(fam, QQ(1, 16));
  CHECK(ft.coefficient({0, 0}) == QQ(1));
  CHECK(ft.coefficient({1, 0}) == QQ(1));
  CHECK(ft.coefficient({1, 1}) == QQ(1, 16));
  CHECK_THROWS_AS(viro_polynomial(fam, QQ(0)), std::invalid_argument);

  // Disagreement on the shared edge is rejected.
  ViroFamily bad = fam;
  bad.cells[1].second = make_poly({{1, 0, 2}, {0, 1, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(viro_polynomial(bad, QQ(1, 16)), std::invalid_argument);
}

TEST_CASE("moment map") {
  LatticePolygon sq = make_rect(0, 0, 1, 1);
  QPoint c = moment_map(sq, QQ(1), QQ(1));
  CHECK(c == QPoint{QQ(1, 2), QQ(1, 2)});
  QPoint m = moment_map(sq, QQ(-1), QQ(1));
  CHECK(m == QPoint{QQ(-1, 2), QQ(1, 2)});
  CHECK_THROWS_AS(moment_map(sq, QQ(0), QQ(1)), std::invalid_argument);

  // Weight concentration: x -> 0 pulls toward the left edge.
  QPoint left = moment_map(sq, QQ(1, 1000), QQ(1));
  CHECK(left.x < QQ(1, 100));
}

TEST_CASE("numeric chart of a line") {
  SparsePolynomial line = make_poly({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});  // x + y - 1
  TracedChart tc = numeric_chart(line, 64);
  CHECK(tc.quadrants[quadrant_index(false, false)].components == 1);
  CHECK(tc.quadrants[quadrant_index(true, false)].components == 1);
  CHECK(tc.quadrants[quadrant_index(false, true)].components == 1);
  CHECK(tc.quadrants[quadrant_index(true, true)].components == 0);

  SparsePolynomial empty = make_poly({{2, 0, 1}, {0, 2, 1}, {0, 0, 1}});  // x^2+y^2+1
  TracedChart te = numeric_chart(empty, 32);
  for (int qi = 0; qi < 4; ++qi) CHECK(te.quadrants[qi].components == 0);

  CHECK_THROWS_AS(numeric_chart(line, 4), std::invalid_argument);
}

TEST_CASE("monomial scaling invariance of traced charts") {
  // One-cell family: the chart of f_t has the same per-quadrant counts as f.
  SparsePolynomial f = make_poly({{0, 0, -3}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}});
  ViroFamily fam;
  fam.lift.domain = f.newton();
  for (const auto& p : f.newton().lattice_points())
    fam.lift.values[p] = QQ(p.x + 2 * p.y);  // affine lift: trivial subdivision
  fam.cells.push_back({f.newton(), f});
  for (QQ t : {QQ(1, 8), QQ(1, 32)}) {
    SparsePolynomial ft = viro_polynomial(fam, t);
    TracedChart a = numeric_chart(f, 48), b = numeric_chart(ft, 48);
    for (int qi = 0; qi < 4; ++qi) CHECK(a.quadrants[qi].components == b.quadrants[qi].components);
  }
}

TEST_CASE("pns is invariant under positive torus scalings") {
  SparsePolynomial f = make_poly({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}, {1, 1, 3}});
  // f(z1,z2) -> l0 f(l1 z1, l2 z2) with positive rationals.
  std::map<LatticePoint, QQ> scaled;
  QQ l0(3, 2), l1(2, 5), l2(7);
  for (const auto& [p, c] : f.coefficients()) {
    QQ v = l0 * c;
    for (int i = 0; i < p.x; ++i) v *= l1;
    for (int j = 0; j < p.y; ++j) v *= l2;
    scaled[p] = v;
  }
  CHECK(is_pns(f) == is_pns(SparsePolynomial(scaled)));
}
