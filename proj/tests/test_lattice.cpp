#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "patchwork/lattice.hpp"

using namespace patchwork;

TEST_CASE("integer length") {
  CHECK(integer_length({{0, 3}, {6, 1}}) == 2);
  CHECK(integer_length({{0, 0}, {5, 0}}) == 5);
  CHECK(integer_length({{0, 0}, {4, 6}}) == 2);
}

TEST_CASE("area2") {
  CHECK(area2(LatticePolygon{{{0, 0}, {1, 0}, {0, 1}}}) == 1);
  CHECK(area2(make_rect(0, 0, 4, 4)) == 32);  // [0,4k]x[0,4l] at k=l=1: 2*16*4 = 128? no: 2*16
  // The trapezoid Conv((0,0),(6,0),(6,1),(0,3)).
  CHECK(area2(LatticePolygon{{{0, 0}, {6, 0}, {6, 1}, {0, 3}}}) == 24);
}

TEST_CASE("boundary and interior counts") {
  CHECK(boundary_count(make_rect(0, 0, 4, 2)) == 12);
  CHECK(boundary_count(make_rect(0, 0, 7, 5)) == 24);
  CHECK(boundary_count(LatticePolygon{{{0, 0}, {1, 0}, {0, 1}}}) == 3);
  CHECK(interior_count(make_rect(0, 0, 3, 4)) == 2 * 3);  // (k-1)(l-1)
  CHECK(interior_count(make_rect(0, 0, 1, 1)) == 0);
  CHECK(interior_count(make_rect(0, 0, 8, 3)) == 14);
}

TEST_CASE("convex hull basics") {
  LatticePolygon square = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(square.vertices.size() == 4);
  CHECK(area2(square) == 2);
  CHECK(is_valid_polygon(square));

  LatticePolygon pt = convex_hull({{3, 5}});
  CHECK(pt.dim() == 0);

  LatticePolygon seg = convex_hull({{0, 0}, {2, 2}, {1, 1}});
  CHECK(seg.dim() == 1);
  CHECK(integer_length({seg.vertices[0], seg.vertices[1]}) == 2);

  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);

  // Support shift: y^3 P for P on [0,8]x[0,3] lands on [0,8]x[3,6].
  std::vector<LatticePoint> shifted;
  for (const auto& p : make_rect(0, 0, 8, 3).lattice_points())
    shifted.push_back({p.x, p.y + 3});
  CHECK(convex_hull(shifted) == make_rect(0, 3, 8, 6));
}

TEST_CASE("hull is idempotent and order-insensitive") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> coord(-12, 12);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<LatticePoint> pts;
    int n = 3 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    LatticePolygon h1 = convex_hull(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    LatticePolygon h2 = convex_hull(pts);
    CHECK(h1 == h2);
    if (h1.dim() == 2) {
      CHECK(is_valid_polygon(h1));
      CHECK(convex_hull(h1.vertices) == h1);
    }
  }
}

TEST_CASE("Pick identity on random polygons") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coord(0, 14);
  int tested = 0;
  for (int iter = 0; tested < 220 && iter < 5000; ++iter) {
    std::vector<LatticePoint> pts;
    int n = 3 + static_cast<int>(rng() % 14);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    LatticePolygon h = convex_hull(pts);
    if (h.dim() != 2 || interior_count(h) == 0) continue;
    ++tested;
    CHECK(area2(h) == 2 * interior_count(h) + boundary_count(h) - 2);
  }
  CHECK(tested == 220);
}

TEST_CASE("integer length is unimodular-invariant") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> coord(-9, 9);
  long long mats[][4] = {{1, 0, 0, 1}, {1, 1, 0, 1}, {2, 1, 1, 1}, {0, 1, 1, 0}, {3, 2, 1, 1}};
  for (int iter = 0; iter < 100; ++iter) {
    LatticePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    if (a == b) continue;
    for (auto& m : mats) {
      LatticePoint ta{m[0] * a.x + m[1] * a.y, m[2] * a.x + m[3] * a.y};
      LatticePoint tb{m[0] * b.x + m[1] * b.y, m[2] * b.x + m[3] * b.y};
      CHECK(integer_length({a, b}) == integer_length({ta, tb}));
    }
  }
}
