#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "patchwork/constructions.hpp"
#include "patchwork/subdivision.hpp"

using namespace patchwork;

namespace {

LiftingFunction lift_of(const LatticePolygon& domain,
                        const std::function<QQ(const LatticePoint&)>& f) {
  LiftingFunction out;
  out.domain = domain;
  for (const auto& p : domain.lattice_points()) out.values[p] = f(p);
  return out;
}

}  // namespace

TEST_CASE("unit square split along the diagonal") {
  LatticePolygon sq = make_rect(0, 0, 1, 1);
  LiftingFunction lift = lift_of(sq, [](const LatticePoint& p) {
    return p.x == 1 && p.y == 1 ? QQ(1) : QQ(0);
  });
  Subdivision sub = regular_subdivision(sq, lift);
  REQUIRE(sub.cells.size() == 2);
  REQUIRE(sub.shared_edges.size() == 1);
  CHECK(same_segment(sub.shared_edges[0].seg, {{1, 0}, {0, 1}}));
  CHECK(is_convex_subdivision(sub, lift));

  // Lift identically zero is affine across the diagonal: not convex for the
  // same two-cell subdivision.
  LiftingFunction zero = lift_of(sq, [](const LatticePoint&) { return QQ(0); });
  CHECK_FALSE(is_convex_subdivision(sub, zero));
}

TEST_CASE("constant lift gives the trivial subdivision") {
  LatticePolygon rect = make_rect(0, 0, 4, 3);
  LiftingFunction lift = lift_of(rect, [](const LatticePoint&) { return QQ(5); });
  Subdivision sub = regular_subdivision(rect, lift);
  REQUIRE(sub.cells.size() == 1);
  CHECK(sub.cells[0] == rect);
  CHECK(sub.shared_edges.empty());
  CHECK(is_convex_subdivision(sub, lift));
  CHECK(adjacency_graph(sub).size() == 1);

  OrientedAdjacency oa = sweep_orientation(sub, QQ(0), QQ(1));
  CHECK(oa.edges.empty());
  CHECK(oa.incoming_facets[0].empty());
}

TEST_CASE("stacking slabs from the nu_P profile") {
  const long long k = 2, l = 3;
  LiftingProfiles lifts = lifting_profiles(k, l);
  CHECK(lifts.nu_P.at({0, 0}) == QQ(2));
  CHECK(lifts.nu_P.at({0, 3}) == QQ(0));
  CHECK(lifts.nu_L.at({0, 0}) == QQ(1));
  CHECK(lifts.nu_L.at({0, 2}) == QQ(1));

  LatticePolygon delta = make_rect(0, 0, 4 * k, 4 * l);
  Subdivision sub = regular_subdivision(delta, lifts.nu_P);
  REQUIRE(sub.cells.size() == l + 2);
  std::vector<LatticePolygon> want = {make_rect(0, 0, 4 * k, 2), make_rect(0, 2, 4 * k, 3),
                                      make_rect(0, 3, 4 * k, 7), make_rect(0, 7, 4 * k, 11),
                                      make_rect(0, 11, 4 * k, 12)};
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : sub.cells)
      if (g == w) found = true;
    CHECK(found);
  }
  CHECK(is_convex_subdivision(sub, lifts.nu_P));

  // The slab stack is a path graph.
  auto adj = adjacency_graph(sub);
  int deg1 = 0, deg2 = 0;
  for (const auto& nb : adj) {
    if (nb.size() == 1) ++deg1;
    if (nb.size() == 2) ++deg2;
  }
  CHECK(deg1 == 2);
  CHECK(deg2 == static_cast<int>(sub.cells.size()) - 2);

  // Sweep upward: the incoming facet of each upper slab is its bottom edge.
  OrientedAdjacency oa = sweep_orientation(sub, QQ(0), QQ(1));
  for (size_t i = 0; i < sub.cells.size(); ++i) {
    long long ymin = 1000, ymax = -1000;
    for (const auto& v : sub.cells[i].vertices) {
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
    if (ymin == 0) {
      CHECK(oa.incoming_facets[i].empty());
    } else {
      REQUIRE(oa.incoming_facets[i].size() == 1);
      CHECK(same_segment(oa.incoming_facets[i][0], {{0, ymin}, {4 * k, ymin}}));
    }
    // Not every facet is incoming.
    CHECK(oa.incoming_facets[i].size() < sub.cells[i].edges().size());
  }
}

TEST_CASE("2x2 grid of unit squares is a 4-cycle; generic sweep is acyclic") {
  LatticePolygon sq = make_rect(0, 0, 2, 2);
  LiftingFunction lift = lift_of(sq, [](const LatticePoint& p) {
    return QQ((p.x - 1) * (p.x - 1) + (p.y - 1) * (p.y - 1));
  });
  Subdivision sub = regular_subdivision(sq, lift);
  REQUIRE(sub.cells.size() == 4);
  auto adj = adjacency_graph(sub);
  for (const auto& nb : adj) CHECK(nb.size() == 2);

  OrientedAdjacency oa = sweep_orientation(sub, QQ(1), QQ(2));
  CHECK(oa.topological_order.size() == 4);

  // Direction parallel to a shared edge is rejected with the edge named.
  CHECK_THROWS_AS(sweep_orientation(sub, QQ(0), QQ(1)), std::invalid_argument);
}

TEST_CASE("random lifts: hull round-trip, area additivity, acyclic sweeps") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long long> size(2, 6);
  std::uniform_int_distribution<long long> val(0, 40);
  int sweeps_checked = 0;
  for (int iter = 0; iter < 120; ++iter) {
    LatticePolygon rect = make_rect(0, 0, size(rng), size(rng));
    LiftingFunction lift = lift_of(rect, [&](const LatticePoint&) {
      return QQ(val(rng), 1 + static_cast<long long>(rng() % 4));
    });
    Subdivision sub = regular_subdivision(rect, lift);
    CHECK(is_convex_subdivision(sub, lift));
    long long total = 0;
    for (const auto& cell : sub.cells) total += area2(cell);
    CHECK(total == area2(rect));

    // A direction pairing nonzero with every shared edge's normal.
    QQ dx(1, 997), dy(1);
    bool ok = true;
    for (const auto& se : sub.shared_edges) {
      QQ nx = QQ(-(se.seg.b.y - se.seg.a.y)), ny = QQ(se.seg.b.x - se.seg.a.x);
      if (dx * nx + dy * ny == 0) ok = false;
    }
    if (ok) {
      OrientedAdjacency oa = sweep_orientation(sub, dx, dy);
      CHECK(oa.topological_order.size() == sub.cells.size());
      ++sweeps_checked;
      for (size_t i = 0; i < sub.cells.size(); ++i)
        CHECK(oa.incoming_facets[i].size() < sub.cells[i].edges().size());
    }
  }
  CHECK(sweeps_checked >= 100);
}
