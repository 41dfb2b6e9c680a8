#pragma once

#include <map>
#include <optional>
#include <string>

#include "patchwork/constructions.hpp"

namespace patchwork {

// Raised on malformed files (missing fields, bad syntax); maps to exit 2.
struct BundleFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BundleCell {
  LatticePolygon polygon;
  CellChart chart;
  std::optional<SparsePolynomial> polynomial;
};

// Fixture bundle: either a plain patchwork (ambient + lift + cells) or a
// block bundle ("family" / "c442") that expands into one.
struct Bundle {
  std::string name;
  std::string kind;  // "patchwork", "family", "c442"
  int version = 1;

  // patchwork kind
  LatticePolygon ambient;
  LiftingFunction lift;
  std::vector<BundleCell> cells;

  std::optional<QPoint> seed;
  int seed_sign = -1;
  std::optional<std::array<long long, 3>> tridegree;

  // oracle data
  std::vector<QQ> t_schedule;
  // chart node position -> algebraic node representative
  std::vector<std::pair<QPoint, QPoint>> algebraic_nodes;

  // family / c442 kinds
  long long k = 0, l = 0;
  std::map<std::string, CellChart> blocks;
  std::optional<SparsePolynomial> L, M;
  std::vector<QPoint> level_nodes;
};

Bundle load_bundle(const std::string& path);
void save_bundle(const Bundle& b, const std::string& path);
std::string bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const std::string& text);

// Expansion to subdivision + charts (+ the Viro family when every cell of a
// patchwork bundle carries a polynomial).
struct ExpandedFixture {
  Subdivision sub;
  std::vector<CellChart> charts;
  LiftingFunction lift;
  std::optional<ViroFamily> family;
};
ExpandedFixture expand_bundle(const Bundle& b);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> passes;
  std::vector<std::string> failures;
  void check(bool cond, const std::string& what) {
    if (cond)
      passes.push_back(what);
    else {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Subdivision convexity, PNS, S-transversality, transversality hypotheses,
// chart validation and truncation compatibility, as applicable to the kind.
VerifyReport verify_bundle(const Bundle& b);

// Builds a Subdivision from explicitly listed cells (shared edges from
// matching maximal cell edges). Throws when cells do not tile the domain.
Subdivision make_subdivision(const LatticePolygon& domain,
                             const std::vector<LatticePolygon>& cells);

}  // namespace patchwork
