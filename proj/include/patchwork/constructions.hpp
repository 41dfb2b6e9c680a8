#pragma once

#include <optional>

#include "patchwork/chart.hpp"
#include "patchwork/surfaces.hpp"
#include "patchwork/transversality.hpp"

namespace patchwork {

// Block transform on polynomials: for odd h the exponent flip
// (i,j) -> (i, h-j) (the y^h f(x,1/y) substitution), for even h the shift
// (i,j) -> (i, j+h-1) (the y^(h-1) f(x,y) substitution). When the flip would
// produce negative exponents, the minimal monomial shift clearing them is
// applied and flagged.
struct FlipResult {
  SparsePolynomial poly;
  bool shift_applied = false;
  long long shift_amount = 0;
};
FlipResult flip_y(const SparsePolynomial& f, long long h);

// The stacking lifts: nu_P on [0,4k]x[0,4l] (anchor nu_P(.,2)=0, slopes
// -1, 0, 1, 2, ..., l on the slabs), nu_L = nu_M on [0,k]x[0,l] (anchor
// nu_L(.,1)=0, slopes -1, 1, 2, ..., l-1).
struct LiftingProfiles {
  LiftingFunction nu_P, nu_L, nu_M;
};
LiftingProfiles lifting_profiles(long long k, long long l);

// Runs glue -> arrangement -> signs -> blow-up -> double cover. (d1,d2) are
// the first two entries of the surface tridegree (the orientability pairing).
struct SurfacePipelineResult {
  GluedCurve glued;
  CurveSummary summary;
  RegionComplex regions;  // blow-up applied
  RegionAnalysis negative, positive;
  OrientabilityReport orientability;
  SurfaceTopology topology;
  long long chi_Yminus = 0, chi_Yplus = 0, b0_Yminus = 0;
  long long plus_disk_count = 0;  // chi=1 components of the positive region
};
SurfacePipelineResult run_surface_pipeline(const Subdivision& sub,
                                           const std::vector<CellChart>& charts,
                                           const QPoint& seed, int seed_sign, long long d1,
                                           long long d2);

// Fixture blocks of the tridegree-(2k,2l,2) family.
struct FamilyFixtures {
  long long k = 0, l = 0;
  CellChart base;       // the level block on [0,4k]x[0,4], 2k nodes
  CellChart bottom;     // the (4k,2) block on [0,4k]x[0,2], 2k nodes
  CellChart strip1;     // the (4k,1) closure block on [0,4k]x[0,1]
  CellChart strip_top;  // the (4k,1) top closure block on [0,4k]x[0,1]
  SparsePolynomial L, M;            // the (k,1) blocks through the nodes
  std::vector<QPoint> level_nodes;  // algebraic node representatives (2k points)
  QPoint seed;
  int seed_sign = -1;
};

// The blocks of the tridegree-(4,4,2) construction.
struct C442Fixtures {
  CellChart base;     // [0,8]x[0,3], 4 nodes
  CellChart harnack;  // [0,8]x[0,2], 8 components on its own torus
  SparsePolynomial L, M;  // the (2,1) blocks
  std::vector<QPoint> base_nodes;  // 4 algebraic node representatives
  QPoint seed;
  int seed_sign = -1;
};

struct FamilyReport {
  long long k = 0, l = 0;
  SurfacePipelineResult pipe;
  long long node_count = 0;
  bool nodes_ok = false;         // node count == 2kl
  bool b0_minus_ok = false;      // b0(Y-) >= (2k-2)(l-2)
  bool disks_ok = false;         // + disks >= (6k-4)(l-1)+3(2k-2)(l-2)
  bool components_ok = false;    // curve components <= (4k-1)(4l-1)+1-2kl
  bool orientable_ok = false;
  bool chi_even_ok = false;
  bool bounds_ok = false;        // Smith-Thom / Comessatti bounds
  bool identity_ok = false;      // b1 = 2 b0 - chi
  bool transversality_ok = false;
  bool general_position_ok = false;
  std::vector<std::string> failures;
  bool all_ok() const { return failures.empty(); }
};

FamilyReport assemble_family(const FamilyFixtures& fx);

struct C442Report {
  SurfacePipelineResult pipe;
  long long node_count = 0;
  long long h20 = 0, h11 = 0;
  long long viro_excess = 0;       // b1 - h11
  long long m_deficiency = 0;      // (sum b_i(X) - sum b_i(RX)) / 2
  bool profile_ok = false;         // b0=6, chi=-76, b1=88, {3S, 2S2, S40}
  std::vector<std::string> failures;
  bool all_ok() const { return failures.empty(); }
};

C442Report construct_442(const C442Fixtures& fx);

// Subdivision and transformed charts of the 442 stacking (rows 0..3, 3..6,
// 6..8 of [0,8]^2) and of the family stacking; exposed for the CLI and tests.
struct ExpandedBundle {
  Subdivision sub;
  std::vector<CellChart> charts;
  LiftingFunction lift;
};
ExpandedBundle expand_family_blocks(const FamilyFixtures& fx);
ExpandedBundle expand_442_blocks(const C442Fixtures& fx);

// Maximality of the (8,2) block: component count on its own torus equals
// interior_count + 1.
bool harnack_block_check(const CellChart& chart);

// Exact check that the space of (k,1)-polynomials through the given points
// is 2-dimensional and contains an irreducible element (and that L and M
// both vanish on the points).
struct GeneralPositionCheck {
  bool dimension_ok = false;
  long long dimension = 0;
  bool irreducible_ok = false;
  bool vanish_ok = false;
  bool ok() const { return dimension_ok && irreducible_ok && vanish_ok; }
};
GeneralPositionCheck check_general_position(long long k, const std::vector<QPoint>& nodes,
                                            const SparsePolynomial& L, const SparsePolynomial& M);

}  // namespace patchwork
