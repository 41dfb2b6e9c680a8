#pragma once

#include <array>
#include <vector>

#include "patchwork/arrangement.hpp"

namespace patchwork {

struct Tridegree {
  long long d1 = 0, d2 = 0, d3 = 0;
  Tridegree normalized() const;  // sorted so d1 >= d2 >= d3
};

// Z/2 homology classes of (RP^1)^3 (rank 3) and of the torus (rank 2).
struct HomologyClass {
  std::vector<int> bits;  // entries in {0,1}
};

// a1*b1 + a2*b2 + a3*b3 over Z/2; throws on rank mismatch.
int intersection_form(const HomologyClass& a, const HomologyClass& b);

HomologyClass surface_class(const Tridegree& d);

// (h20, h11) for tridegree (d1, d2, 2).
std::pair<long long, long long> hodge_numbers(long long d1, long long d2);

struct BettiBounds {
  long long b0_bound = 0;    // floor((h20+h11+1)/2)
  long long b1_bound = 0;    // h20+h11
  long long b1_max = 0;      // 7 d1 d2 - 3 d1 - 3 d2 + 5
  long long b1_max_even = 0; // parity-refined
};
BettiBounds betti_bounds(long long d1, long long d2);

// Arrangement with face signs; the node blow-up only toggles bookkeeping
// because the negative-side Euler characteristic is preserved by the local
// surgery.
struct RegionComplex {
  Arrangement arr;
  std::vector<int> face_sign;  // +1 / -1 per fine face
  bool blowup_applied = false;

  long long ambient_chi() const {
    return blowup_applied ? -static_cast<long long>(arr.nodes.size()) : 0;
  }
};

// Propagates the seed sign across the arrangement (flip across curve edges,
// constant across seams). Throws std::invalid_argument on inconsistent
// propagation or when the seed face cannot be located.
RegionComplex sign_regions(Arrangement arr, int seed_fine_face, int seed_sign);
RegionComplex sign_regions(Arrangement arr, const QPoint& seed_point, int seed_sign);

// Replaces every node vertex by the exceptional-arc surgery. Throws when
// already applied or when some node has non-alternating sector signs.
RegionComplex blow_up_nodes(RegionComplex rc);

// Closed-region analysis of one sign.
struct RegionComponent {
  std::vector<int> faces;  // fine face ids
  long long chi = 0;
  bool has_boundary = false;
  // Cycle basis classes: (x parity, y parity, exceptional-arc parity).
  std::vector<std::array<int, 3>> cycle_basis;
};
struct RegionAnalysis {
  std::vector<RegionComponent> components;
  long long chi_total = 0;
};
RegionAnalysis analyze_region(const RegionComplex& rc, int sign);

// Orientability per negative-region component: nonorientable iff some basis
// cycle has torus class (a,b) with a*k + b*l odd (k,l are the first two
// entries of the surface tridegree). An odd exceptional parity marks data
// that cannot come from an embedded surface; it is reported separately.
struct OrientabilityReport {
  std::vector<bool> orientable;        // per component of the negative region
  std::vector<bool> exceptional_odd;   // per component; should never be true
};
OrientabilityReport orientability_check(const RegionComplex& rc, long long k, long long l);

struct SurfaceComponent {
  long long chi = 0;
  bool orientable = true;
  long long genus_or_crosscaps = 0;
  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};
struct SurfaceTopology {
  std::vector<SurfaceComponent> components;  // sorted by (chi, orientable)
  long long b0 = 0, b1 = 0, chi = 0;
};

// Doubles the negative region: boundary components double to one closed
// surface with chi = 2 chi(W), closed components to two copies. Requires the
// blow-up to have been applied. Throws if a component has an odd exceptional
// cycle (not an embedded surface).
SurfaceTopology double_cover_topology(const RegionComplex& rc, long long k, long long l);

// True iff every component has even Euler characteristic.
bool euler_parity_guard(const SurfaceTopology& st);

}  // namespace patchwork
