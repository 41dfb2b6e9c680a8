#pragma once

#include "patchwork/bundle.hpp"

namespace patchwork::fixtures {

// Oracle bundles: every cell carries its polynomial, so the Viro polynomial
// and the glued chart can be compared independently.
Bundle conic_bundle();   // unit square split along the diagonal
Bundle slabs_bundle();   // three stacked slabs of a (1,3) curve
Bundle nodal_bundle();   // a nodal diamond glued to a smooth triangle

// Small synthetic surface bundles with hand-computed topology.
Bundle synthetic_disk_bundle();     // doubled disk: one sphere
Bundle synthetic_annulus_bundle();  // doubled annulus: one torus

// Block bundles of the constructions.
Bundle family_bundle(long long k, long long l);
Bundle c442_bundle();

// Smoothing directions of the declared nodes of an oracle bundle under the
// uncorrected Viro polynomial at parameter t: pairing parities for
// per_quadrant_counts, determined exactly from the sign of the Viro tail at
// the algebraic node and the cell polynomial's sector signs.
std::map<QPoint, int> oracle_node_resolutions(const Bundle& b, const ExpandedFixture& ex,
                                              const GluedCurve& g, const QQ& t);

}  // namespace patchwork::fixtures
