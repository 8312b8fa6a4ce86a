#pragma once

#include "helab/state.hpp"

namespace helab {

// Tangent vector to the solution space at a state: Cauchy data (dA, dE) of a
// linearized solution. dE is transverse and mean-free; dA is mean-free and may
// carry a gradient (pure-gauge) part in addition to a transverse part.
struct Variation {
    GridSpec grid;
    VectorField dA, dE;
};

// Validating constructor, mirroring make_state's repair policy: roundoff-level
// defects (<= 1e-8 relative) are projected away silently, larger ones throw.
// dA only has its mean removed; its gradient part is legitimate content.
Variation make_variation(const VectorField& dA, const VectorField& dE);

// Pure-gauge direction (grad f, 0) from a mean-free scalar.
Variation gauge_direction(const ScalarField& f);

// Transport along the flow: the transverse part of dA and dE evolve as a
// Maxwell solution (via dB = curl dA), the gauge part of dA rides along
// unchanged, matching d(dA)/dt = -dE in temporal-Coulomb gauge.
Variation evolve_variation(const Variation& v, double dt);

// L2 norms used for scale estimates in tolerances.
double variation_scale(const Variation& a, const Variation& b);

}  // namespace helab
