#pragma once

#include <cstdint>
#include <vector>

#include "helab/duality.hpp"
#include "helab/state.hpp"
#include "helab/variation.hpp"

namespace helab {

// The symplectic side: canonical one-form, symplectic pairing, its gauge
// kernel, duality canonicity, and the moment-map identity tying the pairing
// against the duality generator to the derivative of cs_helicity.

// Canonical one-form evaluated on a tangent vector: alpha(s, v) = integral E . dA.
// Not invariant under the duality action (witnessed by tests); its exterior
// derivative below is.
double cartan_alpha(const MaxwellState& s, const Variation& v);

// Symplectic pairing omega(v1, v2) = integral (dA2 . dE1 - dA1 . dE2).
// Antisymmetric, bilinear, independent of the base state.
double omega(const Variation& v1, const Variation& v2);

// Fixed probe family used to certify kernel statements: every helical
// single-mode variation (each slot, both quadratures) up to |m|^2 <= cutoff^2,
// plus n_random seeded random transverse variations.
std::vector<Variation> probe_basis(const GridSpec& grid, int mode_cutoff, int n_random,
                                   std::uint64_t seed);

// Largest normalized pairing of v against the standard probe basis
// (cutoff 2, 20 random probes). Near zero iff v is pure gauge.
double probe_pairing_max(const Variation& v);

// probe_pairing_max of the pure-gauge direction built from the mean-free
// scalar f. This is the degeneracy certificate: gradients pair to zero
// against everything.
double kernel_residual(const MaxwellState& s, const ScalarField& f);

// |omega(rotate v1, rotate v2) - omega(v1, v2)| / scale: the pairing is
// preserved by the duality action.
double duality_invariance_residual(const Variation& v1, const Variation& v2, double theta);

// Moment-map identity check at state s along direction v:
//   omega(generator_direction(s), v)  ==  sign * D_v cs_helicity(s),
// the derivative taken as an exact centered difference with step h = 1
// (cs_helicity is quadratic, so the stencil is exact). The sign is a single
// global constant calibrated once on a fixed reference state and never
// adjusted per call.
struct MomentMapReport {
    double omega_value = 0.0;
    double dj_value = 0.0;   // directional derivative of cs_helicity along v
    double residual = 0.0;   // |omega_value - sign * dj_value|
    double scale = 0.0;      // normalization used by the tolerance
    int sign = 0;            // the calibrated global constant
    bool degenerate = false; // v had no physical content; both sides vanish
};

MomentMapReport moment_map_check(const MaxwellState& s, const Variation& v);

// The calibrated global sign by itself.
int moment_map_sign();

}  // namespace helab
