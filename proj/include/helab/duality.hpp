#pragma once

#include "helab/state.hpp"
#include "helab/variation.hpp"

namespace helab {

// Electric-magnetic duality rotation by angle theta:
//   E -> E cos(theta) + B sin(theta),  B -> B cos(theta) - E sin(theta).
// Exactly linear and pointwise; commutes with the flow and preserves the
// constraint set, the energy, and every helical modulus.
MaxwellState rotate_state(const MaxwellState& s, double theta);

// The same rotation on the potential pair:
//   A -> A cos(theta) + C sin(theta),  C -> C cos(theta) - A sin(theta).
// Commutes with potential reconstruction: potentials(rotate_state(s, theta))
// equals rotate_potentials(potentials(s), theta).
PotentialPair rotate_potentials(const PotentialPair& p, double theta);

// Rotation acting on tangent data. The missing halves are reconstructed the
// same way as for states: dC from dE by curl-inverse, dB = curl dA; then
//   dA -> dA cos(theta) + dC sin(theta),  dE -> dE cos(theta) + dB sin(theta).
// The gradient part of dA is rotation-invariant (dC is transverse, and the
// reconstruction only sees the transverse content).
Variation rotate_variation(const Variation& v, double theta);

// Derivative of the rotation orbit at theta = 0: the variation with Cauchy
// data (dA, dE) = (C, B). This is the vector field the helicity functional
// generates through the symplectic form.
Variation generator_direction(const MaxwellState& s);

}  // namespace helab
