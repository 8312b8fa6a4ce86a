#pragma once

#include <array>
#include <cstdint>

#include "helab/state.hpp"
#include "helab/variation.hpp"

namespace helab {

// Canonical initial data. All constructors build spectra directly (or project
// once, for the localized field), return constraint-clean states, and leave
// the Nyquist planes empty.

// Single traveling circularly polarized wave on lattice mode m, handedness
// sigma = +-1, with |E| = |B| = amplitude pointwise. E.B = 0 pointwise and
// cs_helicity = sigma * energy / |k|.
MaxwellState circular_plane_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude,
                                 int handedness);

// Single traveling linearly polarized wave; polarization_angle picks the
// direction in the transverse frame (e1, e2). Peak |E| = amplitude,
// cs_helicity = 0.
MaxwellState linear_plane_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude,
                               double polarization_angle);

// Two equal counter-propagating linear waves in crossed polarizations with a
// quarter-period offset: |E| = |B| = amplitude pointwise at t = 0,
// integral E.B = 0 at t = 0 but = -V amplitude^2 sin(2 |k| t) later, while
// cs_helicity stays 0 — the cleanest driver for the budget audit.
MaxwellState standing_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude);

// Gaussian random transverse field with support 1 <= |m|^2 <= cutoff^2,
// scaled so sqrt(energy / V) = amplitude. Identical bits for identical seeds.
MaxwellState random_transverse(const GridSpec& grid, std::uint64_t seed, int cutoff,
                               double amplitude);

// Localized null field with linked field lines, built from the closed-form
// complex pair
//   a = (r^2 - 1 + 2 i z) / (r^2 + 1),  b = 2 (x - i y) / (r^2 + 1)
// in core-radius units via E + iB = grad a x grad b, centered in the box with
// core radius = scale * box_length, then projected onto the torus. Verifies
// |E.B| and ||E| - |B|| stay below 1e-6 of the field scale after projection
// and throws TruncationError otherwise (the box was too small for the tails).
// The projection defect actually removed is reported via projection_delta.
MaxwellState hopfion(const GridSpec& grid, double scale, double* projection_delta = nullptr);

// Seeded mean-free band-limited random scalar (support 1 <= |m|^2 <= cutoff^2).
ScalarField random_scalar(const GridSpec& grid, std::uint64_t seed, int cutoff);

// Pure-gauge tangent direction (grad f, 0) from a seeded random scalar.
Variation gauge_variation(const GridSpec& grid, std::uint64_t seed);

// Random transverse tangent direction (both slots), for probes and witnesses.
Variation random_variation(const GridSpec& grid, std::uint64_t seed, int cutoff,
                           double amplitude);

}  // namespace helab
