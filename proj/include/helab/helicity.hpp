#pragma once

#include <vector>

#include "helab/evolution.hpp"
#include "helab/state.hpp"

namespace helab {

// Helicity functionals. The optical (Chern-Simons) helicity
//   chi_cs = chi_mag + chi_el = (1/2) integral (A.B - C.E)
// is gauge invariant on the torus because the potentials are mean-free, and is
// a constant of the exact flow. Its two halves exchange at rate
//   d(chi_mag)/dt = - integral E.B = -d(chi_el)/dt.

// (1/2) integral A.B, real-space quadrature through the reconstructed potential.
double magnetic_helicity(const MaxwellState& s);

// -(1/2) integral C.E.
double electric_helicity(const MaxwellState& s);

double cs_helicity(const MaxwellState& s);

// integral E.B, the exchange density between the two halves.
double eb_integral(const MaxwellState& s);

// Spectral route to the same number as cs_helicity: per-mode energy divided
// by |k|, signed by handedness,
//   N_L - N_R = sum_{k != 0} V (|e_+|^2 + |b_+|^2 - |e_-|^2 - |b_-|^2) / (2 |k|),
// with (e_pm, b_pm) the helical amplitudes of (Ehat, Bhat). Agrees with
// cs_helicity to quadrature roundoff; the two implementations share no code
// path beyond the transforms.
double photon_number_difference(const MaxwellState& s);

// Natural magnitude for helicity comparisons: energy / (2*pi/L), the value a
// field of this energy concentrated in the lowest shell would reach.
double helicity_scale(const MaxwellState& s);

// The two 4-form densities of the field and its dual, in 3+1 components:
//   p1 from the field pair (E, B), p2 from the quarter-rotated pair (B, -E),
// both through the same wedge-density expansion, giving p1 = -4 E.B and
// p2 = +4 E.B pointwise. Their sum vanishing is the discrete image of the
// statement that the helicity pairing of the dual field is the negative of
// the original. Accepts raw field pairs so synthetic probes can exercise the
// algebra without being solutions.
struct PontryaginPair {
    ScalarField p1, p2;
};

PontryaginPair pontryagin_pair(const VectorField& E, const VectorField& B);
PontryaginPair pontryagin_pair(const MaxwellState& s);

// Discrete budget audit over a uniformly sampled series: centered differences
// of chi_mag and chi_el against -+ eb_integral, and the drift rate of chi_cs.
// Residuals are normalized by the series energy. Needs >= 3 samples.
struct BudgetReport {
    double mag_residual = 0.0;  // max |d(chi_mag)/dt + eb| / scale
    double el_residual = 0.0;   // max |d(chi_el)/dt - eb| / scale
    double cs_drift = 0.0;      // max |d(chi_cs)/dt| / scale
    double scale = 0.0;         // normalization (max energy over the series)
    double sample_spacing = 0.0;
};

BudgetReport helicity_budget(const std::vector<DiagnosticsRecord>& series);

}  // namespace helab
