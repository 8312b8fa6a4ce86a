#pragma once

#include "helab/grid.hpp"
#include "helab/spectral.hpp"

namespace helab {

// Cauchy data of a vacuum Maxwell solution on the torus: divergence-free,
// mean-free E and B sampled at time t. Units c = 1, Heaviside-Lorentz.
struct MaxwellState {
    GridSpec grid;
    VectorField E, B;
    double t = 0.0;
};

// Temporal-Coulomb-gauge potential pair of a state: curl A = B, curl C = -E,
// both transverse and mean-free.
struct PotentialPair {
    GridSpec grid;
    VectorField A, C;
};

struct ConstraintResiduals {
    double div_e = 0.0;  // max |i k.Ehat| / field scale
    double div_b = 0.0;
};

// Validating constructor. Roundoff-level constraint violations (relative L2
// projection defect <= 1e-8) are repaired silently by projection; anything
// larger throws ConstraintViolationError. The defect actually removed is
// written to *projection_residual when given.
MaxwellState make_state(const VectorField& E, const VectorField& B, double t,
                        double* projection_residual = nullptr);

// Build a state directly from spectral data; projects and synthesizes.
MaxwellState state_from_spectral(const SpectralVectorField& Ehat,
                                 const SpectralVectorField& Bhat, double t);

// Curl-inverse on the torus: Ahat = i k x Bhat / |k|^2, Chat = -i k x Ehat / |k|^2.
PotentialPair potentials(const MaxwellState& s);

// (1/2) * integral (|E|^2 + |B|^2).
double energy(const MaxwellState& s);

ConstraintResiduals constraint_residuals(const MaxwellState& s);

// Spectral transform of E + iB. Not Hermitian symmetric: the k and -k slots
// are independent, which is exactly the handedness split.
SpectralVectorField riemann_silberstein(const MaxwellState& s);

// Inverse of riemann_silberstein: split Fhat into the Hermitian pair via
// Ehat(k) = (Fhat(k) + conj(Fhat(-k)))/2, Bhat(k) = (Fhat(k) - conj(Fhat(-k)))/(2i).
MaxwellState state_from_riemann_silberstein(const SpectralVectorField& Fhat, double t);

}  // namespace helab
