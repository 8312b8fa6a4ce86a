#pragma once

#include "helab/grid.hpp"

namespace helab {

// Discrete Fourier analysis on the periodic lattice, convention
//   f(x) = sum_k fhat(k) exp(i k.x),  k = (2*pi/L) * m,  m integer triple,
// so the forward transform carries the 1/n^3 normalization and Parseval reads
//   integral f.g d^3x = V * sum_k conj(fhat).ghat  for real f, g.

// Forward transform. Rejects non-finite input.
SpectralVectorField to_spectral(const VectorField& f);
SpectralScalarField to_spectral(const ScalarField& f);

// Inverse transform back to a real field. The input must be Hermitian
// symmetric (fhat(-k) = conj(fhat(k))) within 1e-10 relative tolerance;
// the roundoff-level imaginary residue is discarded after that check.
VectorField to_real(const SpectralVectorField& fhat);
ScalarField to_real(const SpectralScalarField& fhat);

// Largest Hermitian-symmetry violation, normalized by the largest mode
// amplitude (0 for an all-zero field).
double hermitian_asymmetry(const SpectralVectorField& fhat);

// Orthogonal projection onto the Hermitian-symmetric subspace: each slot is
// averaged with the conjugate of its partner, fhat(k) -> (fhat(k) +
// conj(fhat(-k)))/2. For a spectrum that is real-derived in exact arithmetic
// this only strips floating-point asymmetry; apply it before to_real when a
// derivative chain can cancel the signal and leave bare transform noise.
SpectralVectorField hermitian_part(const SpectralVectorField& fhat);

// Riemann-sum quadrature (L/n)^3 * sum f.g, compensated summation.
double integrate(const VectorField& f, const VectorField& g);
double integrate(const ScalarField& f, const ScalarField& g);

// V * sum_k conj(fhat(k)) . ghat(k), the spectral side of the pairing.
cplx spectral_inner(const SpectralVectorField& fhat, const SpectralVectorField& ghat);

double max_abs(const SpectralVectorField& fhat);
double max_abs(const VectorField& f);
double rms(const VectorField& f);

// Exact spectral derivatives: multiplication by i k.
SpectralVectorField curl(const SpectralVectorField& fhat);
SpectralScalarField divergence(const SpectralVectorField& fhat);
SpectralVectorField gradient(const SpectralScalarField& fhat);

// Orthogonal projection onto mean-free transverse fields:
// fhat(k) -> fhat(k) - khat (khat.fhat(k)), the k = 0 slot and the unpaired
// Nyquist planes are zeroed.
SpectralVectorField transverse_project(const SpectralVectorField& fhat);

// Relative size of everything transverse_project would remove (L2, spectral).
double projection_defect(const SpectralVectorField& fhat);

// Helical frame for a lattice direction: e1 = normalize(zhat x khat) unless
// k is along +-zhat, where e1 = xhat; e2 = khat x e1. Depends only on the
// integer mode, so it is exactly reproducible.
void helical_frame(int mx, int my, int mz, Vec3& e1, Vec3& e2);

// Complex helical unit vectors e_pm = (e1 pm i e2)/sqrt(2).
void helical_vectors(int mx, int my, int mz, CVec3& eplus, CVec3& eminus);

// Expand a transverse spectral field in the helical basis / rebuild it.
// helical_decompose rejects fields whose longitudinal or mean content exceeds
// 1e-10 of the largest mode amplitude.
HelicalAmplitudes helical_decompose(const SpectralVectorField& fhat);
SpectralVectorField helical_recompose(const HelicalAmplitudes& amps);

}  // namespace helab
