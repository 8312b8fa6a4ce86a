#include "helab/variation.hpp"

#include <cmath>
#include <string>

#include "helab/evolution.hpp"

namespace helab {

namespace {

constexpr double kRepairThreshold = 1e-8;

// Zero only the k = 0 slot (and Nyquist planes): the gradient content of dA
// is legitimate, so dA must not be transverse-projected.
SpectralVectorField remove_mean(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralVectorField out = fhat;
    out.set(0, CVec3{});
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz)
                if (g.is_nyquist_slot(ix) || g.is_nyquist_slot(iy) || g.is_nyquist_slot(iz))
                    out.set(g.flat(ix, iy, iz), CVec3{});
    return out;
}

double relative_change(const SpectralVectorField& raw, const SpectralVectorField& proj) {
    KahanSum removed, total;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < raw.comp[c].size(); ++i) {
            removed.add(std::norm(raw.comp[c][i] - proj.comp[c][i]));
            total.add(std::norm(raw.comp[c][i]));
        }
    if (total.value() == 0.0) return 0.0;
    return std::sqrt(removed.value() / total.value());
}

}  // namespace

Variation make_variation(const VectorField& dA, const VectorField& dE) {
    require_same_grid(dA.grid, dE.grid, "make_variation");
    SpectralVectorField dAhat = to_spectral(dA);
    SpectralVectorField dEhat = to_spectral(dE);
    SpectralVectorField dAp = remove_mean(dAhat);
    SpectralVectorField dEp = transverse_project(dEhat);
    double defect = std::max(relative_change(dAhat, dAp), relative_change(dEhat, dEp));
    if (defect > kRepairThreshold)
        throw ConstraintViolationError(
            "make_variation: tangent data violates constraints beyond repair policy (relative "
            "defect " +
            std::to_string(defect) + ")");
    Variation v;
    v.grid = dA.grid;
    v.dA = to_real(dAp);
    v.dE = to_real(dEp);
    return v;
}

Variation gauge_direction(const ScalarField& f) {
    SpectralScalarField fhat = to_spectral(f);
    fhat.values[0] = 0.0;  // mean of f is unobservable in grad f anyway
    Variation v;
    v.grid = f.grid;
    v.dA = to_real(gradient(fhat));
    v.dE = VectorField(f.grid);
    return v;
}

Variation evolve_variation(const Variation& v, double dt) {
    const GridSpec& g = v.grid;
    SpectralVectorField dAhat = to_spectral(v.dA);
    SpectralVectorField dAtrans = transverse_project(dAhat);

    // Gauge remainder of dA is flow-invariant.
    SpectralVectorField gauge_part(g);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < dAhat.comp[c].size(); ++i)
            gauge_part.comp[c][i] = dAhat.comp[c][i] - dAtrans.comp[c][i];

    // The physical content evolves as a solution with B-slot curl dA. For a
    // pure-gauge dA the transverse part is bare transform noise, so the curl
    // spectrum must be symmetrized before returning to real space.
    MaxwellState lin;
    lin.grid = g;
    lin.E = v.dE;
    lin.B = to_real(hermitian_part(curl(dAtrans)));
    lin.t = 0.0;
    MaxwellState moved = evolve_exact(lin, dt);

    // Back to potential form: transverse curl-inverse of the evolved B.
    SpectralVectorField Bhat = to_spectral(moved.B);
    SpectralVectorField dAnew(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                double k2 = dot(k, k);
                dAnew.set(idx, (1.0 / k2) * (I * cross(k, Bhat.at(idx))));
            }
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < dAnew.comp[c].size(); ++i)
            dAnew.comp[c][i] += gauge_part.comp[c][i];

    Variation out;
    out.grid = g;
    out.dA = to_real(dAnew);
    out.dE = moved.E;
    return out;
}

double variation_scale(const Variation& a, const Variation& b) {
    double v = a.grid.volume();
    return v * (rms(a.dA) * rms(b.dE) + rms(b.dA) * rms(a.dE));
}

}  // namespace helab
