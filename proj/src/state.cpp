#include "helab/state.hpp"

#include <cmath>
#include <string>

namespace helab {

namespace {

constexpr double kRepairThreshold = 1e-8;

// Relative L2 distance between a spectrum and its projected image.
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

MaxwellState make_state(const VectorField& E, const VectorField& B, double t,
                        double* projection_residual) {
    require_same_grid(E.grid, B.grid, "make_state");
    SpectralVectorField Ehat = to_spectral(E);
    SpectralVectorField Bhat = to_spectral(B);
    SpectralVectorField Ep = transverse_project(Ehat);
    SpectralVectorField Bp = transverse_project(Bhat);
    double defect = std::max(relative_change(Ehat, Ep), relative_change(Bhat, Bp));
    if (projection_residual) *projection_residual = defect;
    if (defect > kRepairThreshold)
        throw ConstraintViolationError(
            "make_state: divergence/mean constraint violated beyond repair policy (relative "
            "defect " +
            std::to_string(defect) + ")");
    MaxwellState s;
    s.grid = E.grid;
    s.E = to_real(Ep);
    s.B = to_real(Bp);
    s.t = t;
    return s;
}

MaxwellState state_from_spectral(const SpectralVectorField& Ehat, const SpectralVectorField& Bhat,
                                 double t) {
    require_same_grid(Ehat.grid, Bhat.grid, "state_from_spectral");
    MaxwellState s;
    s.grid = Ehat.grid;
    s.E = to_real(transverse_project(Ehat));
    s.B = to_real(transverse_project(Bhat));
    s.t = t;
    return s;
}

PotentialPair potentials(const MaxwellState& s) {
    const GridSpec& g = s.grid;
    SpectralVectorField Ehat = to_spectral(s.E);
    SpectralVectorField Bhat = to_spectral(s.B);
    SpectralVectorField Ahat(g), Chat(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;  // potentials are mean-free
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                double k2 = dot(k, k);
                Ahat.set(idx, (1.0 / k2) * (I * cross(k, Bhat.at(idx))));
                Chat.set(idx, (-1.0 / k2) * (I * cross(k, Ehat.at(idx))));
            }
    PotentialPair p;
    p.grid = g;
    p.A = to_real(Ahat);
    p.C = to_real(Chat);
    return p;
}

double energy(const MaxwellState& s) {
    return 0.5 * (integrate(s.E, s.E) + integrate(s.B, s.B));
}

ConstraintResiduals constraint_residuals(const MaxwellState& s) {
    SpectralVectorField Ehat = to_spectral(s.E);
    SpectralVectorField Bhat = to_spectral(s.B);
    double scale = std::max(max_abs(Ehat), max_abs(Bhat));
    ConstraintResiduals r;
    if (scale == 0.0) return r;
    auto max_div = [&](const SpectralVectorField& fhat) {
        SpectralScalarField d = divergence(fhat);
        double worst = 0.0;
        for (const cplx& z : d.values) worst = std::max(worst, std::abs(z));
        // Mean content violates the same constraint class as divergence.
        worst = std::max(worst, std::abs(cplx(fhat.at(0).x)));
        worst = std::max(worst, std::abs(fhat.at(0).y));
        worst = std::max(worst, std::abs(fhat.at(0).z));
        return worst;
    };
    r.div_e = max_div(Ehat) / scale;
    r.div_b = max_div(Bhat) / scale;
    return r;
}

SpectralVectorField riemann_silberstein(const MaxwellState& s) {
    SpectralVectorField Ehat = to_spectral(s.E);
    SpectralVectorField Bhat = to_spectral(s.B);
    SpectralVectorField F(s.grid);
    const cplx I(0.0, 1.0);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < F.comp[c].size(); ++i)
            F.comp[c][i] = Ehat.comp[c][i] + I * Bhat.comp[c][i];
    return F;
}

MaxwellState state_from_riemann_silberstein(const SpectralVectorField& Fhat, double t) {
    const GridSpec& g = Fhat.grid;
    SpectralVectorField Ehat(g), Bhat(g);
    const cplx half_over_i(0.0, -0.5);  // 1/(2i)
    for (int ix = 0; ix < g.n; ++ix) {
        int jx = g.conjugate_slot(ix);
        for (int iy = 0; iy < g.n; ++iy) {
            int jy = g.conjugate_slot(iy);
            for (int iz = 0; iz < g.n; ++iz) {
                int jz = g.conjugate_slot(iz);
                std::size_t idx = g.flat(ix, iy, iz);
                CVec3 f = Fhat.at(idx);
                CVec3 fc = conj(Fhat.at(g.flat(jx, jy, jz)));
                Ehat.set(idx, 0.5 * (f + fc));
                Bhat.set(idx, half_over_i * (f - fc));
            }
        }
    }
    return state_from_spectral(Ehat, Bhat, t);
}

}  // namespace helab
