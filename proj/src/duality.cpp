#include "helab/duality.hpp"

#include <cmath>

namespace helab {

namespace {

VectorField combine(const VectorField& f, double cf, const VectorField& g, double cg) {
    VectorField out(f.grid);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < out.comp[c].size(); ++i)
            out.comp[c][i] = cf * f.comp[c][i] + cg * g.comp[c][i];
    return out;
}

}  // namespace

MaxwellState rotate_state(const MaxwellState& s, double theta) {
    double co = std::cos(theta), si = std::sin(theta);
    MaxwellState out;
    out.grid = s.grid;
    out.E = combine(s.E, co, s.B, si);
    out.B = combine(s.B, co, s.E, -si);
    out.t = s.t;
    return out;
}

PotentialPair rotate_potentials(const PotentialPair& p, double theta) {
    double co = std::cos(theta), si = std::sin(theta);
    PotentialPair out;
    out.grid = p.grid;
    out.A = combine(p.A, co, p.C, si);
    out.C = combine(p.C, co, p.A, -si);
    return out;
}

Variation rotate_variation(const Variation& v, double theta) {
    const GridSpec& g = v.grid;
    // The rotation acts on the physical (transverse) content only; any
    // gradient remainder in dA is a fiber coordinate the action leaves fixed.
    SpectralVectorField dAhat = to_spectral(v.dA);
    SpectralVectorField dAtrans = transverse_project(dAhat);
    SpectralVectorField dEhat = to_spectral(v.dE);

    // Reconstruct the partners exactly as states do: dB = curl dA,
    // dC = curl-inverse of -dE (transverse). A pure-gauge dA has an exactly
    // vanishing curl, so the computed spectrum can be bare transform noise;
    // symmetrize before returning to real space.
    VectorField dB = to_real(hermitian_part(curl(dAtrans)));
    SpectralVectorField dChat(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                double k2 = dot(k, k);
                dChat.set(idx, (-1.0 / k2) * (I * cross(k, dEhat.at(idx))));
            }

    double co = std::cos(theta), si = std::sin(theta);
    SpectralVectorField dAnew(g);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < dAnew.comp[c].size(); ++i)
            dAnew.comp[c][i] = dAhat.comp[c][i] + (co - 1.0) * dAtrans.comp[c][i] +
                               si * dChat.comp[c][i];

    Variation out;
    out.grid = g;
    out.dA = to_real(dAnew);
    out.dE = combine(v.dE, co, dB, si);
    return out;
}

Variation generator_direction(const MaxwellState& s) {
    PotentialPair p = potentials(s);
    Variation v;
    v.grid = s.grid;
    v.dA = p.C;
    v.dE = s.B;
    return v;
}

}  // namespace helab
