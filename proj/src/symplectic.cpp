#include "helab/symplectic.hpp"

#include <cmath>

#include "helab/helicity.hpp"
#include "helab/scenarios.hpp"
#include "helab/spectral.hpp"

namespace helab {

double cartan_alpha(const MaxwellState& s, const Variation& v) {
    require_same_grid(s.grid, v.grid, "cartan_alpha");
    return integrate(s.E, v.dA);
}

double omega(const Variation& v1, const Variation& v2) {
    require_same_grid(v1.grid, v2.grid, "omega");
    return integrate(v2.dA, v1.dE) - integrate(v1.dA, v2.dE);
}

namespace {

constexpr std::uint64_t kProbeSeed = 0x51ab5eedULL;

// True for exactly one member of every {m, -m} pair, so mode loops see each
// Hermitian pair once.
bool canonical_half(int mx, int my, int mz) {
    if (mx != 0) return mx > 0;
    if (my != 0) return my > 0;
    return mz > 0;
}

// A variation occupying a single helical mode pair: quadrature q times the
// helicity-h polarization vector at +m, conjugated at -m, placed in either
// the dA slot (in_potential) or the dE slot.
Variation single_mode_probe(const GridSpec& grid, int mx, int my, int mz, int h, cplx q,
                            bool in_potential) {
    SpectralVectorField fhat(grid);
    CVec3 ep, em;
    helical_vectors(mx, my, mz, ep, em);
    CVec3 amp = q * (h > 0 ? ep : em);
    auto wrap = [&](int m) { return m >= 0 ? m : grid.n + m; };
    fhat.set(grid.flat(wrap(mx), wrap(my), wrap(mz)), amp);
    fhat.set(grid.flat(wrap(-mx), wrap(-my), wrap(-mz)), conj(amp));
    VectorField f = to_real(fhat);
    VectorField zero(grid);
    return in_potential ? make_variation(f, zero) : make_variation(zero, f);
}

}  // namespace

std::vector<Variation> probe_basis(const GridSpec& grid, int mode_cutoff, int n_random,
                                   std::uint64_t seed) {
    std::vector<Variation> probes;
    const int c2 = mode_cutoff * mode_cutoff;
    for (int mx = -mode_cutoff; mx <= mode_cutoff; ++mx)
        for (int my = -mode_cutoff; my <= mode_cutoff; ++my)
            for (int mz = -mode_cutoff; mz <= mode_cutoff; ++mz) {
                int m2 = mx * mx + my * my + mz * mz;
                if (m2 == 0 || m2 > c2 || !canonical_half(mx, my, mz)) continue;
                for (int h : {+1, -1})
                    for (cplx q : {cplx(1.0, 0.0), cplx(0.0, 1.0)})
                        for (bool in_potential : {true, false})
                            probes.push_back(
                                single_mode_probe(grid, mx, my, mz, h, q, in_potential));
            }
    for (int r = 0; r < n_random; ++r)
        probes.push_back(random_variation(grid, seed + static_cast<std::uint64_t>(r), 3, 1.0));
    return probes;
}

double probe_pairing_max(const Variation& v) {
    std::vector<Variation> probes = probe_basis(v.grid, 2, 20, kProbeSeed);
    double worst = 0.0;
    for (const Variation& p : probes) {
        double value = std::abs(omega(v, p));
        double scale = variation_scale(v, p);
        worst = std::max(worst, scale > 0.0 ? value / scale : value);
    }
    return worst;
}

double kernel_residual(const MaxwellState& s, const ScalarField& f) {
    require_same_grid(s.grid, f.grid, "kernel_residual");
    return probe_pairing_max(gauge_direction(f));
}

double duality_invariance_residual(const Variation& v1, const Variation& v2, double theta) {
    double before = omega(v1, v2);
    double after = omega(rotate_variation(v1, theta), rotate_variation(v2, theta));
    double scale = variation_scale(v1, v2);
    double gap = std::abs(after - before);
    return scale > 0.0 ? gap / scale : gap;
}

namespace {

// State displaced along a variation: E += h dE, B += h curl dA. The curl kills
// any gradient part of dA, so only physical content moves the state.
MaxwellState displaced(const MaxwellState& s, const Variation& v, double h,
                       const VectorField& dB) {
    MaxwellState out;
    out.grid = s.grid;
    out.t = s.t;
    out.E = s.E;
    out.B = s.B;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < out.E.comp[c].size(); ++i) {
            out.E.comp[c][i] += h * v.dE.comp[c][i];
            out.B.comp[c][i] += h * dB.comp[c][i];
        }
    return out;
}

}  // namespace

int moment_map_sign() {
    static const int cached = [] {
        GridSpec grid(8, 6.283185307179586);
        MaxwellState ref = circular_plane_wave(grid, {0, 0, 1}, 1.0, +1);
        // Quadrature chosen so the pairing against the reference wave is real
        // and order one; any probe with nonzero pairing calibrates the same way.
        Variation probe = single_mode_probe(grid, 0, 0, 1, +1, cplx(0.0, 0.5), true);
        double lhs = omega(generator_direction(ref), probe);
        VectorField dB = to_real(curl(to_spectral(probe.dA)));
        double jp = cs_helicity(displaced(ref, probe, +1.0, dB));
        double jm = cs_helicity(displaced(ref, probe, -1.0, dB));
        double rhs = (jp - jm) / 2.0;
        double mag = std::max(std::abs(lhs), std::abs(rhs));
        if (!(mag > 0.0) || std::abs(std::abs(lhs) - std::abs(rhs)) > 1e-10 * mag)
            throw Error("moment_map_sign: calibration probe does not pair cleanly");
        return lhs * rhs > 0.0 ? +1 : -1;
    }();
    return cached;
}

MomentMapReport moment_map_check(const MaxwellState& s, const Variation& v) {
    require_same_grid(s.grid, v.grid, "moment_map_check");
    MomentMapReport r;
    Variation gen = generator_direction(s);
    r.omega_value = omega(gen, v);

    // For a pure-gauge dA the curl spectrum is bare transform noise, so it is
    // symmetrized before returning to real space; the transverse remainder is
    // measured spectrally for the same reason (Parseval: rms = l2 of modes).
    VectorField dB = to_real(hermitian_part(curl(to_spectral(v.dA))));
    const double h = 1.0;
    double jp = cs_helicity(displaced(s, v, +h, dB));
    double jm = cs_helicity(displaced(s, v, -h, dB));
    r.dj_value = (jp - jm) / (2.0 * h);

    r.sign = moment_map_sign();
    r.residual = std::abs(r.omega_value - r.sign * r.dj_value);
    r.scale = variation_scale(gen, v);

    double total = rms(v.dA) + rms(v.dE);
    SpectralVectorField trans = transverse_project(to_spectral(v.dA));
    KahanSum l2;
    for (int c = 0; c < 3; ++c)
        for (const cplx& z : trans.comp[c]) l2.add(std::norm(z));
    double physical = std::sqrt(l2.value()) + rms(v.dE);
    r.degenerate = total == 0.0 || physical <= 1e-12 * total;
    return r;
}

}  // namespace helab
