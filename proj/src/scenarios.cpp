#include "helab/scenarios.hpp"

#include <cmath>
#include <random>
#include <string>

#include "helab/spectral.hpp"

namespace helab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_mode(const GridSpec& grid, std::array<int, 3> m, const char* who) {
    if (m[0] == 0 && m[1] == 0 && m[2] == 0)
        throw ConfigError(std::string(who) + ": mode must be nonzero");
    int band = grid.n / 2 - 1;
    for (int c = 0; c < 3; ++c)
        if (std::abs(m[c]) > band)
            throw ConfigError(std::string(who) + ": mode component " + std::to_string(m[c]) +
                              " outside the resolvable band |m| <= " + std::to_string(band));
}

void require_amplitude(double amplitude, const char* who) {
    if (!std::isfinite(amplitude))
        throw ConfigError(std::string(who) + ": amplitude must be finite");
}

std::size_t slot_of(const GridSpec& grid, int mx, int my, int mz) {
    auto wrap = [&](int m) { return m >= 0 ? m : grid.n + m; };
    return grid.flat(wrap(mx), wrap(my), wrap(mz));
}

// Deposit amp at mode +m and its conjugate at -m, keeping the field real.
void place_pair(SpectralVectorField& fhat, std::array<int, 3> m, CVec3 amp) {
    std::size_t i = slot_of(fhat.grid, m[0], m[1], m[2]);
    std::size_t j = slot_of(fhat.grid, -m[0], -m[1], -m[2]);
    fhat.set(i, fhat.at(i) + amp);
    fhat.set(j, fhat.at(j) + conj(amp));
}

// Reproducible unit Gaussians: 53-bit uniforms through Box-Muller, fixed
// draw order, no library distribution (their value sequences are not pinned
// by the standard, the mt19937_64 stream is).
struct GaussianSource {
    std::mt19937_64 rng;
    bool have_spare = false;
    double spare = 0.0;

    explicit GaussianSource(std::uint64_t seed) : rng(seed) {}

    double uniform01() {
        // In (0, 1]; never 0, so the logarithm below is finite.
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double radius = std::sqrt(-2.0 * std::log(uniform01()));
        double angle = 2.0 * kPi * uniform01();
        spare = radius * std::sin(angle);
        have_spare = true;
        return radius * std::cos(angle);
    }

    cplx next_complex() {
        double re = next();
        double im = next();
        return {re, im};
    }
};

bool canonical_half(int mx, int my, int mz) {
    if (mx != 0) return mx > 0;
    if (my != 0) return my > 0;
    return mz > 0;
}

void require_cutoff(const GridSpec& grid, int cutoff, const char* who) {
    if (cutoff < 1 || cutoff > grid.n / 2 - 1)
        throw ConfigError(std::string(who) + ": spectral cutoff " + std::to_string(cutoff) +
                          " outside [1, " + std::to_string(grid.n / 2 - 1) + "]");
}

}  // namespace

MaxwellState circular_plane_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude,
                                 int handedness) {
    require_mode(grid, m, "circular_plane_wave");
    require_amplitude(amplitude, "circular_plane_wave");
    if (handedness != 1 && handedness != -1)
        throw ConfigError("circular_plane_wave: handedness must be +1 or -1, got " +
                          std::to_string(handedness));

    CVec3 ep, em;
    helical_vectors(m[0], m[1], m[2], ep, em);
    CVec3 e_amp = (amplitude / std::sqrt(2.0)) * (handedness > 0 ? ep : em);
    CVec3 b_amp = cplx(0.0, -static_cast<double>(handedness)) * e_amp;

    SpectralVectorField Ehat(grid), Bhat(grid);
    place_pair(Ehat, m, e_amp);
    place_pair(Bhat, m, b_amp);
    return state_from_spectral(Ehat, Bhat, 0.0);
}

MaxwellState linear_plane_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude,
                               double polarization_angle) {
    require_mode(grid, m, "linear_plane_wave");
    require_amplitude(amplitude, "linear_plane_wave");
    if (!std::isfinite(polarization_angle))
        throw ConfigError("linear_plane_wave: polarization angle must be finite");

    Vec3 e1, e2;
    helical_frame(m[0], m[1], m[2], e1, e2);
    Vec3 pol = std::cos(polarization_angle) * e1 + std::sin(polarization_angle) * e2;
    Vec3 khat = normalized(Vec3{static_cast<double>(m[0]), static_cast<double>(m[1]),
                                static_cast<double>(m[2])});
    CVec3 e_amp = (amplitude / 2.0) * to_complex(pol);
    CVec3 b_amp = (amplitude / 2.0) * to_complex(cross(khat, pol));

    SpectralVectorField Ehat(grid), Bhat(grid);
    place_pair(Ehat, m, e_amp);
    place_pair(Bhat, m, b_amp);
    return state_from_spectral(Ehat, Bhat, 0.0);
}

MaxwellState standing_wave(const GridSpec& grid, std::array<int, 3> m, double amplitude) {
    require_mode(grid, m, "standing_wave");
    require_amplitude(amplitude, "standing_wave");

    Vec3 e1, e2;
    helical_frame(m[0], m[1], m[2], e1, e2);
    cplx i_unit(0.0, 1.0);
    CVec3 e_amp = (amplitude / 2.0) * (to_complex(e1) + i_unit * to_complex(e2));
    CVec3 b_amp = (amplitude / 2.0) * (to_complex(e2) + i_unit * to_complex(e1));

    SpectralVectorField Ehat(grid), Bhat(grid);
    place_pair(Ehat, m, e_amp);
    place_pair(Bhat, m, b_amp);
    return state_from_spectral(Ehat, Bhat, 0.0);
}

MaxwellState random_transverse(const GridSpec& grid, std::uint64_t seed, int cutoff,
                               double amplitude) {
    require_cutoff(grid, cutoff, "random_transverse");
    require_amplitude(amplitude, "random_transverse");
    if (amplitude < 0.0) throw ConfigError("random_transverse: amplitude must be >= 0");

    SpectralVectorField Ehat(grid), Bhat(grid);
    GaussianSource gauss(seed);
    const int c2 = cutoff * cutoff;
    for (int mx = -cutoff; mx <= cutoff; ++mx)
        for (int my = -cutoff; my <= cutoff; ++my)
            for (int mz = -cutoff; mz <= cutoff; ++mz) {
                int m2 = mx * mx + my * my + mz * mz;
                if (m2 == 0 || m2 > c2 || !canonical_half(mx, my, mz)) continue;
                CVec3 ep, em;
                helical_vectors(mx, my, mz, ep, em);
                CVec3 e_amp = gauss.next_complex() * ep + gauss.next_complex() * em;
                CVec3 b_amp = gauss.next_complex() * ep + gauss.next_complex() * em;
                place_pair(Ehat, {mx, my, mz}, e_amp);
                place_pair(Bhat, {mx, my, mz}, b_amp);
            }

    // Normalize so sqrt(energy / V) equals the requested amplitude.
    double quad = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < Ehat.comp[c].size(); ++i)
            quad += std::norm(Ehat.comp[c][i]) + std::norm(Bhat.comp[c][i]);
    double raw_energy = 0.5 * grid.volume() * quad;
    double factor = raw_energy > 0.0 ? amplitude * std::sqrt(grid.volume() / raw_energy) : 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < Ehat.comp[c].size(); ++i) {
            Ehat.comp[c][i] *= factor;
            Bhat.comp[c][i] *= factor;
        }
    return state_from_spectral(Ehat, Bhat, 0.0);
}

MaxwellState hopfion(const GridSpec& grid, double scale, double* projection_delta) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ConfigError("hopfion: core scale must be positive and finite");
    if (scale >= 0.5)
        throw ConfigError("hopfion: core radius " + std::to_string(scale) +
                          " * box does not fit inside the box");

    const double L = grid.box_length;
    const double core = scale * L;
    const double h = grid.spacing();
    VectorField E(grid), B(grid);

    for (int ix = 0; ix < grid.n; ++ix)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int iz = 0; iz < grid.n; ++iz) {
                double X = (ix * h - 0.5 * L) / core;
                double Y = (iy * h - 0.5 * L) / core;
                double Z = (iz * h - 0.5 * L) / core;
                double r2 = X * X + Y * Y + Z * Z;
                double d = r2 + 1.0;
                double d2 = d * d;

                // Gradients of the closed-form pair a, b (see header).
                cplx ax = (2.0 * X * cplx(2.0, -2.0 * Z)) / d2;
                cplx ay = (2.0 * Y * cplx(2.0, -2.0 * Z)) / d2;
                cplx az = (2.0 * Z * cplx(2.0, -2.0 * Z) + cplx(0.0, 2.0 * d)) / d2;
                cplx bcommon = cplx(X, -Y);
                cplx bx = 2.0 * (d - 2.0 * X * bcommon) / d2;
                cplx by = 2.0 * (cplx(0.0, -d) - 2.0 * Y * bcommon) / d2;
                cplx bz = 2.0 * (-2.0 * Z * bcommon) / d2;

                CVec3 F = cross(CVec3{ax, ay, az}, CVec3{bx, by, bz});
                std::size_t idx = grid.flat(ix, iy, iz);
                E.set(idx, {F.x.real(), F.y.real(), F.z.real()});
                B.set(idx, {F.x.imag(), F.y.imag(), F.z.imag()});
            }

    SpectralVectorField Ehat = to_spectral(E), Bhat = to_spectral(B);
    double delta = std::max(projection_defect(Ehat), projection_defect(Bhat));
    if (projection_delta) *projection_delta = delta;
    MaxwellState s = state_from_spectral(Ehat, Bhat, 0.0);

    // The closed-form samples are exactly null, but the tails decay only like
    // r^-4, so periodization plus the transverse projection perturbs E.B and
    // |E| - |B| at the level of the tail amplitude at the box boundary --
    // orders of magnitude above the 1e-6 contract on desk-size grids. Restore
    // the null structure within the transverse class: alternate a pointwise
    // minimum-norm Newton step on Q = F.F = 0 for the Riemann-Silberstein
    // combination F = E + iB (cubically convergent per point) with the
    // transverse projection. The alternation converges linearly down to a
    // floor set by the lattice bandwidth; when that floor is above the gate
    // the box cannot represent the field and the construction is rejected.
    const double kGate = 1e-6;    // contracted bound, relative to field scale
    const double kTarget = 8e-7;  // stop margin inside the gate
    const int kMaxRounds = 120;

    auto worst_residuals = [&](const MaxwellState& st, double& eb, double& nl) {
        double fs = std::max(max_abs(st.E), max_abs(st.B));
        eb = nl = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Vec3 e = st.E.at(i), b = st.B.at(i);
            eb = std::max(eb, std::abs(dot(e, b)));
            nl = std::max(nl, std::abs(norm(e) - norm(b)));
        }
        if (fs > 0.0) {
            eb /= fs * fs;
            nl /= fs;
        }
    };

    double worst_eb = 0.0, worst_null = 0.0;
    worst_residuals(s, worst_eb, worst_null);
    for (int round = 0; round < kMaxRounds && (worst_eb > kTarget || worst_null > kTarget);
         ++round) {
        VectorField En = s.E, Bn = s.B;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Vec3 e = En.at(i), b = Bn.at(i);
            CVec3 F{cplx(e.x, b.x), cplx(e.y, b.y), cplx(e.z, b.z)};
            for (int newton = 0; newton < 2; ++newton) {
                cplx Q = dot(F, F);
                double h2 = abs2(F);
                if (h2 == 0.0 || std::abs(Q) < 1e-32 * h2) break;
                F = F + (-Q / (2.0 * h2)) * conj(F);
            }
            En.set(i, {F.x.real(), F.y.real(), F.z.real()});
            Bn.set(i, {F.x.imag(), F.y.imag(), F.z.imag()});
        }
        s = state_from_spectral(to_spectral(En), to_spectral(Bn), 0.0);
        worst_residuals(s, worst_eb, worst_null);
    }
    if (worst_eb > kGate || worst_null > kGate)
        throw TruncationError(
            "hopfion: periodization breaks the null structure beyond 1e-6 of the field scale "
            "(E.B residual " +
            std::to_string(worst_eb) + ", |E|-|B| residual " + std::to_string(worst_null) +
            "); enlarge the box relative to the core");
    return s;
}

ScalarField random_scalar(const GridSpec& grid, std::uint64_t seed, int cutoff) {
    require_cutoff(grid, cutoff, "random_scalar");
    SpectralScalarField fhat(grid);
    GaussianSource gauss(seed);
    const int c2 = cutoff * cutoff;
    for (int mx = -cutoff; mx <= cutoff; ++mx)
        for (int my = -cutoff; my <= cutoff; ++my)
            for (int mz = -cutoff; mz <= cutoff; ++mz) {
                int m2 = mx * mx + my * my + mz * mz;
                if (m2 == 0 || m2 > c2 || !canonical_half(mx, my, mz)) continue;
                cplx amp = gauss.next_complex();
                fhat.values[slot_of(grid, mx, my, mz)] = amp;
                fhat.values[slot_of(grid, -mx, -my, -mz)] = std::conj(amp);
            }
    return to_real(fhat);
}

Variation gauge_variation(const GridSpec& grid, std::uint64_t seed) {
    return gauge_direction(random_scalar(grid, seed, 2));
}

Variation random_variation(const GridSpec& grid, std::uint64_t seed, int cutoff,
                           double amplitude) {
    MaxwellState s = random_transverse(grid, seed, cutoff, amplitude);
    return make_variation(potentials(s).A, s.E);
}

}  // namespace helab
