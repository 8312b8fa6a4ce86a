#include <cmath>

#include <doctest.h>

#include "helab/scenarios.hpp"
#include "helab/spectral.hpp"

using namespace helab;

namespace {

constexpr double kPi = 3.14159265358979323846;

GridSpec small_grid() { return GridSpec(16, 2.0 * kPi); }

// Sample g(x) = trig(k(m).x) on the lattice.
ScalarField sampled(const GridSpec& g, std::array<int, 3> m, bool use_sin) {
    ScalarField f(g);
    double h = g.spacing();
    double k0 = g.fundamental_wavenumber();
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                double phase = k0 * (m[0] * ix * h + m[1] * iy * h + m[2] * iz * h);
                f.values[g.flat(ix, iy, iz)] = use_sin ? std::sin(phase) : std::cos(phase);
            }
    return f;
}

std::size_t slot(const GridSpec& g, int mx, int my, int mz) {
    auto wrap = [&](int v) { return v >= 0 ? v : g.n + v; };
    return g.flat(wrap(mx), wrap(my), wrap(mz));
}

}  // namespace

TEST_CASE("grid validation rejects unusable parameters") {
    CHECK_THROWS_AS(GridSpec(3, 1.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(7, 1.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(0, 1.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(16, 0.0), ConfigError);
    CHECK_THROWS_AS(GridSpec(16, -2.0), ConfigError);
    CHECK_NOTHROW(GridSpec(4, 0.5));
}

TEST_CASE("mode bookkeeping: signed modes, conjugate slots, Nyquist") {
    GridSpec g(8, 1.0);
    CHECK(g.mode_of(0) == 0);
    CHECK(g.mode_of(3) == 3);
    CHECK(g.mode_of(4) == -4);
    CHECK(g.mode_of(7) == -1);
    CHECK(g.conjugate_slot(0) == 0);
    CHECK(g.conjugate_slot(3) == 5);
    CHECK(g.conjugate_slot(5) == 3);
    CHECK(g.is_nyquist_slot(4));
    for (int i = 0; i < 8; ++i)
        if (!g.is_nyquist_slot(i))
            CHECK(g.mode_of(g.conjugate_slot(i)) == -g.mode_of(i));
}

TEST_CASE("cosine mode analyzes to the half-amplitude Hermitian pair") {
    GridSpec g = small_grid();
    ScalarField f = sampled(g, {1, 0, 0}, false);
    SpectralScalarField fhat = to_spectral(f);
    CHECK(std::abs(fhat.values[slot(g, 1, 0, 0)] - cplx(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(fhat.values[slot(g, -1, 0, 0)] - cplx(0.5, 0.0)) < 1e-14);
    double stray = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == slot(g, 1, 0, 0) || i == slot(g, -1, 0, 0)) continue;
        stray = std::max(stray, std::abs(fhat.values[i]));
    }
    CHECK(stray < 1e-14);
}

TEST_CASE("sine mode analyzes to the odd imaginary pair") {
    GridSpec g = small_grid();
    SpectralScalarField fhat = to_spectral(sampled(g, {0, 2, 0}, true));
    CHECK(std::abs(fhat.values[slot(g, 0, 2, 0)] - cplx(0.0, -0.5)) < 1e-14);
    CHECK(std::abs(fhat.values[slot(g, 0, -2, 0)] - cplx(0.0, 0.5)) < 1e-14);
}

TEST_CASE("quadrature: integral of cos^2 over the box is V/2") {
    GridSpec g = small_grid();
    ScalarField f = sampled(g, {1, 2, 0}, false);
    double value = integrate(f, f);
    CHECK(value == doctest::Approx(g.volume() / 2.0).epsilon(1e-14));
}

TEST_CASE("Parseval: real-space quadrature equals the spectral pairing") {
    GridSpec g = small_grid();
    MaxwellState s = random_transverse(g, 11, 3, 1.0);
    double real_side = integrate(s.E, s.B);
    cplx spectral_side = spectral_inner(to_spectral(s.E), to_spectral(s.B));
    CHECK(std::abs(spectral_side.imag()) < 1e-13 * std::abs(real_side + 1.0));
    CHECK(real_side == doctest::Approx(spectral_side.real()).epsilon(1e-12));
}

TEST_CASE("to_real demands Hermitian symmetry") {
    GridSpec g(8, 1.0);
    SpectralVectorField fhat(g);
    fhat.comp[0][slot(g, 1, 0, 0)] = cplx(1.0, 0.0);  // no conjugate partner
    CHECK_THROWS_AS(to_real(fhat), NonRealFieldError);
    fhat.comp[0][slot(g, -1, 0, 0)] = cplx(1.0, 0.0);
    CHECK_NOTHROW(to_real(fhat));
}

TEST_CASE("to_spectral rejects non-finite samples") {
    GridSpec g(8, 1.0);
    VectorField f(g);
    f.comp[2][5] = std::nan("");
    CHECK_THROWS_AS(to_spectral(f), InvalidFieldError);
}

TEST_CASE("transform round-trip is exact to roundoff") {
    GridSpec g = small_grid();
    MaxwellState s = random_transverse(g, 7, 4, 2.5);
    VectorField back = to_real(to_spectral(s.E));
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < back.comp[c].size(); ++i)
            worst = std::max(worst, std::abs(back.comp[c][i] - s.E.comp[c][i]));
    CHECK(worst < 1e-13 * max_abs(s.E));
}

TEST_CASE("curl of a cosine sheet matches the hand derivative") {
    // f = cos(kappa x) zhat has curl = kappa sin(kappa x) yhat: the spectral
    // rule i k x fhat reproduces the trigonometric derivative exactly.
    GridSpec g = small_grid();
    double kappa = g.fundamental_wavenumber();
    ScalarField c = sampled(g, {1, 0, 0}, false);
    ScalarField s = sampled(g, {1, 0, 0}, true);
    VectorField f(g);
    f.comp[2] = c.values;
    VectorField curled = to_real(curl(to_spectral(f)));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(curled.comp[0][i]));
        worst = std::max(worst, std::abs(curled.comp[1][i] - kappa * s.values[i]));
        worst = std::max(worst, std::abs(curled.comp[2][i]));
    }
    CHECK(worst < 1e-13 * kappa);
}

TEST_CASE("divergence of gradient is the spectral Laplacian") {
    GridSpec g = small_grid();
    ScalarField f = random_scalar(g, 21, 3);
    SpectralScalarField fhat = to_spectral(f);
    SpectralScalarField lap = divergence(gradient(fhat));
    double worst = 0.0;
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t i = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                cplx expected = -dot(k, k) * fhat.values[i];
                worst = std::max(worst, std::abs(lap.values[i] - expected));
            }
    CHECK(worst < 1e-12);
}

TEST_CASE("transverse projection kills gradients, fixes transverse fields") {
    GridSpec g = small_grid();
    ScalarField f = random_scalar(g, 31, 3);
    VectorField grad_f = to_real(gradient(to_spectral(f)));

    SpectralVectorField projected = transverse_project(to_spectral(grad_f));
    CHECK(max_abs(projected) < 1e-13 * max_abs(to_spectral(grad_f)));
    CHECK(projection_defect(to_spectral(grad_f)) == doctest::Approx(1.0).epsilon(1e-12));

    MaxwellState s = random_transverse(g, 32, 3, 1.0);
    SpectralVectorField ehat = to_spectral(s.E);
    SpectralVectorField fixed = transverse_project(ehat);
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < fixed.comp[c].size(); ++i)
            worst = std::max(worst, std::abs(fixed.comp[c][i] - ehat.comp[c][i]));
    CHECK(worst < 1e-13 * max_abs(ehat));
    CHECK(projection_defect(ehat) < 1e-13);
}

TEST_CASE("transverse projection empties the mean and Nyquist slots") {
    GridSpec g(8, 1.0);
    SpectralVectorField fhat(g);
    for (int c = 0; c < 3; ++c) {
        fhat.comp[c][g.flat(0, 0, 0)] = cplx(1.0, 0.0);
        fhat.comp[c][g.flat(4, 1, 2)] = cplx(0.3, 0.1);  // Nyquist x-plane
    }
    SpectralVectorField p = transverse_project(fhat);
    for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(p.comp[c][g.flat(0, 0, 0)]) == 0.0);
        CHECK(std::abs(p.comp[c][g.flat(4, 1, 2)]) == 0.0);
    }
}

TEST_CASE("helical frame: orthonormal, right-handed, axis special case") {
    Vec3 e1, e2;
    helical_frame(0, 0, 1, e1, e2);
    CHECK(norm(e1 - Vec3{1, 0, 0}) < 1e-15);
    CHECK(norm(e2 - Vec3{0, 1, 0}) < 1e-15);
    helical_frame(0, 0, -2, e1, e2);
    CHECK(norm(e1 - Vec3{1, 0, 0}) < 1e-15);
    CHECK(norm(e2 - Vec3{0, -1, 0}) < 1e-15);

    for (auto m : {std::array<int, 3>{1, 2, 3}, {2, -1, 0}, {-1, -1, 2}, {0, 3, -1}}) {
        helical_frame(m[0], m[1], m[2], e1, e2);
        Vec3 khat = normalized(Vec3{static_cast<double>(m[0]), static_cast<double>(m[1]),
                                    static_cast<double>(m[2])});
        CHECK(std::abs(norm(e1) - 1.0) < 1e-14);
        CHECK(std::abs(norm(e2) - 1.0) < 1e-14);
        CHECK(std::abs(dot(e1, khat)) < 1e-14);
        CHECK(std::abs(dot(e2, khat)) < 1e-14);
        CHECK(norm(cross(e1, e2) - khat) < 1e-14);
    }
}

TEST_CASE("helical vectors are curl eigenvectors: i khat x e_pm = pm e_pm") {
    for (auto m : {std::array<int, 3>{0, 0, 1}, {1, 2, 3}, {2, -1, 0}, {-3, 1, -2}}) {
        CVec3 ep, em;
        helical_vectors(m[0], m[1], m[2], ep, em);
        Vec3 khat = normalized(Vec3{static_cast<double>(m[0]), static_cast<double>(m[1]),
                                    static_cast<double>(m[2])});
        CVec3 lhs_p = cplx(0.0, 1.0) * cross(khat, ep);
        CVec3 lhs_m = cplx(0.0, 1.0) * cross(khat, em);
        CHECK(std::sqrt(abs2(lhs_p - ep)) < 1e-14);
        CHECK(std::sqrt(abs2(lhs_m - (cplx(-1.0, 0.0) * em))) < 1e-14);
        // unit pairing and mutual annihilation under the Hermitian product
        CHECK(std::abs(dot(conj(ep), ep) - cplx(1.0)) < 1e-14);
        CHECK(std::abs(dot(conj(em), em) - cplx(1.0)) < 1e-14);
        CHECK(std::abs(dot(conj(ep), em)) < 1e-14);
    }
}

TEST_CASE("helical decompose/recompose round-trips a transverse field") {
    GridSpec g = small_grid();
    MaxwellState s = random_transverse(g, 41, 4, 1.0);
    SpectralVectorField ehat = to_spectral(s.E);
    SpectralVectorField back = helical_recompose(helical_decompose(ehat));
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < back.comp[c].size(); ++i)
            worst = std::max(worst, std::abs(back.comp[c][i] - ehat.comp[c][i]));
    CHECK(worst < 1e-13 * max_abs(ehat));
}

TEST_CASE("helical decomposition rejects longitudinal content") {
    GridSpec g(8, 1.0);
    SpectralVectorField fhat(g);
    // amplitude along khat at m = (0,0,1), with its Hermitian partner
    fhat.comp[2][slot(g, 0, 0, 1)] = cplx(1.0, 0.0);
    fhat.comp[2][slot(g, 0, 0, -1)] = cplx(1.0, 0.0);
    CHECK_THROWS_AS(helical_decompose(fhat), TransversalityError);
}

TEST_CASE("helical amplitudes of a real field obey the pairing rule") {
    // For a real transverse field the amplitude of the SAME helicity label at
    // -k is a frame-dependent sign times the conjugate of the one at +k. The
    // sign is the (real, +-1) overlap of e_+(-k) with e_+(k): generically
    // e1(-k) = -e1(k) so the sign is -1, but on the z-axis the frame pins
    // e1 = xhat for both directions and the sign flips to +1.
    GridSpec g = small_grid();
    MaxwellState s = random_transverse(g, 51, 3, 1.0);
    HelicalAmplitudes amps = helical_decompose(to_spectral(s.E));
    double worst = 0.0;
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                if (g.is_nyquist_slot(ix) || g.is_nyquist_slot(iy) || g.is_nyquist_slot(iz))
                    continue;
                int mx = g.mode_of(ix), my = g.mode_of(iy), mz = g.mode_of(iz);
                CVec3 ep_here, em_here, ep_there, em_there;
                helical_vectors(mx, my, mz, ep_here, em_here);
                helical_vectors(-mx, -my, -mz, ep_there, em_there);
                // e_+(-k) = sign * e_-(k), and the bilinear overlap
                // dot(e_-, e_+) is exactly 1, so this dot isolates the sign.
                cplx phase_p = dot(ep_there, ep_here);
                cplx phase_m = dot(em_there, em_here);
                CHECK(std::abs(std::abs(phase_p) - 1.0) < 1e-13);
                CHECK(std::abs(phase_p.imag()) < 1e-13);
                std::size_t here = g.flat(ix, iy, iz);
                std::size_t there =
                    g.flat(g.conjugate_slot(ix), g.conjugate_slot(iy), g.conjugate_slot(iz));
                worst = std::max(worst, std::abs(amps.plus[there] -
                                                 phase_p * std::conj(amps.plus[here])));
                worst = std::max(worst, std::abs(amps.minus[there] -
                                                 phase_m * std::conj(amps.minus[here])));
                // Off the z-axis the sign must be the generic -1.
                if (mx != 0 || my != 0) {
                    CHECK(phase_p.real() == doctest::Approx(-1.0));
                    CHECK(phase_m.real() == doctest::Approx(-1.0));
                }
            }
    CHECK(worst < 1e-13);
}
