#include "helab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace helab {

namespace {

// ---------------------------------------------------------------------------
// FFT backend. One cached in-place c2c plan pair per lattice size, executed
// through a shared aligned buffer under a lock: FFTW's planner is not
// thread-safe and plan reuse keeps transforms bit-reproducible run to run.
// ---------------------------------------------------------------------------
struct PlanEntry {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t count = 0;
};

std::mutex g_fft_mutex;

PlanEntry& plans_for(int n) {
    static std::map<int, PlanEntry> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        PlanEntry e;
        e.count = static_cast<std::size_t>(n) * n * n;
        e.buf = fftw_alloc_complex(e.count);
        e.fwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
        e.bwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        it = cache.emplace(n, e).first;
    }
    return it->second;
}

// In-place DFT of one component array. sign = FFTW_FORWARD applies
// exp(-i k.x) sums (analysis, caller normalizes by 1/n^3), FFTW_BACKWARD the
// unnormalized synthesis sum matching f(x) = sum fhat exp(+i k.x).
void dft3(std::vector<cplx>& data, int n, int sign) {
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanEntry& e = plans_for(n);
    std::copy(data.begin(), data.end(), reinterpret_cast<cplx*>(e.buf));
    fftw_execute(sign == FFTW_FORWARD ? e.fwd : e.bwd);
    std::copy(reinterpret_cast<cplx*>(e.buf), reinterpret_cast<cplx*>(e.buf) + e.count,
              data.begin());
}

void require_finite(const std::vector<double>& v, const char* where) {
    for (double x : v)
        if (!std::isfinite(x))
            throw InvalidFieldError(std::string(where) + ": field contains non-finite values");
}

double max_abs_component(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

// Largest |fhat(-k) - conj(fhat(k))| over one component.
double component_asymmetry(const GridSpec& g, const std::vector<cplx>& v) {
    double worst = 0.0;
    for (int ix = 0; ix < g.n; ++ix) {
        int jx = g.conjugate_slot(ix);
        for (int iy = 0; iy < g.n; ++iy) {
            int jy = g.conjugate_slot(iy);
            for (int iz = 0; iz < g.n; ++iz) {
                int jz = g.conjugate_slot(iz);
                cplx d = v[g.flat(jx, jy, jz)] - std::conj(v[g.flat(ix, iy, iz)]);
                worst = std::max(worst, std::abs(d));
            }
        }
    }
    return worst;
}

constexpr double kHermitianTol = 1e-10;
constexpr double kTransverseTol = 1e-10;

}  // namespace

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

SpectralVectorField to_spectral(const VectorField& f) {
    SpectralVectorField out(f.grid);
    const double inv_count = 1.0 / static_cast<double>(f.grid.size());
    for (int c = 0; c < 3; ++c) {
        require_finite(f.comp[c], "to_spectral");
        for (std::size_t i = 0; i < f.comp[c].size(); ++i) out.comp[c][i] = f.comp[c][i];
        dft3(out.comp[c], f.grid.n, FFTW_FORWARD);
        for (cplx& z : out.comp[c]) z *= inv_count;
    }
    return out;
}

SpectralScalarField to_spectral(const ScalarField& f) {
    require_finite(f.values, "to_spectral");
    SpectralScalarField out(f.grid);
    const double inv_count = 1.0 / static_cast<double>(f.grid.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i];
    dft3(out.values, f.grid.n, FFTW_FORWARD);
    for (cplx& z : out.values) z *= inv_count;
    return out;
}

double hermitian_asymmetry(const SpectralVectorField& fhat) {
    double scale = max_abs(fhat);
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        worst = std::max(worst, component_asymmetry(fhat.grid, fhat.comp[c]));
    return worst / scale;
}

SpectralVectorField hermitian_part(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralVectorField out(g);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                std::size_t partner =
                    g.flat(g.conjugate_slot(ix), g.conjugate_slot(iy), g.conjugate_slot(iz));
                // Self-paired slots reduce to taking the real part.
                out.set(idx, 0.5 * (fhat.at(idx) + conj(fhat.at(partner))));
            }
    return out;
}

VectorField to_real(const SpectralVectorField& fhat) {
    double asym = hermitian_asymmetry(fhat);
    if (asym > kHermitianTol) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", asym);
        throw NonRealFieldError(
            std::string("to_real: spectrum is not Hermitian symmetric (relative residual ") + buf +
            ")");
    }
    VectorField out(fhat.grid);
    std::vector<cplx> work;
    for (int c = 0; c < 3; ++c) {
        work = fhat.comp[c];
        dft3(work, fhat.grid.n, FFTW_BACKWARD);
        for (std::size_t i = 0; i < work.size(); ++i) out.comp[c][i] = work[i].real();
    }
    return out;
}

ScalarField to_real(const SpectralScalarField& fhat) {
    double scale = max_abs_component(fhat.values);
    double asym = component_asymmetry(fhat.grid, fhat.values);
    if (scale > 0.0 && asym > kHermitianTol * scale)
        throw NonRealFieldError("to_real: scalar spectrum is not Hermitian symmetric");
    ScalarField out(fhat.grid);
    std::vector<cplx> work = fhat.values;
    dft3(work, fhat.grid.n, FFTW_BACKWARD);
    for (std::size_t i = 0; i < work.size(); ++i) out.values[i] = work[i].real();
    return out;
}

// ---------------------------------------------------------------------------
// Quadrature and norms
// ---------------------------------------------------------------------------

double integrate(const VectorField& f, const VectorField& g) {
    require_same_grid(f.grid, g.grid, "integrate");
    KahanSum acc;
    for (int c = 0; c < 3; ++c) {
        const auto& a = f.comp[c];
        const auto& b = g.comp[c];
        for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    }
    return acc.value() * f.grid.cell_volume();
}

double integrate(const ScalarField& f, const ScalarField& g) {
    require_same_grid(f.grid, g.grid, "integrate");
    KahanSum acc;
    for (std::size_t i = 0; i < f.values.size(); ++i) acc.add(f.values[i] * g.values[i]);
    return acc.value() * f.grid.cell_volume();
}

cplx spectral_inner(const SpectralVectorField& fhat, const SpectralVectorField& ghat) {
    require_same_grid(fhat.grid, ghat.grid, "spectral_inner");
    KahanSum re, im;
    for (int c = 0; c < 3; ++c) {
        const auto& a = fhat.comp[c];
        const auto& b = ghat.comp[c];
        for (std::size_t i = 0; i < a.size(); ++i) {
            cplx term = std::conj(a[i]) * b[i];
            re.add(term.real());
            im.add(term.imag());
        }
    }
    return fhat.grid.volume() * cplx(re.value(), im.value());
}

double max_abs(const SpectralVectorField& fhat) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c) m = std::max(m, max_abs_component(fhat.comp[c]));
    return m;
}

double max_abs(const VectorField& f) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c)
        for (double x : f.comp[c]) m = std::max(m, std::abs(x));
    return m;
}

double rms(const VectorField& f) {
    KahanSum acc;
    for (int c = 0; c < 3; ++c)
        for (double x : f.comp[c]) acc.add(x * x);
    return std::sqrt(acc.value() / static_cast<double>(f.grid.size()));
}

// ---------------------------------------------------------------------------
// Derivative operators: exact multiplication by i k
// ---------------------------------------------------------------------------

SpectralVectorField curl(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralVectorField out(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                out.set(idx, I * cross(k, fhat.at(idx)));
            }
    return out;
}

SpectralScalarField divergence(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralScalarField out(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                out.values[idx] = I * dot(to_complex(k), fhat.at(idx));
            }
    return out;
}

SpectralVectorField gradient(const SpectralScalarField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralVectorField out(g);
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                out.set(idx, (I * fhat.values[idx]) * to_complex(k));
            }
    return out;
}

// ---------------------------------------------------------------------------
// Transverse projection and helical basis
// ---------------------------------------------------------------------------

SpectralVectorField transverse_project(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    SpectralVectorField out(g);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                bool zero_mode = (ix == 0 && iy == 0 && iz == 0);
                bool nyquist = g.is_nyquist_slot(ix) || g.is_nyquist_slot(iy) ||
                               g.is_nyquist_slot(iz);
                if (zero_mode || nyquist) continue;  // stays zero
                Vec3 khat = normalized(g.wavevector(ix, iy, iz));
                CVec3 v = fhat.at(idx);
                out.set(idx, v - dot(to_complex(khat), v) * to_complex(khat));
            }
    return out;
}

double projection_defect(const SpectralVectorField& fhat) {
    SpectralVectorField proj = transverse_project(fhat);
    KahanSum removed, total;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < fhat.comp[c].size(); ++i) {
            removed.add(std::norm(fhat.comp[c][i] - proj.comp[c][i]));
            total.add(std::norm(fhat.comp[c][i]));
        }
    if (total.value() == 0.0) return 0.0;
    return std::sqrt(removed.value() / total.value());
}

void helical_frame(int mx, int my, int mz, Vec3& e1, Vec3& e2) {
    if (mx == 0 && my == 0) {
        // k along +-z: zhat x khat degenerates, pick e1 = xhat.
        e1 = {1.0, 0.0, 0.0};
        e2 = {0.0, mz > 0 ? 1.0 : -1.0, 0.0};  // khat x xhat
        return;
    }
    Vec3 khat = normalized(Vec3{static_cast<double>(mx), static_cast<double>(my),
                                static_cast<double>(mz)});
    e1 = normalized(cross(Vec3{0.0, 0.0, 1.0}, khat));
    e2 = cross(khat, e1);
}

void helical_vectors(int mx, int my, int mz, CVec3& eplus, CVec3& eminus) {
    Vec3 e1, e2;
    helical_frame(mx, my, mz, e1, e2);
    const double r = 1.0 / std::sqrt(2.0);
    const cplx I(0.0, 1.0);
    eplus = {r * (e1.x + I * e2.x), r * (e1.y + I * e2.y), r * (e1.z + I * e2.z)};
    eminus = {r * (e1.x - I * e2.x), r * (e1.y - I * e2.y), r * (e1.z - I * e2.z)};
}

HelicalAmplitudes helical_decompose(const SpectralVectorField& fhat) {
    const GridSpec& g = fhat.grid;
    double scale = max_abs(fhat);

    // Non-transverse or mean content cannot be represented in this basis.
    if (scale > 0.0) {
        double worst = std::abs(cplx(fhat.at(0).x));
        worst = std::max({worst, std::abs(fhat.at(0).y), std::abs(fhat.at(0).z)});
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy)
                for (int iz = 0; iz < g.n; ++iz) {
                    if (ix == 0 && iy == 0 && iz == 0) continue;
                    std::size_t idx = g.flat(ix, iy, iz);
                    Vec3 khat = normalized(g.wavevector(ix, iy, iz));
                    worst = std::max(worst, std::abs(dot(to_complex(khat), fhat.at(idx))));
                }
        if (worst > kTransverseTol * scale)
            throw TransversalityError(
                "helical_decompose: field has longitudinal or mean content (relative residual " +
                std::to_string(worst / scale) + ")");
    }

    HelicalAmplitudes amps(g);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                CVec3 ep, em;
                helical_vectors(g.mode_of(ix), g.mode_of(iy), g.mode_of(iz), ep, em);
                CVec3 v = fhat.at(idx);
                amps.plus[idx] = dot(conj(ep), v);
                amps.minus[idx] = dot(conj(em), v);
            }
    return amps;
}

SpectralVectorField helical_recompose(const HelicalAmplitudes& amps) {
    const GridSpec& g = amps.grid;
    SpectralVectorField out(g);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                CVec3 ep, em;
                helical_vectors(g.mode_of(ix), g.mode_of(iy), g.mode_of(iz), ep, em);
                out.set(idx, amps.plus[idx] * ep + amps.minus[idx] * em);
            }
    return out;
}

}  // namespace helab
