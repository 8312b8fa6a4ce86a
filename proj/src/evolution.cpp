#include "helab/evolution.hpp"

#include <cmath>
#include <string>

#include "helab/helicity.hpp"

namespace helab {

Integrator integrator_from_name(const std::string& name) {
    if (name == "exact") return Integrator::exact;
    if (name == "rk4") return Integrator::rk4;
    throw ConfigError("unknown integrator '" + name + "' (expected exact or rk4)");
}

std::string integrator_name(Integrator i) {
    return i == Integrator::exact ? "exact" : "rk4";
}

MaxwellState evolve_exact(const MaxwellState& s, double dt) {
    const GridSpec& g = s.grid;
    SpectralVectorField Ehat = to_spectral(s.E);
    SpectralVectorField Bhat = to_spectral(s.B);
    SpectralVectorField Enew(g), Bnew(g);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                CVec3 ep, em;
                helical_vectors(g.mode_of(ix), g.mode_of(iy), g.mode_of(iz), ep, em);
                cplx eP = dot(conj(ep), Ehat.at(idx));
                cplx eM = dot(conj(em), Ehat.at(idx));
                cplx bP = dot(conj(ep), Bhat.at(idx));
                cplx bM = dot(conj(em), Bhat.at(idx));
                double w = norm(g.wavevector(ix, iy, iz));
                double co = std::cos(w * dt), si = std::sin(w * dt);
                // Each helical channel is a harmonic pair rotating at |k|.
                cplx eP2 = eP * co + bP * si;
                cplx bP2 = bP * co - eP * si;
                cplx eM2 = eM * co - bM * si;
                cplx bM2 = bM * co + eM * si;
                Enew.set(idx, eP2 * ep + eM2 * em);
                Bnew.set(idx, bP2 * ep + bM2 * em);
            }
    MaxwellState out;
    out.grid = g;
    out.E = to_real(Enew);
    out.B = to_real(Bnew);
    out.t = s.t + dt;
    return out;
}

namespace {

struct SpectralPair {
    SpectralVectorField E, B;
};

// d/dt (Ehat, Bhat) = (i k x Bhat, -i k x Ehat)
SpectralPair maxwell_rhs(const GridSpec& g, const SpectralPair& u) {
    SpectralPair r{SpectralVectorField(g), SpectralVectorField(g)};
    const cplx I(0.0, 1.0);
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                std::size_t idx = g.flat(ix, iy, iz);
                Vec3 k = g.wavevector(ix, iy, iz);
                r.E.set(idx, I * cross(k, u.B.at(idx)));
                r.B.set(idx, (-1.0) * (I * cross(k, u.E.at(idx))));
            }
    return r;
}

SpectralPair axpy(const GridSpec& g, const SpectralPair& u, double a, const SpectralPair& v) {
    SpectralPair r{SpectralVectorField(g), SpectralVectorField(g)};
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < r.E.comp[c].size(); ++i) {
            r.E.comp[c][i] = u.E.comp[c][i] + a * v.E.comp[c][i];
            r.B.comp[c][i] = u.B.comp[c][i] + a * v.B.comp[c][i];
        }
    return r;
}

}  // namespace

MaxwellState rk4_step(const MaxwellState& s, double dt) {
    const GridSpec& g = s.grid;
    SpectralPair u{to_spectral(s.E), to_spectral(s.B)};
    SpectralPair k1 = maxwell_rhs(g, u);
    SpectralPair k2 = maxwell_rhs(g, axpy(g, u, 0.5 * dt, k1));
    SpectralPair k3 = maxwell_rhs(g, axpy(g, u, 0.5 * dt, k2));
    SpectralPair k4 = maxwell_rhs(g, axpy(g, u, dt, k3));
    SpectralPair out{SpectralVectorField(g), SpectralVectorField(g)};
    const double w = dt / 6.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < out.E.comp[c].size(); ++i) {
            out.E.comp[c][i] = u.E.comp[c][i] +
                               w * (k1.E.comp[c][i] + 2.0 * k2.E.comp[c][i] +
                                    2.0 * k3.E.comp[c][i] + k4.E.comp[c][i]);
            out.B.comp[c][i] = u.B.comp[c][i] +
                               w * (k1.B.comp[c][i] + 2.0 * k2.B.comp[c][i] +
                                    2.0 * k3.B.comp[c][i] + k4.B.comp[c][i]);
        }
    MaxwellState next;
    next.grid = g;
    next.E = to_real(out.E);
    next.B = to_real(out.B);
    next.t = s.t + dt;
    return next;
}

DiagnosticsRecord diagnostics_record(const MaxwellState& s) {
    DiagnosticsRecord r;
    r.t = s.t;
    r.energy = energy(s);
    r.chi_mag = magnetic_helicity(s);
    r.chi_el = electric_helicity(s);
    r.chi_cs = r.chi_mag + r.chi_el;
    r.eb_integral = eb_integral(s);
    r.n_diff = photon_number_difference(s);
    return r;
}

namespace {

bool record_finite(const DiagnosticsRecord& r) {
    return std::isfinite(r.energy) && std::isfinite(r.chi_mag) && std::isfinite(r.chi_el) &&
           std::isfinite(r.chi_cs) && std::isfinite(r.eb_integral) && std::isfinite(r.n_diff);
}

}  // namespace

std::vector<DiagnosticsRecord> run(const MaxwellState& s, const EvolutionConfig& cfg) {
    return run(s, cfg, nullptr);
}

std::vector<DiagnosticsRecord> run(const MaxwellState& s0, const EvolutionConfig& cfg,
                                   MaxwellState* final_state) {
    if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final))
        throw ConfigError("run: t_final must be finite and >= 0");
    if (cfg.sample_every < 1) throw ConfigError("run: sample_every must be >= 1");

    std::vector<DiagnosticsRecord> series;
    auto sample = [&](const MaxwellState& s) {
        DiagnosticsRecord r;
        try {
            r = diagnostics_record(s);
        } catch (const InvalidFieldError&) {
            throw DivergenceError("run: non-finite field values at t = " + std::to_string(s.t));
        } catch (const NonRealFieldError&) {
            throw DivergenceError("run: field data degenerated at t = " + std::to_string(s.t));
        }
        if (!record_finite(r))
            throw DivergenceError("run: non-finite field values at t = " + std::to_string(s.t));
        series.push_back(r);
    };

    sample(s0);
    if (cfg.t_final == 0.0) {
        if (final_state) *final_state = s0;
        return series;
    }
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
        throw ConfigError("run: dt must be finite and > 0");

    // Whole steps of dt, with one shortened step to land exactly on t_final.
    const double total = cfg.t_final;
    long n_full = static_cast<long>(std::floor(total / cfg.dt + 1e-9));
    double remainder = total - n_full * cfg.dt;
    if (remainder < 1e-12 * cfg.dt) remainder = 0.0;

    MaxwellState s = s0;
    auto step = [&](const MaxwellState& cur, double h) {
        // A blown-up integration surfaces inside the transforms, either as
        // non-finite fields or as amplified roundoff that breaks the
        // Hermitian symmetry of the spectrum; starting from a validated
        // state, both mean the integration diverged, not that the input was
        // malformed.
        try {
            return cfg.integrator == Integrator::exact ? evolve_exact(cur, h) : rk4_step(cur, h);
        } catch (const InvalidFieldError&) {
            throw DivergenceError("run: integration diverged near t = " + std::to_string(cur.t));
        } catch (const NonRealFieldError&) {
            throw DivergenceError("run: integration diverged near t = " + std::to_string(cur.t));
        }
    };
    for (long j = 1; j <= n_full; ++j) {
        s = step(s, cfg.dt);
        s.t = s0.t + j * cfg.dt;  // recompute to avoid accumulated roundoff
        bool is_last = (j == n_full) && remainder == 0.0;
        if (j % cfg.sample_every == 0 || is_last) sample(s);
    }
    if (remainder > 0.0) {
        s = step(s, remainder);
        s.t = s0.t + total;
        sample(s);
    }
    if (final_state) *final_state = s;
    return series;
}

}  // namespace helab
