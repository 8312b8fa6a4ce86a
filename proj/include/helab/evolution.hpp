#pragma once

#include <string>
#include <vector>

#include "helab/state.hpp"

namespace helab {

enum class Integrator { exact, rk4 };

Integrator integrator_from_name(const std::string& name);
std::string integrator_name(Integrator i);

struct EvolutionConfig {
    double dt = 0.1;
    double t_final = 1.0;
    Integrator integrator = Integrator::exact;
    int sample_every = 1;
};

// One-step exact propagator for any step size: in the helical basis each mode
// pair (e_pm(k), b_pm(k)) of (Ehat, Bhat) rotates rigidly at frequency |k|,
//   e_pm -> e_pm cos(|k| dt) pm b_pm sin(|k| dt),
//   b_pm -> b_pm cos(|k| dt) mp e_pm sin(|k| dt),
// equivalently the Riemann-Silberstein helical components pick up phases
// exp(mp i |k| dt). Error is roundoff only; steps compose exactly.
MaxwellState evolve_exact(const MaxwellState& s, double dt);

// Classical fourth-order Runge-Kutta step on the spectral Maxwell system
// dEhat/dt = i k x Bhat, dBhat/dt = -i k x Ehat. Reference integrator for
// convergence-order measurements; global error O(dt^4).
MaxwellState rk4_step(const MaxwellState& s, double dt);

// One sampled row of the diagnostic time series.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double chi_mag = 0.0;
    double chi_el = 0.0;
    double chi_cs = 0.0;
    double eb_integral = 0.0;
    double n_diff = 0.0;
};

DiagnosticsRecord diagnostics_record(const MaxwellState& s);

// Integrate from s.t to s.t + t_final, recording every sample_every-th step
// plus the initial and final times. t_final = 0 yields the single initial
// record. Non-finite diagnostics abort with DivergenceError naming the time.
std::vector<DiagnosticsRecord> run(const MaxwellState& s, const EvolutionConfig& cfg);

// Same loop, but also hands back the final state.
std::vector<DiagnosticsRecord> run(const MaxwellState& s, const EvolutionConfig& cfg,
                                   MaxwellState* final_state);

}  // namespace helab
