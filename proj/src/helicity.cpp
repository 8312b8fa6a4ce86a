#include "helab/helicity.hpp"

#include <cmath>

namespace helab {

double magnetic_helicity(const MaxwellState& s) {
    PotentialPair p = potentials(s);
    return 0.5 * integrate(p.A, s.B);
}

double electric_helicity(const MaxwellState& s) {
    PotentialPair p = potentials(s);
    return -0.5 * integrate(p.C, s.E);
}

double cs_helicity(const MaxwellState& s) {
    PotentialPair p = potentials(s);
    return 0.5 * (integrate(p.A, s.B) - integrate(p.C, s.E));
}

double eb_integral(const MaxwellState& s) { return integrate(s.E, s.B); }

double photon_number_difference(const MaxwellState& s) {
    const GridSpec& g = s.grid;
    HelicalAmplitudes e = helical_decompose(to_spectral(s.E));
    HelicalAmplitudes b = helical_decompose(to_spectral(s.B));
    KahanSum acc;
    for (int ix = 0; ix < g.n; ++ix)
        for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
                if (ix == 0 && iy == 0 && iz == 0) continue;
                std::size_t idx = g.flat(ix, iy, iz);
                double w = norm(g.wavevector(ix, iy, iz));
                double signed_quanta = std::norm(e.plus[idx]) + std::norm(b.plus[idx]) -
                                       std::norm(e.minus[idx]) - std::norm(b.minus[idx]);
                acc.add(signed_quanta / (2.0 * w));
            }
    return g.volume() * acc.value();
}

double helicity_scale(const MaxwellState& s) {
    return energy(s) / s.grid.fundamental_wavenumber();
}

namespace {

// Density of the wedge square of a field-strength with electric part el and
// magnetic part mg, through the literal component table
//   F01 = el_x, F02 = el_y, F03 = el_z, F23 = -mg_x, F31 = -mg_y, F12 = -mg_z,
//   density = 4 (F01 F23 + F02 F31 + F03 F12).
ScalarField wedge_square_density(const VectorField& el, const VectorField& mg) {
    ScalarField out(el.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double f01 = el.comp[0][i], f02 = el.comp[1][i], f03 = el.comp[2][i];
        double f23 = -mg.comp[0][i], f31 = -mg.comp[1][i], f12 = -mg.comp[2][i];
        out.values[i] = 4.0 * (f01 * f23 + f02 * f31 + f03 * f12);
    }
    return out;
}

}  // namespace

PontryaginPair pontryagin_pair(const VectorField& E, const VectorField& B) {
    require_same_grid(E.grid, B.grid, "pontryagin_pair");
    PontryaginPair p;
    p.p1 = wedge_square_density(E, B);
    // The dual field-strength has electric part B and magnetic part -E; feeding it
    // through the same component table yields the second density, already carrying
    // the sign that makes the two densities pointwise negatives of each other.
    VectorField negE(E.grid);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < negE.comp[c].size(); ++i) negE.comp[c][i] = -E.comp[c][i];
    p.p2 = wedge_square_density(B, negE);
    return p;
}

PontryaginPair pontryagin_pair(const MaxwellState& s) { return pontryagin_pair(s.E, s.B); }

BudgetReport helicity_budget(const std::vector<DiagnosticsRecord>& series) {
    if (series.size() < 3)
        throw InsufficientDataError(
            "helicity_budget: need at least 3 uniformly spaced samples, got " +
            std::to_string(series.size()));
    const double h = series[1].t - series[0].t;
    if (!(h > 0.0))
        throw InsufficientDataError("helicity_budget: samples must be strictly increasing in t");
    for (std::size_t j = 1; j < series.size(); ++j) {
        double step = series[j].t - series[j - 1].t;
        if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw InsufficientDataError("helicity_budget: samples are not uniformly spaced");
    }

    BudgetReport r;
    r.sample_spacing = h;
    for (const auto& rec : series) r.scale = std::max(r.scale, std::abs(rec.energy));
    double scale = r.scale > 0.0 ? r.scale : 1.0;

    for (std::size_t j = 1; j + 1 < series.size(); ++j) {
        double dmag = (series[j + 1].chi_mag - series[j - 1].chi_mag) / (2.0 * h);
        double del = (series[j + 1].chi_el - series[j - 1].chi_el) / (2.0 * h);
        double dcs = (series[j + 1].chi_cs - series[j - 1].chi_cs) / (2.0 * h);
        r.mag_residual = std::max(r.mag_residual, std::abs(dmag + series[j].eb_integral) / scale);
        r.el_residual = std::max(r.el_residual, std::abs(del - series[j].eb_integral) / scale);
        r.cs_drift = std::max(r.cs_drift, std::abs(dcs) / scale);
    }
    return r;
}

}  // namespace helab
