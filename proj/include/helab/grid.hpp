#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "helab/errors.hpp"
#include "helab/vec3.hpp"

namespace helab {

// Uniform periodic lattice on a cubic box [0, L)^3 with n points per axis.
//
// Conventions fixed here and relied on everywhere else:
//   - grid point (ix, iy, iz) sits at x = (ix, iy, iz) * (L/n), corner origin;
//   - flat index = (ix*n + iy)*n + iz (z fastest);
//   - spectral slot (ix, iy, iz) carries integer mode m_axis = i for i < n/2
//     and i - n otherwise, wavevector k = (2*pi/L) * m;
//   - slot n/2 per axis is the unpaired (Nyquist) mode; physical fields keep
//     it empty because it cannot carry a Hermitian-symmetric complex pair.
struct GridSpec {
    int n = 0;
    double box_length = 0.0;

    GridSpec() = default;

    GridSpec(int n_, double box_length_) : n(n_), box_length(box_length_) {
        if (n < 4 || n % 2 != 0)
            throw ConfigError("grid size must be an even integer >= 4, got " + std::to_string(n));
        if (!(box_length > 0.0) || !std::isfinite(box_length))
            throw ConfigError("box length must be positive and finite");
    }

    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    double spacing() const { return box_length / n; }
    double volume() const { return box_length * box_length * box_length; }
    double cell_volume() const {
        double h = spacing();
        return h * h * h;
    }

    std::size_t flat(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
    }

    // Signed integer mode for a spectral slot index.
    int mode_of(int i) const { return i < n / 2 ? i : i - n; }

    // Slot holding the complex conjugate partner -m of slot i.
    int conjugate_slot(int i) const { return (n - i) % n; }

    bool is_nyquist_slot(int i) const { return i == n / 2; }

    double fundamental_wavenumber() const { return 2.0 * 3.14159265358979323846 / box_length; }

    Vec3 wavevector(int ix, int iy, int iz) const {
        double f = fundamental_wavenumber();
        return {f * mode_of(ix), f * mode_of(iy), f * mode_of(iz)};
    }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.n == b.n && a.box_length == b.box_length;
    }
    friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (a != b)
        throw ShapeError(std::string(where) + ": operands live on different grids");
}

// Real sampled scalar on the lattice.
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}
};

// Real sampled 3-vector field, one contiguous array per Cartesian component.
struct VectorField {
    GridSpec grid;
    std::array<std::vector<double>, 3> comp;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }

    Vec3 at(std::size_t idx) const { return {comp[0][idx], comp[1][idx], comp[2][idx]}; }

    void set(std::size_t idx, Vec3 v) {
        comp[0][idx] = v.x;
        comp[1][idx] = v.y;
        comp[2][idx] = v.z;
    }
};

// Complex spectral scalar, same slot layout as the real lattice.
struct SpectralScalarField {
    GridSpec grid;
    std::vector<cplx> values;

    SpectralScalarField() = default;
    explicit SpectralScalarField(const GridSpec& g) : grid(g), values(g.size(), cplx(0.0)) {}
};

// Complex spectral 3-vector field. Hermitian symmetry (the transform of a real
// field) is a checked property, never an assumption baked into the layout:
// all n^3 slots are stored.
struct SpectralVectorField {
    GridSpec grid;
    std::array<std::vector<cplx>, 3> comp;

    SpectralVectorField() = default;
    explicit SpectralVectorField(const GridSpec& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), cplx(0.0));
    }

    CVec3 at(std::size_t idx) const { return {comp[0][idx], comp[1][idx], comp[2][idx]}; }

    void set(std::size_t idx, CVec3 v) {
        comp[0][idx] = v.x;
        comp[1][idx] = v.y;
        comp[2][idx] = v.z;
    }
};

// Helical (circular-polarization) amplitudes of a transverse spectral field:
// f(k) = plus(k) e_+(k) + minus(k) e_-(k) for every k != 0, where the helical
// unit vectors obey i khat x e_pm = pm e_pm. Slots for k = 0 stay zero.
struct HelicalAmplitudes {
    GridSpec grid;
    std::vector<cplx> plus, minus;

    HelicalAmplitudes() = default;
    explicit HelicalAmplitudes(const GridSpec& g)
        : grid(g), plus(g.size(), cplx(0.0)), minus(g.size(), cplx(0.0)) {}
};

}  // namespace helab
