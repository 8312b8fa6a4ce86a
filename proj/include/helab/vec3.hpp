#pragma once

#include <cmath>
#include <complex>

namespace helab {

using cplx = std::complex<double>;

// Small fixed-size vectors used for per-mode arithmetic. Field storage is
// structure-of-arrays (see grid.hpp); these are only working registers.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(Vec3 a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

struct CVec3 {
    cplx x = 0.0, y = 0.0, z = 0.0;
};

inline CVec3 operator+(CVec3 a, CVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline CVec3 operator-(CVec3 a, CVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline CVec3 operator*(cplx s, CVec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline CVec3 operator*(double s, CVec3 a) { return {s * a.x, s * a.y, s * a.z}; }

// Bilinear dot product (no conjugation); pair with conj() explicitly when a
// Hermitian product is meant.
inline cplx dot(CVec3 a, CVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline CVec3 conj(CVec3 a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }

inline CVec3 cross(CVec3 a, CVec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline CVec3 cross(Vec3 a, CVec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double abs2(CVec3 a) { return std::norm(a.x) + std::norm(a.y) + std::norm(a.z); }

inline CVec3 to_complex(Vec3 a) { return {a.x, a.y, a.z}; }

// Compensated (Kahan) accumulator. Lattice sums reach ~2.6e5 terms at 64^3;
// plain summation would lose ~1e-11 relative accuracy, which is within the
// tolerance budget of several identities, so every quadrature goes through this.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace helab
