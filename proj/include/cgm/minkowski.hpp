#pragma once

#include <array>
#include <cmath>

#include "cgm/linalg.hpp"

namespace cgm {

/// Vectors in R^{6,1}: six spacelike coordinates followed by one timelike.
using MinkowskiVec = Vec7;

/// Antisymmetric 7x7 matrix with raw upper indices; contractions with the
/// metric are done explicitly at use sites.
using WedgeMatrix = Mat7;

inline constexpr std::array<double, 7> kEtaDiag = {1, 1, 1, 1, 1, 1, -1};

inline double eta_dot(const MinkowskiVec& u, const MinkowskiVec& v) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += u[i] * v[i];
    return s - u[6] * v[6];
}

inline double eta_norm2(const MinkowskiVec& v) { return eta_dot(v, v); }

/// (a ^ b)^{ij} = a^i b^j - a^j b^i
inline WedgeMatrix wedge(const MinkowskiVec& a, const MinkowskiVec& b) {
    WedgeMatrix w{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) w[i][j] = a[i] * b[j] - a[j] * b[i];
    return w;
}

/// Max-norm of M^T eta M - eta; zero iff M preserves the Minkowski metric.
inline double lorentz_residual(const Mat7& m) {
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            double s = 0.0;
            for (int k = 0; k < 7; ++k) s += m[k][i] * kEtaDiag[k] * m[k][j];
            const double target = (i == j) ? kEtaDiag[i] : 0.0;
            worst = std::max(worst, std::abs(s - target));
        }
    return worst;
}

inline Mat7 mat7_identity() {
    Mat7 m{};
    for (int i = 0; i < 7; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat7 mat7_mul(const Mat7& a, const Mat7& b) {
    Mat7 r{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < 7; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

inline MinkowskiVec mat7_apply(const Mat7& m, const MinkowskiVec& v) {
    MinkowskiVec r{};
    for (int i = 0; i < 7; ++i) {
        double s = 0.0;
        for (int j = 0; j < 7; ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

/// so(6,1) generators with raw (raised) indices M^{ij} = -M^{ji}.  The induced
/// infinitesimal action on vectors is x -> M . (eta x).
inline Mat7 so61_generator(int i, int j, double magnitude = 1.0) {
    Mat7 m{};
    m[i][j] = magnitude;
    m[j][i] = -magnitude;
    return m;
}

inline MinkowskiVec so61_apply(const Mat7& gen, const MinkowskiVec& x) {
    MinkowskiVec lowered{};
    for (int i = 0; i < 7; ++i) lowered[i] = kEtaDiag[i] * x[i];
    return mat7_apply(gen, lowered);
}

/// Finite rotation in the spacelike plane (i,j), i,j < 6.
inline Mat7 spatial_rotation(int i, int j, double angle) {
    Mat7 m = mat7_identity();
    m[i][i] = std::cos(angle);
    m[j][j] = std::cos(angle);
    m[i][j] = -std::sin(angle);
    m[j][i] = std::sin(angle);
    return m;
}

/// Finite boost mixing spacelike coordinate i < 6 with the timelike one.
inline Mat7 lorentz_boost(int i, double rapidity) {
    Mat7 m = mat7_identity();
    m[i][i] = std::cosh(rapidity);
    m[6][6] = std::cosh(rapidity);
    m[i][6] = std::sinh(rapidity);
    m[6][i] = std::sinh(rapidity);
    return m;
}

}  // namespace cgm
