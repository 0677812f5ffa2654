#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace cgm {

using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;
using Vec7 = std::array<double, 7>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat7 = std::array<std::array<double, 7>, 7>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : error {
    using error::error;
};
struct degeneracy_error : error {
    using error::error;
};
struct singularity_error : error {
    using error::error;
};
struct validation_error : error {
    using error::error;
};
struct unsupported_error : error {
    using error::error;
};

template <std::size_t N>
inline double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t N>
inline double norm(const std::array<double, N>& a) {
    return std::sqrt(dot(a, a));
}

template <std::size_t N>
inline std::array<double, N> operator+(const std::array<double, N>& a, const std::array<double, N>& b) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& a, const std::array<double, N>& b) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(double s, const std::array<double, N>& a) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
}

inline Mat4 mat4_zero() { return Mat4{}; }

inline Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a[i][k];
            for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

inline Mat4 mat4_transpose(const Mat4& a) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}

inline double mat4_trace(const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

inline double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
                   double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

inline double mat4_det(const Mat4& m) {
    double d = 0.0;
    for (int c = 0; c < 4; ++c) {
        int cols[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != c) cols[k++] = j;
        const double minor =
            det3(m[1][cols[0]], m[1][cols[1]], m[1][cols[2]], m[2][cols[0]], m[2][cols[1]], m[2][cols[2]],
                 m[3][cols[0]], m[3][cols[1]], m[3][cols[2]]);
        d += ((c % 2 == 0) ? 1.0 : -1.0) * m[0][c] * minor;
    }
    return d;
}

// Inverse by Gaussian elimination with partial pivoting.
inline Mat4 mat4_inverse(const Mat4& m) {
    std::array<std::array<double, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
        a[i][4 + i] = 1.0;
    }
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-300) throw singularity_error("mat4_inverse: singular matrix");
        std::swap(a[c], a[p]);
        const double inv = 1.0 / a[c][c];
        for (int j = 0; j < 8; ++j) a[c][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            const double f = a[r][c];
            if (f == 0.0) continue;
            for (int j = 0; j < 8; ++j) a[r][j] -= f * a[c][j];
        }
    }
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = a[i][4 + j];
    return out;
}

// General small dense determinant (partial pivoting), used for the 5x5 and 7x7 frames.
template <std::size_t N>
inline double det_n(std::array<std::array<double, N>, N> a) {
    double d = 1.0;
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < N; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(a[c], a[p]);
            d = -d;
        }
        d *= a[c][c];
        const double inv = 1.0 / a[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            const double f = a[r][c] * inv;
            if (f == 0.0) continue;
            for (std::size_t j = c; j < N; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

// Solve a small dense linear system in place; throws on (near-)singular pivot.
template <std::size_t N>
inline std::array<double, N> solve_n(std::array<std::array<double, N>, N> a, std::array<double, N> b) {
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < N; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-300) throw singularity_error("solve_n: singular system");
        if (p != c) {
            std::swap(a[c], a[p]);
            std::swap(b[c], b[p]);
        }
        const double inv = 1.0 / a[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            const double f = a[r][c] * inv;
            if (f == 0.0) continue;
            for (std::size_t j = c; j < N; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    std::array<double, N> x{};
    for (std::size_t i = N; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < N; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Neumaier compensated accumulator; summation order is fixed by the caller.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace cgm
