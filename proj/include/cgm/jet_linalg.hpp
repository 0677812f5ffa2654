#pragma once

// Small fixed-size linear algebra over jet-valued entries.

#include "cgm/jet.hpp"
#include "cgm/minkowski.hpp"

namespace cgm {

template <int K>
using Mat4J = std::array<std::array<Jet<K>, 4>, 4>;

template <int K>
using Vec4J = std::array<Jet<K>, 4>;

template <int K>
inline Mat4J<K> mat4j_mul(const Mat4J<K>& a, const Mat4J<K>& b) {
    Mat4J<K> r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) mul_add(r[i][j], a[i][k], b[k][j]);
    return r;
}

template <int K>
inline Jet<K> mat4j_trace(const Mat4J<K>& a) {
    Jet<K> t = a[0][0];
    t += a[1][1];
    t += a[2][2];
    t += a[3][3];
    return t;
}

template <int K>
inline Jet<K> det3j(const Jet<K>& a00, const Jet<K>& a01, const Jet<K>& a02, const Jet<K>& a10,
                    const Jet<K>& a11, const Jet<K>& a12, const Jet<K>& a20, const Jet<K>& a21,
                    const Jet<K>& a22) {
    Jet<K> r;
    Jet<K> m0 = a11 * a22;
    mul_sub(m0, a12, a21);
    mul_add(r, a00, m0);
    Jet<K> m1 = a10 * a22;
    mul_sub(m1, a12, a20);
    mul_sub(r, a01, m1);
    Jet<K> m2 = a10 * a21;
    mul_sub(m2, a11, a20);
    mul_add(r, a02, m2);
    return r;
}

template <int K>
inline Jet<K> mat4j_det(const Mat4J<K>& m) {
    Jet<K> d;
    for (int c = 0; c < 4; ++c) {
        int cols[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != c) cols[k++] = j;
        Jet<K> minor = det3j(m[1][cols[0]], m[1][cols[1]], m[1][cols[2]], m[2][cols[0]], m[2][cols[1]],
                             m[2][cols[2]], m[3][cols[0]], m[3][cols[1]], m[3][cols[2]]);
        if (c % 2 == 0)
            mul_add(d, m[0][c], minor);
        else
            mul_sub(d, m[0][c], minor);
    }
    return d;
}

// Adjugate-based inverse; keeps everything polynomial before one reciprocal.
template <int K>
inline Mat4J<K> mat4j_inverse(const Mat4J<K>& m) {
    Mat4J<K> adj{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int rows[3], cols[3], a = 0, b = 0;
            for (int r = 0; r < 4; ++r)
                if (r != i) rows[a++] = r;
            for (int c = 0; c < 4; ++c)
                if (c != j) cols[b++] = c;
            Jet<K> minor = det3j(m[rows[0]][cols[0]], m[rows[0]][cols[1]], m[rows[0]][cols[2]],
                                 m[rows[1]][cols[0]], m[rows[1]][cols[1]], m[rows[1]][cols[2]],
                                 m[rows[2]][cols[0]], m[rows[2]][cols[1]], m[rows[2]][cols[2]]);
            adj[j][i] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    Jet<K> det = mat4j_det(m);
    if (std::abs(det.value()) < 1e-300) throw singularity_error("mat4j_inverse: singular matrix");
    Jet<K> inv = jet_recip(det);
    Mat4J<K> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = adj[i][j] * inv;
    return r;
}

template <int M, int K>
inline Mat4J<M> truncate_mat(const Mat4J<K>& m) {
    Mat4J<M> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = truncate<M>(m[i][j]);
    return r;
}

template <int M, int N, int K>
inline JetMap<N, M> truncate_map(const JetMap<N, K>& m) {
    JetMap<N, M> r{};
    for (int i = 0; i < N; ++i) r[i] = truncate<M>(m[i]);
    return r;
}

template <int K>
inline Mat4 mat_values(const Mat4J<K>& m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = m[i][j].value();
    return r;
}

/// Generalized cross product in R^5: the vector orthogonal to four given
/// jet-valued columns, with components given by signed 4x4 minors.
template <int K>
inline JetMap<5, K> cross5(const std::array<JetMap<5, K>, 4>& cols) {
    JetMap<5, K> n{};
    for (int a = 0; a < 5; ++a) {
        Mat4J<K> minor{};
        int r = 0;
        for (int row = 0; row < 5; ++row) {
            if (row == a) continue;
            for (int c = 0; c < 4; ++c) minor[r][c] = cols[c][row];
            ++r;
        }
        Jet<K> d = mat4j_det(minor);
        n[a] = (a % 2 == 0) ? d : -d;
    }
    return n;
}

template <int K>
using Mink7J = JetMap<7, K>;

template <int K>
inline Jet<K> eta_dot_jets(const Mink7J<K>& a, const Mink7J<K>& b) {
    Jet<K> s;
    for (int i = 0; i < 6; ++i) mul_add(s, a[i], b[i]);
    mul_sub(s, a[6], b[6]);
    return s;
}

}  // namespace cgm
