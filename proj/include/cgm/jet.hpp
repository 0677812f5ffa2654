#pragma once

// Truncated multivariate Taylor expansions ("jets") in four chart variables,
// to order <= 6.  Coefficients store d^a f / a!, so products are plain
// truncated convolutions.  These jets are the single source of derivatives
// for everything downstream; finite differences appear only in test oracles.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cgm/linalg.hpp"

namespace cgm {

inline constexpr int kJetVars = 4;
inline constexpr int kMaxJetOrder = 6;

constexpr int jet_size(int order) {
    return (order + 1) * (order + 2) * (order + 3) * (order + 4) / 24;
}

struct MultiIndex {
    std::array<std::uint8_t, 4> e{};
    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
};

namespace detail {

// Basis of multi-indices |a| <= 6 in graded order (all lower degrees first),
// so truncation to a lower order is a prefix copy.
struct JetBasis {
    std::vector<MultiIndex> idx;
    // exponent tuple -> linear index (each exponent <= 6)
    std::array<int, 7 * 7 * 7 * 7> lookup{};

    static int key(int a, int b, int c, int d) { return ((a * 7 + b) * 7 + c) * 7 + d; }

    JetBasis() {
        lookup.fill(-1);
        for (int deg = 0; deg <= kMaxJetOrder; ++deg)
            for (int a = deg; a >= 0; --a)
                for (int b = deg - a; b >= 0; --b)
                    for (int c = deg - a - b; c >= 0; --c) {
                        const int d = deg - a - b - c;
                        MultiIndex m;
                        m.e = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
                        lookup[key(a, b, c, d)] = static_cast<int>(idx.size());
                        idx.push_back(m);
                    }
    }

    int find(int a, int b, int c, int d) const { return lookup[key(a, b, c, d)]; }

    static const JetBasis& get() {
        static const JetBasis basis;
        return basis;
    }
};

struct ProductTriple {
    std::uint16_t ia, ib, it;
};

// All coefficient pairs contributing to a truncated product of order K.
template <int K>
const std::vector<ProductTriple>& product_table() {
    static const std::vector<ProductTriple> table = [] {
        const JetBasis& basis = JetBasis::get();
        std::vector<ProductTriple> t;
        const int n = jet_size(K);
        for (int ia = 0; ia < n; ++ia) {
            const MultiIndex& a = basis.idx[ia];
            if (a.degree() > K) continue;
            for (int ib = 0; ib < n; ++ib) {
                const MultiIndex& b = basis.idx[ib];
                if (a.degree() + b.degree() > K) continue;
                const int it = basis.find(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2],
                                          a.e[3] + b.e[3]);
                t.push_back({static_cast<std::uint16_t>(ia), static_cast<std::uint16_t>(ib),
                             static_cast<std::uint16_t>(it)});
            }
        }
        return t;
    }();
    return table;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace detail

template <int K>
class Jet {
    static_assert(K >= 0 && K <= kMaxJetOrder);

public:
    static constexpr int order = K;
    static constexpr int size = jet_size(K);

    Jet() { c_.fill(0.0); }
    explicit Jet(double value) {
        c_.fill(0.0);
        c_[0] = value;
    }

    /// Jet of the coordinate function u_var at the point with given value.
    static Jet variable(double value, int var) {
        Jet j(value);
        if constexpr (K >= 1) j.c_[1 + var] = 1.0;
        return j;
    }

    static Jet constant(double value) { return Jet(value); }

    double& operator[](int i) { return c_[i]; }
    double operator[](int i) const { return c_[i]; }

    double value() const { return c_[0]; }

    /// Value of the partial derivative d^a f (coefficient times a!).
    double deriv_value(int a, int b = 0, int c = 0, int d = 0) const {
        const auto& basis = detail::JetBasis::get();
        const int i = basis.find(a, b, c, d);
        if (i < 0 || i >= size) throw domain_error("jet: derivative order out of range");
        double f = detail::factorial(a) * detail::factorial(b) * detail::factorial(c) * detail::factorial(d);
        return c_[i] * f;
    }

    Jet& operator+=(const Jet& o) {
        for (int i = 0; i < size; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int i = 0; i < size; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Jet& operator*=(double s) {
        for (int i = 0; i < size; ++i) c_[i] *= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator-(Jet a) {
        for (int i = 0; i < size; ++i) a.c_[i] = -a.c_[i];
        return a;
    }
    friend Jet operator+(Jet a, double s) {
        a.c_[0] += s;
        return a;
    }
    friend Jet operator-(Jet a, double s) {
        a.c_[0] -= s;
        return a;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (const auto& t : detail::product_table<K>()) r.c_[t.it] += a.c_[t.ia] * b.c_[t.ib];
        return r;
    }

    /// r += a*b without a temporary.
    friend void mul_add(Jet& r, const Jet& a, const Jet& b) {
        for (const auto& t : detail::product_table<K>()) r.c_[t.it] += a.c_[t.ia] * b.c_[t.ib];
    }
    friend void mul_sub(Jet& r, const Jet& a, const Jet& b) {
        for (const auto& t : detail::product_table<K>()) r.c_[t.it] -= a.c_[t.ia] * b.c_[t.ib];
    }

    const std::array<double, size>& coefficients() const { return c_; }

private:
    std::array<double, size> c_;
};

/// Truncation to a lower order is a prefix copy (graded coefficient order).
template <int M, int K>
inline Jet<M> truncate(const Jet<K>& a) {
    static_assert(M <= K);
    Jet<M> r;
    for (int i = 0; i < Jet<M>::size; ++i) r[i] = a[i];
    return r;
}

/// Partial derivative d/du_var, one order lower.
template <int K>
inline Jet<K - 1> deriv(const Jet<K>& a, int var) {
    static_assert(K >= 1);
    const auto& basis = detail::JetBasis::get();
    Jet<K - 1> r;
    for (int i = 0; i < Jet<K - 1>::size; ++i) {
        MultiIndex m = basis.idx[i];
        int e[4] = {m.e[0], m.e[1], m.e[2], m.e[3]};
        e[var] += 1;
        const int src = basis.find(e[0], e[1], e[2], e[3]);
        r[i] = a[src] * static_cast<double>(e[var]);
    }
    return r;
}

namespace detail {

// Composition with a univariate analytic function given the derivatives of f
// at the jet's value: result = sum_m f^(m)(a0)/m! * (a - a0)^m, Horner style.
template <int K>
inline Jet<K> compose_univariate(const Jet<K>& a, const std::array<double, kMaxJetOrder + 1>& scaled) {
    Jet<K> p = a;
    p[0] = 0.0;
    Jet<K> r(scaled[K]);
    for (int m = K - 1; m >= 0; --m) {
        Jet<K> next(scaled[m]);
        mul_add(next, r, p);
        r = next;
    }
    return r;
}

}  // namespace detail

template <int K>
inline Jet<K> jet_sqrt(const Jet<K>& a) {
    const double v = a.value();
    if (!(v > 0.0)) throw domain_error("jet_sqrt: argument not positive");
    std::array<double, kMaxJetOrder + 1> d{};
    // f = v^(1/2), f^(m)/m! = C(1/2, m) v^(1/2-m)
    double coeff = 1.0, power = std::sqrt(v), e = 0.5;
    for (int m = 0; m <= K; ++m) {
        d[m] = coeff * power;
        coeff *= (e - m) / (m + 1);
        power /= v;
    }
    return detail::compose_univariate(a, d);
}

template <int K>
inline Jet<K> jet_recip(const Jet<K>& a) {
    const double v = a.value();
    if (v == 0.0) throw domain_error("jet_recip: reciprocal at zero");
    std::array<double, kMaxJetOrder + 1> d{};
    double p = 1.0 / v;
    for (int m = 0; m <= K; ++m) {
        d[m] = (m % 2 == 0) ? p : -p;
        p /= v;
    }
    return detail::compose_univariate(a, d);
}

template <int K>
inline Jet<K> operator/(const Jet<K>& a, const Jet<K>& b) {
    return a * jet_recip(b);
}

template <int K>
inline Jet<K> jet_pow(const Jet<K>& a, double e) {
    const double v = a.value();
    if (!(v > 0.0)) throw domain_error("jet_pow: base not positive");
    std::array<double, kMaxJetOrder + 1> d{};
    double coeff = 1.0, power = std::pow(v, e);
    for (int m = 0; m <= K; ++m) {
        d[m] = coeff * power;
        coeff *= (e - m) / (m + 1);
        power /= v;
    }
    return detail::compose_univariate(a, d);
}

template <int K>
inline Jet<K> jet_sin(const Jet<K>& a) {
    const double v = a.value();
    const double s = std::sin(v), c = std::cos(v);
    const std::array<double, 4> cycle = {s, c, -s, -c};
    std::array<double, kMaxJetOrder + 1> d{};
    for (int m = 0; m <= K; ++m) d[m] = cycle[m % 4] / detail::factorial(m);
    return detail::compose_univariate(a, d);
}

template <int K>
inline Jet<K> jet_cos(const Jet<K>& a) {
    const double v = a.value();
    const double s = std::sin(v), c = std::cos(v);
    const std::array<double, 4> cycle = {c, -s, -c, s};
    std::array<double, kMaxJetOrder + 1> d{};
    for (int m = 0; m <= K; ++m) d[m] = cycle[m % 4] / detail::factorial(m);
    return detail::compose_univariate(a, d);
}

/// Evaluate the truncated polynomial at a displacement from the base point.
template <int K>
inline double jet_eval(const Jet<K>& a, const Vec4& delta) {
    const auto& basis = detail::JetBasis::get();
    double s = 0.0;
    for (int i = 0; i < Jet<K>::size; ++i) {
        const MultiIndex& m = basis.idx[i];
        double term = a[i];
        for (int v = 0; v < 4; ++v)
            for (int p = 0; p < m.e[v]; ++p) term *= delta[v];
        s += term;
    }
    return s;
}

/// Substitute four inner jets (a chart re-parametrization) into `f`.
/// The inner jets must have the values of the point where `f` was expanded.
template <int K>
inline Jet<K> jet_compose(const Jet<K>& f, const std::array<Jet<K>, 4>& inner) {
    const auto& basis = detail::JetBasis::get();
    std::array<Jet<K>, 4> p = inner;
    for (int v = 0; v < 4; ++v) p[v][0] = 0.0;  // displacement jets

    // Powers of each displacement up to K.
    std::array<std::array<Jet<K>, kMaxJetOrder + 1>, 4> pw;
    for (int v = 0; v < 4; ++v) {
        pw[v][0] = Jet<K>(1.0);
        for (int m = 1; m <= K; ++m) pw[v][m] = pw[v][m - 1] * p[v];
    }
    Jet<K> r;
    for (int i = 0; i < Jet<K>::size; ++i) {
        if (f[i] == 0.0) continue;
        const MultiIndex& m = basis.idx[i];
        Jet<K> term = pw[0][m.e[0]] * pw[1][m.e[1]];
        term = term * pw[2][m.e[2]];
        term = term * pw[3][m.e[3]];
        r += f[i] * term;
    }
    return r;
}

template <int N, int K>
using JetMap = std::array<Jet<K>, N>;

template <int N, int K>
inline std::array<double, N> map_values(const JetMap<N, K>& m) {
    std::array<double, N> v{};
    for (int i = 0; i < N; ++i) v[i] = m[i].value();
    return v;
}

template <int N, int K>
inline Jet<K> dot_jets(const JetMap<N, K>& a, const JetMap<N, K>& b) {
    Jet<K> s;
    for (int i = 0; i < N; ++i) mul_add(s, a[i], b[i]);
    return s;
}

}  // namespace cgm
