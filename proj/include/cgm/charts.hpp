#pragma once

// Analytic charts of the model hypersurfaces.  Every chart produces exact
// truncated Taylor expansions of the immersion at interior parameter points;
// that is the only way geometry enters the library.

#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <variant>

#include "cgm/jet.hpp"
#include "cgm/moebius.hpp"

namespace cgm {

inline constexpr double kPi = 3.14159265358979323846;

enum class AxisRule {
    GaussLegendre,     // open interval, nodes never touch the ends
    GaussLegendreCos,  // Gauss-Legendre in the cosine of the angle
    Trapezoid,         // periodic, equispaced
};

struct AxisSpec {
    double lo = 0.0;
    double hi = 1.0;
    AxisRule rule = AxisRule::GaussLegendre;
    bool periodic = false;
};

using ChartAxes = std::array<AxisSpec, 4>;

namespace chartdetail {

// Unit S^3 in R^4 from (psi, theta, phi); volume factor sin^2(psi) sin(theta).
template <int K>
inline JetMap<4, K> unit_s3(const Jet<K>& psi, const Jet<K>& theta, const Jet<K>& phi) {
    JetMap<4, K> w{};
    Jet<K> sp = jet_sin(psi), cp = jet_cos(psi);
    Jet<K> st = jet_sin(theta), ct = jet_cos(theta);
    Jet<K> sf = jet_sin(phi), cf = jet_cos(phi);
    w[0] = cp;
    w[1] = sp * ct;
    Jet<K> ring = sp * st;
    w[2] = ring * cf;
    w[3] = ring * sf;
    return w;
}

// Unit S^4 in R^5 from (psi1, psi2, psi3, phi); first coordinate cos(psi1).
template <int K>
inline JetMap<5, K> unit_s4(const Jet<K>& psi1, const Jet<K>& psi2, const Jet<K>& psi3,
                            const Jet<K>& phi) {
    JetMap<5, K> w{};
    Jet<K> s1 = jet_sin(psi1), c1 = jet_cos(psi1);
    JetMap<4, K> inner = unit_s3(psi2, psi3, phi);
    w[0] = c1;
    for (int i = 0; i < 4; ++i) w[1 + i] = s1 * inner[i];
    return w;
}

}  // namespace chartdetail

/// Polar chart of a round (or radially perturbed) sphere covering one
/// hemisphere; two mirrored copies with disjoint quadrature domains cover the
/// sphere, and Gauss-Legendre nodes keep the poles unevaluated.
struct SphereChart {
    double radius = 1.0;
    Vec5 center{};
    bool south = false;
    double perturbation = 0.0;  // radial amplitude of the x1*x2 mode
    double orientation = 1.0;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const {
        Jet<K> psi1 = Jet<K>::variable(u[0], 0);
        Jet<K> psi2 = Jet<K>::variable(u[1], 1);
        Jet<K> psi3 = Jet<K>::variable(u[2], 2);
        Jet<K> phi = Jet<K>::variable(u[3], 3);
        JetMap<5, K> w = chartdetail::unit_s4(psi1, psi2, psi3, phi);
        if (south) w[0] = -w[0];
        Jet<K> r(radius);
        if (perturbation != 0.0) {
            Jet<K> p = w[0] * w[1];
            r = r * (p * perturbation + 1.0);
        }
        JetMap<5, K> x{};
        for (int i = 0; i < 5; ++i) x[i] = r * w[i] + center[i];
        return x;
    }

    ChartAxes axes() const {
        return {AxisSpec{0.0, kPi / 2.0, AxisRule::GaussLegendreCos, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendreCos, false},
                AxisSpec{0.0, 2.0 * kPi, AxisRule::Trapezoid, true}};
    }
};

/// S^1 x S^3 hypersurface of revolution with major radius R and tube radius a.
struct TorusChart {
    double major = 2.0;
    double minor = 1.0;
    double orientation = 1.0;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const {
        Jet<K> th = Jet<K>::variable(u[0], 0);
        Jet<K> psi = Jet<K>::variable(u[1], 1);
        Jet<K> tht = Jet<K>::variable(u[2], 2);
        Jet<K> phi = Jet<K>::variable(u[3], 3);
        JetMap<4, K> w = chartdetail::unit_s3(psi, tht, phi);
        Jet<K> rho = jet_cos(th) * minor + major;
        JetMap<5, K> x{};
        for (int i = 0; i < 4; ++i) x[i] = rho * w[i];
        x[4] = jet_sin(th) * minor;
        return x;
    }

    ChartAxes axes() const {
        return {AxisSpec{0.0, 2.0 * kPi, AxisRule::Trapezoid, true},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendreCos, false},
                AxisSpec{0.0, 2.0 * kPi, AxisRule::Trapezoid, true}};
    }
};

/// Flat square times a unit 2-sphere, (x, y, p) in R^2 x S^2 subset R^5.
struct PatchR2xS2Chart {
    double side = 1.0;
    double orientation = 1.0;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const {
        Jet<K> x = Jet<K>::variable(u[0], 0);
        Jet<K> y = Jet<K>::variable(u[1], 1);
        Jet<K> tht = Jet<K>::variable(u[2], 2);
        Jet<K> phi = Jet<K>::variable(u[3], 3);
        Jet<K> st = jet_sin(tht), ct = jet_cos(tht);
        JetMap<5, K> r{};
        r[0] = x;
        r[1] = y;
        r[2] = ct;
        r[3] = st * jet_cos(phi);
        r[4] = st * jet_sin(phi);
        return r;
    }

    ChartAxes axes() const {
        return {AxisSpec{0.0, side, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, side, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendreCos, false},
                AxisSpec{0.0, 2.0 * kPi, AxisRule::Trapezoid, true}};
    }
};

/// Flat segment times a unit 3-sphere, (t, w) in R x S^3 subset R^5.
struct PatchRxS3Chart {
    double length = 1.0;
    double orientation = 1.0;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const {
        Jet<K> t = Jet<K>::variable(u[0], 0);
        Jet<K> psi = Jet<K>::variable(u[1], 1);
        Jet<K> tht = Jet<K>::variable(u[2], 2);
        Jet<K> phi = Jet<K>::variable(u[3], 3);
        JetMap<4, K> w = chartdetail::unit_s3(psi, tht, phi);
        JetMap<5, K> r{};
        r[0] = t;
        for (int i = 0; i < 4; ++i) r[1 + i] = w[i];
        return r;
    }

    ChartAxes axes() const {
        return {AxisSpec{0.0, length, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendre, false},
                AxisSpec{0.0, kPi, AxisRule::GaussLegendreCos, false},
                AxisSpec{0.0, 2.0 * kPi, AxisRule::Trapezoid, true}};
    }
};

struct AnyChart;

/// A chart post-composed with a conformal transformation of the ambient space.
struct MoebiusChart {
    std::shared_ptr<const AnyChart> base;
    MoebiusMap map;
    double orientation_factor = 1.0;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const;
    ChartAxes axes() const;
};

/// A chart pre-composed with a polynomial diffeomorphism of the parameters:
/// u -> affine + cubic correction.  Used by invariance checks; sampling stays
/// pointwise, so the reported axes are those of the base chart.
struct ReparamChart {
    std::shared_ptr<const AnyChart> base;
    Mat4 linear = mat4_identity();
    Vec4 shift{};
    double cubic_amp = 0.0;

    template <int K>
    std::array<Jet<K>, 4> param_jets(const Vec4& u) const {
        std::array<Jet<K>, 4> uj{};
        for (int i = 0; i < 4; ++i) uj[i] = Jet<K>::variable(u[i], i);
        std::array<Jet<K>, 4> v{};
        for (int i = 0; i < 4; ++i) {
            v[i] = Jet<K>(shift[i]);
            for (int j = 0; j < 4; ++j) v[i] += linear[i][j] * uj[j];
            if (cubic_amp != 0.0) {
                Jet<K> c = uj[i] * uj[(i + 1) % 4];
                v[i] += cubic_amp * (c * uj[(i + 2) % 4]);
            }
        }
        return v;
    }

    Vec4 apply(const Vec4& u) const {
        auto v = param_jets<0>(u);
        return {v[0].value(), v[1].value(), v[2].value(), v[3].value()};
    }

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const;
    ChartAxes axes() const;
};

struct AnyChart {
    std::variant<SphereChart, TorusChart, PatchR2xS2Chart, PatchRxS3Chart, MoebiusChart, ReparamChart>
        chart;
    std::string name;

    template <int K>
    JetMap<5, K> jet(const Vec4& u) const {
        return std::visit([&](const auto& c) { return c.template jet<K>(u); }, chart);
    }

    ChartAxes axes() const {
        return std::visit([](const auto& c) { return c.axes(); }, chart);
    }

    double orientation() const {
        return std::visit(
            [](const auto& c) -> double {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, MoebiusChart>)
                    return c.base->orientation() * c.orientation_factor;
                else if constexpr (std::is_same_v<T, ReparamChart>) {
                    return c.base->orientation() * ((mat4_det(c.linear) >= 0.0) ? 1.0 : -1.0);
                } else
                    return c.orientation;
            },
            chart);
    }
};

template <int K>
JetMap<5, K> MoebiusChart::jet(const Vec4& u) const {
    return apply_moebius_jet(map, base->jet<K>(u));
}

inline ChartAxes MoebiusChart::axes() const { return base->axes(); }

template <int K>
JetMap<5, K> ReparamChart::jet(const Vec4& u) const {
    auto v = param_jets<K>(u);
    const Vec4 v0 = {v[0].value(), v[1].value(), v[2].value(), v[3].value()};
    JetMap<5, K> inner = base->jet<K>(v0);
    JetMap<5, K> r{};
    for (int i = 0; i < 5; ++i) r[i] = jet_compose(inner[i], v);
    return r;
}

inline ChartAxes ReparamChart::axes() const { return base->axes(); }

/// Interior point of the chart domain from barycentric coordinates t in
/// (0,1)^4, with the usual margin away from non-periodic boundaries.
inline Vec4 chart_point(const AnyChart& chart, const Vec4& t, double margin = 1e-2) {
    const ChartAxes ax = chart.axes();
    Vec4 u{};
    for (int i = 0; i < 4; ++i) {
        double lo = ax[i].lo, hi = ax[i].hi;
        if (!ax[i].periodic) {
            const double m = margin * (hi - lo);
            lo += m;
            hi -= m;
        }
        u[i] = lo + t[i] * (hi - lo);
    }
    return u;
}

/// Max relative discrepancy between jet coefficients and Richardson-improved
/// central finite differences of the evaluator.  Build-time oracle only.
template <int K>
inline double fd_validate(const AnyChart& chart, const Vec4& u, double h) {
    const JetMap<5, K> jets = chart.jet<K>(u);
    const auto& basis = detail::JetBasis::get();

    auto value = [&](const Vec4& p, int comp) { return chart.jet<0>(p)[comp].value(); };

    // Nested central differences for one multi-index.
    auto fd = [&](const Vec4& p, std::array<int, 4> alpha, double step, int comp) {
        auto rec = [&](auto&& self, const Vec4& q, std::array<int, 4> a) -> double {
            int axis = -1;
            for (int i = 0; i < 4; ++i)
                if (a[i] > 0) {
                    axis = i;
                    break;
                }
            if (axis < 0) return value(q, comp);
            std::array<int, 4> ar = a;
            ar[axis] -= 1;
            Vec4 qp = q, qm = q;
            qp[axis] += step;
            qm[axis] -= step;
            return (self(self, qp, ar) - self(self, qm, ar)) / (2.0 * step);
        };
        return rec(rec, p, alpha);
    };

    double worst = 0.0;
    for (int i = 0; i < Jet<K>::size; ++i) {
        const MultiIndex& m = basis.idx[i];
        if (m.degree() == 0) continue;
        std::array<int, 4> alpha = {m.e[0], m.e[1], m.e[2], m.e[3]};
        double fact = 1.0;
        for (int v = 0; v < 4; ++v) fact *= detail::factorial(alpha[v]);
        for (int comp = 0; comp < 5; ++comp) {
            const double exact = jets[comp][i] * fact;
            const double d1 = fd(u, alpha, h, comp);
            const double d2 = fd(u, alpha, h / 2.0, comp);
            const double richardson = (4.0 * d2 - d1) / 3.0;
            const double scale = std::max({1.0, std::abs(exact), std::abs(richardson)});
            worst = std::max(worst, std::abs(richardson - exact) / scale);
        }
    }
    return worst;
}

}  // namespace cgm
