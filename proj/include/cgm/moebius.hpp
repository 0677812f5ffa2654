#pragma once

// Conformal transformations of R^5 as sequences of primitive maps, applied to
// jet-valued immersion values.

#include <string>
#include <variant>
#include <vector>

#include "cgm/jet.hpp"

namespace cgm {

struct Translation {
    Vec5 v{};
};
struct Dilation {
    double lambda = 1.0;
};
/// Rotation by `angle` in the (i,j) coordinate plane of R^5.
struct PlaneRotation {
    int i = 0, j = 1;
    double angle = 0.0;
};
/// x -> c + (x - c)/|x - c|^2
struct Inversion {
    Vec5 center{};
};

using MoebiusStep = std::variant<Translation, Dilation, PlaneRotation, Inversion>;

struct MoebiusMap {
    std::vector<MoebiusStep> steps;

    static MoebiusMap identity() { return {}; }
    static MoebiusMap dilation(double lambda) { return {{Dilation{lambda}}}; }
    static MoebiusMap translation(const Vec5& v) { return {{Translation{v}}}; }
    static MoebiusMap rotation(int i, int j, double angle) { return {{PlaneRotation{i, j, angle}}}; }
    static MoebiusMap inversion(const Vec5& center) { return {{Inversion{center}}}; }

    MoebiusMap then(const MoebiusMap& next) const {
        MoebiusMap m = *this;
        m.steps.insert(m.steps.end(), next.steps.begin(), next.steps.end());
        return m;
    }
};

inline constexpr double kInversionMargin = 1e-3;

template <int K>
inline JetMap<5, K> apply_step(const MoebiusStep& step, const JetMap<5, K>& x) {
    JetMap<5, K> r = x;
    if (const auto* t = std::get_if<Translation>(&step)) {
        for (int i = 0; i < 5; ++i) r[i] = x[i] + t->v[i];
    } else if (const auto* d = std::get_if<Dilation>(&step)) {
        for (int i = 0; i < 5; ++i) r[i] = x[i] * d->lambda;
    } else if (const auto* rot = std::get_if<PlaneRotation>(&step)) {
        const double c = std::cos(rot->angle), s = std::sin(rot->angle);
        r[rot->i] = c * x[rot->i] - s * x[rot->j];
        r[rot->j] = s * x[rot->i] + c * x[rot->j];
    } else if (const auto* inv = std::get_if<Inversion>(&step)) {
        JetMap<5, K> w{};
        Jet<K> rho2;
        for (int i = 0; i < 5; ++i) {
            w[i] = x[i] - inv->center[i];
            mul_add(rho2, w[i], w[i]);
        }
        if (rho2.value() < kInversionMargin * kInversionMargin)
            throw validation_error("moebius: inversion center too close to the surface");
        Jet<K> q = jet_recip(rho2);
        for (int i = 0; i < 5; ++i) r[i] = inv->center[i] + w[i] * q;
    }
    return r;
}

template <int K>
inline JetMap<5, K> apply_moebius_jet(const MoebiusMap& m, JetMap<5, K> x) {
    for (const auto& s : m.steps) x = apply_step(s, x);
    return x;
}

inline Vec5 apply_moebius_point(const MoebiusMap& m, const Vec5& x) {
    JetMap<5, 0> j{};
    for (int i = 0; i < 5; ++i) j[i] = Jet<0>(x[i]);
    j = apply_moebius_jet(m, j);
    return map_values(j);
}

/// Orientation behaviour of the conformal factor: inversions reverse, the
/// other primitives preserve.  Used to keep normal conventions coherent.
inline double moebius_orientation_sign(const MoebiusMap& m) {
    double s = 1.0;
    for (const auto& step : m.steps)
        if (std::holds_alternative<Inversion>(step)) s = -s;
    return s;
}

}  // namespace cgm
