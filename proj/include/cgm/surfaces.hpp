#pragma once

// Catalog of model hypersurfaces: construction, validation and the exact
// reference data used by the test oracles.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgm/charts.hpp"

namespace cgm {

struct RoundSphereSpec {
    double radius = 1.0;
    Vec5 center{};
};
struct TorusOfRevolutionSpec {
    double major = 2.0;
    double minor = 1.0;
};
struct PerturbedSphereSpec {
    double radius = 1.0;
    double amplitude = 0.05;
};
struct PatchR2xS2Spec {
    double side = 1.0;
};
struct PatchRxS3Spec {
    double length = 1.0;
};

struct SurfaceSpec {
    std::variant<RoundSphereSpec, TorusOfRevolutionSpec, PerturbedSphereSpec, PatchR2xS2Spec,
                 PatchRxS3Spec>
        kind;
    double orientation = 1.0;  // flips the normal (and so A, H) everywhere

    static SurfaceSpec round_sphere(double r = 1.0, Vec5 center = {}) {
        return {RoundSphereSpec{r, center}, 1.0};
    }
    static SurfaceSpec torus(double major = 2.0, double minor = 1.0) {
        return {TorusOfRevolutionSpec{major, minor}, 1.0};
    }
    static SurfaceSpec perturbed_sphere(double r = 1.0, double eps = 0.05) {
        return {PerturbedSphereSpec{r, eps}, 1.0};
    }
    static SurfaceSpec patch_r2xs2(double side = 1.0) { return {PatchR2xS2Spec{side}, 1.0}; }
    static SurfaceSpec patch_rxs3(double length = 1.0) { return {PatchRxS3Spec{length}, 1.0}; }

    std::string name() const {
        if (std::holds_alternative<RoundSphereSpec>(kind)) return "round-sphere";
        if (std::holds_alternative<TorusOfRevolutionSpec>(kind)) return "torus-of-revolution";
        if (std::holds_alternative<PerturbedSphereSpec>(kind)) return "perturbed-sphere";
        if (std::holds_alternative<PatchR2xS2Spec>(kind)) return "patch-r2xs2";
        return "patch-rxs3";
    }
};

struct SurfaceAtlas {
    std::vector<AnyChart> charts;  // disjoint quadrature domains up to measure zero
    bool closed = false;
    int euler_characteristic = 0;  // meaningful only when closed
    std::string name;
};

// Chart orientation signs are fixed so that the raw cross-product normal is
// the inward one on the round sphere (H = +1/r) and its analogue on the other
// catalog surfaces: tube-inward on the torus, sphere-factor-inward on the
// product patches.  Values verified against the curvature oracles in tests.
inline constexpr double kSphereNorthOrientation = -1.0;
inline constexpr double kSphereSouthOrientation = 1.0;
inline constexpr double kTorusOrientation = -1.0;
inline constexpr double kPatchR2xS2Orientation = -1.0;
inline constexpr double kPatchRxS3Orientation = -1.0;

namespace surfdetail {

// Jacobian values of a chart at a point.
inline std::array<Vec5, 4> jacobian(const AnyChart& chart, const Vec4& u) {
    const JetMap<5, 1> j = chart.jet<1>(u);
    std::array<Vec5, 4> cols{};
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 5; ++a) cols[i][a] = j[a][1 + i];
    return cols;
}

// Value-level 5D cross product of the four Jacobian columns.
inline Vec5 raw_normal(const std::array<Vec5, 4>& cols) {
    Vec5 n{};
    for (int a = 0; a < 5; ++a) {
        Mat4 minor{};
        int r = 0;
        for (int row = 0; row < 5; ++row) {
            if (row == a) continue;
            for (int c = 0; c < 4; ++c) minor[r][c] = cols[c][row];
            ++r;
        }
        n[a] = ((a % 2 == 0) ? 1.0 : -1.0) * mat4_det(minor);
    }
    return n;
}

inline void check_immersion(const AnyChart& chart, int samples_per_axis = 5) {
    const ChartAxes ax = chart.axes();
    Vec4 u{};
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < samples_per_axis; ++idx[0])
        for (idx[1] = 0; idx[1] < samples_per_axis; ++idx[1])
            for (idx[2] = 0; idx[2] < samples_per_axis; ++idx[2])
                for (idx[3] = 0; idx[3] < samples_per_axis; ++idx[3]) {
                    for (int i = 0; i < 4; ++i) {
                        const double t = (idx[i] + 0.5) / samples_per_axis;
                        u[i] = ax[i].lo + t * (ax[i].hi - ax[i].lo);
                    }
                    const auto cols = jacobian(chart, u);
                    double scale = 0.0;
                    for (const auto& c : cols) scale = std::max(scale, norm(c));
                    if (norm(raw_normal(cols)) <= 1e-10 * std::pow(std::max(scale, 1e-30), 4))
                        throw validation_error(chart.name + ": chart is not an immersion at a grid point");
                }
}

}  // namespace surfdetail

inline SurfaceAtlas make_surface(const SurfaceSpec& spec) {
    SurfaceAtlas atlas;
    atlas.name = spec.name();
    const double flip = spec.orientation;

    if (const auto* s = std::get_if<RoundSphereSpec>(&spec.kind)) {
        if (!(s->radius > 0.0)) throw validation_error("round sphere: radius must be positive");
        SphereChart north{s->radius, s->center, false, 0.0, flip * kSphereNorthOrientation};
        SphereChart south{s->radius, s->center, true, 0.0, flip * kSphereSouthOrientation};
        atlas.charts.push_back({north, "sphere-north"});
        atlas.charts.push_back({south, "sphere-south"});
        atlas.closed = true;
        atlas.euler_characteristic = 2;
    } else if (const auto* t = std::get_if<TorusOfRevolutionSpec>(&spec.kind)) {
        if (!(t->major > t->minor && t->minor > 0.0))
            throw validation_error("torus: requires major > minor > 0");
        TorusChart c{t->major, t->minor, flip * kTorusOrientation};
        atlas.charts.push_back({c, "torus"});
        atlas.closed = true;
        atlas.euler_characteristic = 0;
    } else if (const auto* p = std::get_if<PerturbedSphereSpec>(&spec.kind)) {
        if (!(p->radius > 0.0)) throw validation_error("perturbed sphere: radius must be positive");
        if (!(std::abs(p->amplitude) < 0.5))
            throw validation_error("perturbed sphere: amplitude too large");
        SphereChart north{p->radius, Vec5{}, false, p->amplitude, flip * kSphereNorthOrientation};
        SphereChart south{p->radius, Vec5{}, true, p->amplitude, flip * kSphereSouthOrientation};
        atlas.charts.push_back({north, "perturbed-sphere-north"});
        atlas.charts.push_back({south, "perturbed-sphere-south"});
        atlas.closed = true;
        atlas.euler_characteristic = 2;
        for (const auto& c : atlas.charts) surfdetail::check_immersion(c);
    } else if (const auto* q = std::get_if<PatchR2xS2Spec>(&spec.kind)) {
        if (!(q->side > 0.0)) throw validation_error("patch: side must be positive");
        atlas.charts.push_back({PatchR2xS2Chart{q->side, flip * kPatchR2xS2Orientation}, "r2xs2"});
        atlas.closed = false;
    } else if (const auto* q = std::get_if<PatchRxS3Spec>(&spec.kind)) {
        if (!(q->length > 0.0)) throw validation_error("patch: length must be positive");
        atlas.charts.push_back({PatchRxS3Chart{q->length, flip * kPatchRxS3Orientation}, "rxs3"});
        atlas.closed = false;
    }
    return atlas;
}

/// Known closed-form shape quantities of the catalog surfaces, for oracles.
struct ReferenceShape {
    std::array<double, 4> principal_curvatures{};  // w.r.t. the catalog normal
    double mean_curvature = 0.0;
    double norm_A_squared = 0.0;
};

inline std::optional<ReferenceShape> exact_reference(const SurfaceSpec& spec, const Vec4& u) {
    ReferenceShape ref;
    const double flip = spec.orientation;
    if (const auto* s = std::get_if<RoundSphereSpec>(&spec.kind)) {
        const double k = flip / s->radius;
        ref.principal_curvatures = {k, k, k, k};
    } else if (const auto* t = std::get_if<TorusOfRevolutionSpec>(&spec.kind)) {
        const double theta = u[0];
        const double k1 = flip / t->minor;
        const double k2 = flip * std::cos(theta) / (t->major + t->minor * std::cos(theta));
        ref.principal_curvatures = {k1, k2, k2, k2};
    } else if (std::holds_alternative<PatchR2xS2Spec>(spec.kind)) {
        ref.principal_curvatures = {0.0, 0.0, flip, flip};
    } else if (std::holds_alternative<PatchRxS3Spec>(spec.kind)) {
        ref.principal_curvatures = {0.0, flip, flip, flip};
    } else {
        return std::nullopt;  // no closed form (perturbed sphere)
    }
    double tr = 0.0, sq = 0.0;
    for (double k : ref.principal_curvatures) {
        tr += k;
        sq += k * k;
    }
    ref.mean_curvature = tr / 4.0;
    ref.norm_A_squared = sq;
    return ref;
}

}  // namespace cgm
