#pragma once

// Product quadrature on chart domains and deterministic integration over an
// atlas.  Periodic axes use the trapezoid rule, the others Gauss-Legendre
// (optionally in the cosine variable); both are spectrally accurate for the
// smooth integrands handled here.

#include <cmath>
#include <functional>
#include <atomic>
#include <thread>
#include <vector>

#include "cgm/surfaces.hpp"

namespace cgm {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
inline Rule1D gauss_legendre(int n) {
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline Rule1D axis_rule(const AxisSpec& ax, int n) {
    Rule1D r;
    switch (ax.rule) {
        case AxisRule::Trapezoid: {
            const double h = (ax.hi - ax.lo) / n;
            for (int i = 0; i < n; ++i) {
                r.nodes.push_back(ax.lo + i * h);
                r.weights.push_back(h);
            }
            break;
        }
        case AxisRule::GaussLegendre: {
            Rule1D gl = gauss_legendre(n);
            const double mid = 0.5 * (ax.lo + ax.hi), half = 0.5 * (ax.hi - ax.lo);
            for (int i = 0; i < n; ++i) {
                r.nodes.push_back(mid + half * gl.nodes[i]);
                r.weights.push_back(half * gl.weights[i]);
            }
            break;
        }
        case AxisRule::GaussLegendreCos: {
            // Nodes in t = cos(angle): integral over [lo,hi] of f(angle) d angle
            // becomes integral of f(acos t)/sin(acos t) dt; the 1/sin factor is
            // folded into the weight so the caller still supplies plain f.
            Rule1D gl = gauss_legendre(n);
            const double tlo = std::cos(ax.hi), thi = std::cos(ax.lo);
            const double mid = 0.5 * (tlo + thi), half = 0.5 * (thi - tlo);
            for (int i = 0; i < n; ++i) {
                const double t = mid + half * gl.nodes[i];
                const double s = std::sqrt(std::max(1.0 - t * t, 1e-300));
                r.nodes.push_back(std::acos(t));
                r.weights.push_back(half * gl.weights[i] / s);
            }
            break;
        }
    }
    return r;
}

/// Per-axis node counts grow geometrically with the refinement level.
inline int nodes_for_level(int level, int base = 6) {
    double n = base;
    for (int i = 0; i < level; ++i) n *= 1.5;
    return std::max(2, static_cast<int>(std::lround(n)));
}

struct ChartGrid {
    std::array<Rule1D, 4> axis;
    long long totalated() const {
        return static_cast<long long>(axis[0].nodes.size()) * axis[1].nodes.size() *
               axis[2].nodes.size() * axis[3].nodes.size();
    }
};

struct QuadratureGrid {
    std::vector<ChartGrid> charts;
    int level = 0;
};

inline QuadratureGrid quadrature_grid(const SurfaceAtlas& atlas, int level) {
    if (level < 0) throw validation_error("quadrature level must be >= 0");
    QuadratureGrid grid;
    grid.level = level;
    const int n = nodes_for_level(level);
    for (const auto& chart : atlas.charts) {
        ChartGrid cg;
        const ChartAxes ax = chart.axes();
        for (int i = 0; i < 4; ++i) cg.axis[i] = axis_rule(ax[i], n);
        grid.charts.push_back(std::move(cg));
    }
    return grid;
}

/// Scalar field evaluated per chart point; the induced volume factor is
/// supplied by the integrator, not the field.
using PointField = std::function<double(const AnyChart&, const Vec4&)>;

namespace quaddetail {

inline double sqrt_det_g(const AnyChart& chart, const Vec4& u) {
    const auto cols = surfdetail::jacobian(chart, u);
    Mat4 g{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = dot(cols[i], cols[j]);
    const double d = mat4_det(g);
    if (!(d > 0.0)) throw degeneracy_error("integrate: degenerate induced metric at a node");
    return std::sqrt(d);
}

// Fixed-order blocked reduction: per-block compensated sums, blocks combined
// in index order, independent of the number of worker threads.
template <class NodeEval>
inline double blocked_sum(long long total, int threads, NodeEval&& eval) {
    constexpr long long kBlock = 2048;
    const long long nblocks = (total + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);

    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            const long long b = next.fetch_add(1);
            if (b >= nblocks) break;
            CompensatedSum acc;
            const long long lo = b * kBlock, hi = std::min(total, lo + kBlock);
            for (long long i = lo; i < hi; ++i) acc.add(eval(i));
            partial[static_cast<std::size_t>(b)] = acc.value();
        }
    };
    if (threads <= 1 || nblocks <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int nt = std::min<long long>(threads, nblocks);
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    CompensatedSum out;
    for (double p : partial) out.add(p);
    return out.value();
}

}  // namespace quaddetail

inline int default_integration_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline double integrate_on_grid(const PointField& field, const SurfaceAtlas& atlas,
                                const QuadratureGrid& grid, int threads = 0) {
    if (threads <= 0) threads = default_integration_threads();
    double total = 0.0;
    CompensatedSum chart_acc;
    for (std::size_t c = 0; c < atlas.charts.size(); ++c) {
        const AnyChart& chart = atlas.charts[c];
        const ChartGrid& cg = grid.charts[c];
        const auto& a0 = cg.axis[0];
        const auto& a1 = cg.axis[1];
        const auto& a2 = cg.axis[2];
        const auto& a3 = cg.axis[3];
        const long long n1 = a1.nodes.size(), n2 = a2.nodes.size(), n3 = a3.nodes.size();
        const long long count = cg.total_nodes();

        auto eval = [&](long long flat) {
            const long long i3 = flat % n3;
            const long long i2 = (flat / n3) % n2;
            const long long i1 = (flat / (n3 * n2)) % n1;
            const long long i0 = flat / (n3 * n2 * n1);
            const Vec4 u = {a0.nodes[i0], a1.nodes[i1], a2.nodes[i2], a3.nodes[i3]};
            const double w = a0.weights[i0] * a1.weights[i1] * a2.weights[i2] * a3.weights[i3];
            return w * field(chart, u) * quaddetail::sqrt_det_g(chart, u);
        };
        chart_acc.add(quaddetail::blocked_sum(count, threads, eval));
    }
    total = chart_acc.value();
    return total;
}

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int level = 0;
};

/// Integral at the requested level plus the |I(level) - I(level-1)| estimate.
inline IntegralResult integrate(const PointField& field, const SurfaceAtlas& atlas, int level,
                                int threads = 0) {
    IntegralResult r;
    r.level = level;
    r.value = integrate_on_grid(field, atlas, quadrature_grid(atlas, level), threads);
    QuadratureGrid coarse;
    if (level >= 1) {
        coarse = quadrature_grid(atlas, level - 1);
    } else {
        // one geometric step below level 0
        coarse.level = -1;
        const int n = std::max(2, static_cast<int>(std::lround(6.0 / 1.5)));
        for (const auto& chart : atlas.charts) {
            ChartGrid cg;
            const ChartAxes ax = chart.axes();
            for (int i = 0; i < 4; ++i) cg.axis[i] = axis_rule(ax[i], n);
            coarse.charts.push_back(std::move(cg));
        }
    }
    const double prev = integrate_on_grid(field, atlas, coarse, threads);
    r.error_estimate = std::abs(r.value - prev);
    return r;
}

}  // namespace cgm
