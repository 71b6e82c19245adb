#include "ovs/bv.hpp"

#include <cmath>

namespace ovs {

ScalarTrace::ScalarTrace(std::vector<double> grid_, std::vector<double> values_)
    : grid(std::move(grid_)), values(std::move(values_)) {
    if (grid.size() < 2)
        throw std::invalid_argument("ScalarTrace: need at least two grid nodes");
    if (grid.size() != values.size())
        throw std::invalid_argument("ScalarTrace: grid/value count mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("ScalarTrace: grid not strictly increasing at node " +
                                        std::to_string(i));
}

double total_variation(const ScalarTrace& g) {
    double tv = 0.0;
    for (std::size_t i = 1; i < g.nodes(); ++i) tv += std::abs(g.values[i] - g.values[i - 1]);
    return tv;
}

VariationTrace variation_function(const ScalarTrace& g) {
    std::vector<double> v(g.nodes(), 0.0);
    for (std::size_t i = 1; i < g.nodes(); ++i)
        v[i] = v[i - 1] + std::abs(g.values[i] - g.values[i - 1]);
    return VariationTrace(g.grid, std::move(v));
}

ScalarJordan jordan_scalar(const ScalarTrace& g) {
    VariationTrace v = variation_function(g);
    std::vector<double> w(g.nodes(), 0.0);
    double g0 = g.values.front();
    for (std::size_t i = 0; i < g.nodes(); ++i) w[i] = v.values[i] - g.values[i] + g0;
    return ScalarJordan{v, VariationTrace(g.grid, std::move(w)), g0};
}

bool is_increasing_scalar(const ScalarTrace& g, const Tol& tol) {
    for (std::size_t i = 1; i < g.nodes(); ++i) {
        double d = g.values[i] - g.values[i - 1];
        double scale = 1.0 + std::max(std::abs(g.values[i]), std::abs(g.values[i - 1]));
        if (d < -tol.eps * scale) return false;
    }
    return true;
}

bool is_increasing_cone(const SampledCurve& f, const ExtensibleCone& cone, const Tol& tol) {
    if (f.dim() != cone.base.dim())
        throw std::invalid_argument("is_increasing_cone: curve/cone dimension mismatch");
    for (std::size_t i = 1; i < f.nodes(); ++i)
        if (!contains(cone, f.values[i] - f.values[i - 1], tol)) return false;
    return true;
}

ScalarTrace compose(const Functional& xstar, const SampledCurve& f) {
    std::vector<double> v;
    v.reserve(f.nodes());
    for (const Vec& x : f.values) v.push_back(xstar(x));
    return ScalarTrace(f.grid, std::move(v));
}

double weak_variation(const SampledCurve& f, const Functional& xstar) {
    return total_variation(compose(xstar, f));
}

WbvReport is_wbv(const SampledCurve& f, const std::vector<Functional>& probes) {
    if (probes.empty())
        throw std::invalid_argument("is_wbv: probe set must be non-empty");
    WbvReport r;
    for (const Functional& p : probes) {
        if (p.is_zero())
            throw std::invalid_argument("is_wbv: zero functional in probes");
        double tv = weak_variation(f, p);
        r.probe_variation.push_back(tv);
        r.max_variation = std::max(r.max_variation, tv);
    }
    return r;
}

}  // namespace ovs
