#pragma once

#include <vector>

#include "ovs/cone.hpp"
#include "ovs/curve.hpp"

namespace ovs {

// Real-valued trace on a strictly increasing grid.
struct ScalarTrace {
    std::vector<double> grid;
    std::vector<double> values;

    ScalarTrace() = default;
    ScalarTrace(std::vector<double> grid_, std::vector<double> values_);

    std::size_t nodes() const { return grid.size(); }
};

// Running variation; anchored at 0 and non-decreasing.
using VariationTrace = ScalarTrace;

// Sum of |g(t_i) - g(t_{i-1})| over consecutive nodes. By the triangle
// inequality this dominates the sum over any sub-partition of the grid, so it
// is the exact total variation of the sampled function.
double total_variation(const ScalarTrace& g);

VariationTrace variation_function(const ScalarTrace& g);

// Classical Jordan split of g - g(t0) into non-decreasing components
// (V, V - g + g(t0)); the constant offset g(t0) is reported for the caller.
struct ScalarJordan {
    VariationTrace rising;   // V
    VariationTrace falling;  // V - g + g(t0)
    double offset = 0.0;     // g(t0)
};
ScalarJordan jordan_scalar(const ScalarTrace& g);

bool is_increasing_scalar(const ScalarTrace& g, const Tol& tol);
bool is_increasing_cone(const SampledCurve& f, const ExtensibleCone& cone, const Tol& tol);

ScalarTrace compose(const Functional& xstar, const SampledCurve& f);

double weak_variation(const SampledCurve& f, const Functional& xstar);

// Per-probe total variations; finite by construction on a finite grid, so the
// verdict records the probe set as evidence rather than proof.
struct WbvReport {
    std::vector<double> probe_variation;
    double max_variation = 0.0;
    bool finite_probe_set = true;
};
WbvReport is_wbv(const SampledCurve& f, const std::vector<Functional>& probes);

}  // namespace ovs
