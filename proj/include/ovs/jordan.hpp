#pragma once

#include <optional>

#include "ovs/bv.hpp"

namespace ovs {

// One WBV bound instance from the decomposition: the partition sum of a
// component under a dual-basis probe against ||y*|| * beta * x*(f_j(b)-f_j(a)).
struct ProbeBound {
    std::size_t coord = 0;   // probe index k (functional e_k*)
    int component = 0;       // 1 or 2
    double partition_sum = 0.0;
    double bound = 0.0;
    bool holds = false;
};

struct DecompositionResult {
    SampledCurve f1;
    SampledCurve f2;
    ExtensibleCone cone;
    ScalarTrace scalar_trace;   // g = x* o f
    VariationTrace variation;   // V of g
    double offset = 0.0;        // g(t0), absorbed into f1
    double beta = 0.0;          // 1/alpha
    double residual = 0.0;      // max over nodes of |x* o (f - f1 + f2)|
    bool f1_increasing = false;
    bool f2_increasing = false;
    std::vector<ProbeBound> wbv_bounds;
    bool wbv_bounds_hold = false;
};

// Weak Jordan decomposition of f relative to x0: f1(t) = (V(t)+g(t0)) x0/||x0||^2,
// f2(t) = (V(t)-g(t)+g(t0)) x0/||x0||^2, both increasing in the cone, with
// x* o (f - f1 + f2) = 0 nodewise.
DecompositionResult decompose(const SampledCurve& f, const Vec& x0, NormIndex n,
                              std::optional<double> alpha, const Tol& tol);

// For f increasing in cone(x0, ||x0||): x* o f is non-decreasing and
// f ~x0 (x* o f)(t) * x0/||x0||^2. Throws if f is not cone-increasing.
Verdict verify_increasing_identity(const SampledCurve& f, const Vec& x0, NormIndex n,
                                   const Tol& tol);

// The dim > 1 construction: f(t) = gamma(t) * y with x*(y) = 0, whose only
// admissible decompositions satisfy f1 ~x0 f2.
struct DegenerateResult {
    Vec y;
    SampledCurve f;
    DecompositionResult decomposition;
    Verdict verdict;
};

DegenerateResult degenerate_construction(const Vec& x0, NormIndex n,
                                         const ScalarTrace& gamma, const Tol& tol);

}  // namespace ovs
