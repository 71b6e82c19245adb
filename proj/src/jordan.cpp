#include "ovs/jordan.hpp"

#include <cmath>

#include "ovs/weakrel.hpp"

namespace ovs {

DecompositionResult decompose(const SampledCurve& f, const Vec& x0, NormIndex n,
                              std::optional<double> alpha, const Tol& tol) {
    if (f.dim() != x0.dim())
        throw std::invalid_argument("decompose: curve/base dimension mismatch");
    DecompositionResult r;
    r.cone = build_cone(x0, n, alpha);
    r.beta = 1.0 / r.cone.alpha;
    const Functional& xstar = r.cone.functional;

    r.scalar_trace = compose(xstar, f);
    r.variation = variation_function(r.scalar_trace);
    r.offset = r.scalar_trace.values.front();

    double nx = norm(x0, n);
    double inv_sq = 1.0 / (nx * nx);

    std::vector<Vec> v1, v2;
    v1.reserve(f.nodes());
    v2.reserve(f.nodes());
    for (std::size_t i = 0; i < f.nodes(); ++i) {
        double vi = r.variation.values[i];
        double gi = r.scalar_trace.values[i];
        v1.push_back(((vi + r.offset) * inv_sq) * x0);
        v2.push_back(((vi - gi + r.offset) * inv_sq) * x0);
    }
    r.f1 = SampledCurve(f.grid, std::move(v1));
    r.f2 = SampledCurve(f.grid, std::move(v2));

    for (std::size_t i = 0; i < f.nodes(); ++i) {
        double res = std::abs(r.scalar_trace.values[i] -
                              (xstar(r.f1.values[i]) - xstar(r.f2.values[i])));
        r.residual = std::max(r.residual, res);
    }
    r.f1_increasing = is_increasing_cone(r.f1, r.cone, tol);
    r.f2_increasing = is_increasing_cone(r.f2, r.cone, tol);

    r.wbv_bounds_hold = true;
    for (const Functional& probe : dual_basis(f.dim(), n)) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < f.dim(); ++i)
            if (probe.coeffs[i] != 0.0) k = i;
        for (int comp = 1; comp <= 2; ++comp) {
            const SampledCurve& fj = comp == 1 ? r.f1 : r.f2;
            double lhs = weak_variation(fj, probe);
            double rhs = probe.dual_norm() * r.beta *
                         xstar(fj.values.back() - fj.values.front());
            bool ok = lhs <= rhs + tol.eps * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
            r.wbv_bounds.push_back({k, comp, lhs, rhs, ok});
            r.wbv_bounds_hold = r.wbv_bounds_hold && ok;
        }
    }
    return r;
}

Verdict verify_increasing_identity(const SampledCurve& f, const Vec& x0, NormIndex n,
                                   const Tol& tol) {
    ExtensibleCone cone = build_cone(x0, n, std::nullopt);
    if (!is_increasing_cone(f, cone, tol))
        throw std::invalid_argument("verify_increasing_identity: f is not cone-increasing");
    const Functional& xstar = cone.functional;
    ScalarTrace g = compose(xstar, f);

    Verdict v;
    v.add("composed_trace_increasing", is_increasing_scalar(g, tol));

    double nx = norm(x0, n);
    double inv_sq = 1.0 / (nx * nx);
    std::vector<Vec> hv;
    hv.reserve(f.nodes());
    for (double gi : g.values) hv.push_back((gi * inv_sq) * x0);
    SampledCurve h(f.grid, std::move(hv));
    double res = 0.0;
    for (std::size_t i = 0; i < f.nodes(); ++i)
        res = std::max(res, tol.scalar_residual(xstar(f.values[i]), xstar(h.values[i])));
    v.add("weakly_related_to_scaled_base", weakly_related(f, h, xstar, tol), res);

    if (tol.scalar_eq(nx, 1.0)) {
        std::vector<Vec> hv1;
        hv1.reserve(f.nodes());
        for (double gi : g.values) hv1.push_back(gi * x0);
        SampledCurve h1(f.grid, std::move(hv1));
        v.add("unit_base_form", weakly_related(f, h1, xstar, tol));
    }
    return v;
}

DegenerateResult degenerate_construction(const Vec& x0, NormIndex n,
                                         const ScalarTrace& gamma, const Tol& tol) {
    if (x0.dim() < 2)
        throw std::invalid_argument("degenerate_construction: requires dim > 1");
    if (!is_increasing_scalar(gamma, Tol{0.0}))
        throw std::invalid_argument("degenerate_construction: gamma must be non-decreasing");
    Functional xstar = norming_functional(x0, n);
    const Vec& c = xstar.coeffs;

    // y with x*(y) = 0, chosen so the cancellation is exact in floating point:
    // either a standard basis vector on a zero coefficient, or the
    // antisymmetric pair (c_j, -c_i) on coordinates i, j.
    std::size_t i = 0;
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (std::abs(c[k]) > std::abs(c[i])) i = k;
    Vec y = Vec::zeros(x0.dim());
    std::size_t zero_idx = c.dim();
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (k != i && c[k] == 0.0) { zero_idx = k; break; }
    if (zero_idx < c.dim()) {
        y[zero_idx] = 1.0;
    } else {
        std::size_t j = (i == 0) ? 1 : 0;
        y[i] = c[j];
        y[j] = -c[i];
    }

    std::vector<Vec> fv;
    fv.reserve(gamma.nodes());
    for (double gt : gamma.values) fv.push_back(gt * y);
    SampledCurve f(gamma.grid, std::move(fv));

    DecompositionResult dec = decompose(f, x0, n, std::nullopt, tol);

    Verdict verdict;
    verdict.add("components_weakly_related",
                weakly_related(dec.f1, dec.f2, xstar, tol));
    double max_g = 0.0;
    for (double gi : dec.scalar_trace.values) max_g = std::max(max_g, std::abs(gi));
    verdict.add("composed_trace_zero", max_g <= tol.eps, max_g);

    // WBV evidence with the proof's bound |z*(y)| * (gamma(b) - gamma(a))
    double dgamma = gamma.values.back() - gamma.values.front();
    bool wbv_ok = true;
    double wbv_res = 0.0;
    for (const Functional& probe : dual_basis(x0.dim(), n)) {
        double tv = weak_variation(f, probe);
        double bound = std::abs(probe(y)) * dgamma;
        double res = std::max(0.0, tv - bound) / (1.0 + std::max(tv, bound));
        wbv_res = std::max(wbv_res, res);
        if (res > tol.eps) wbv_ok = false;
    }
    verdict.add("wbv_probe_bounds", wbv_ok, wbv_res);
    return DegenerateResult{y, f, std::move(dec), verdict};
}

}  // namespace ovs
