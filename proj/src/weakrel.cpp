#include "ovs/weakrel.hpp"

#include <algorithm>
#include <cmath>

namespace ovs {

static void require_nonzero(const Functional& xstar) {
    if (xstar.is_zero())
        throw std::invalid_argument("weak relation requires a non-zero functional");
}

bool weakly_related(const SampledCurve& f1, const SampledCurve& f2,
                    const Functional& xstar, const Tol& tol) {
    require_same_grid(f1, f2);
    require_nonzero(xstar);
    for (std::size_t i = 0; i < f1.nodes(); ++i)
        if (!tol.scalar_eq(xstar(f1.values[i]), xstar(f2.values[i]))) return false;
    return true;
}

std::vector<Vec> range_span_basis(const SampledCurve& f1, const SampledCurve& f2,
                                  const Tol& tol) {
    require_same_grid(f1, f2);
    double max_mag = 0.0;
    std::vector<Vec> cols;
    cols.reserve(f1.nodes());
    for (std::size_t i = 0; i < f1.nodes(); ++i) {
        cols.push_back(f1.values[i] - f2.values[i]);
        max_mag = std::max(max_mag, euclid_norm(cols.back()));
    }
    double thresh = tol.eps * (1.0 + max_mag);

    std::vector<Vec> basis;
    for (Vec v : cols) {
        for (const Vec& b : basis) v -= dot(v, b) * b;
        // second pass for numerical orthogonality
        for (const Vec& b : basis) v -= dot(v, b) * b;
        double n = euclid_norm(v);
        if (n > thresh) basis.push_back((1.0 / n) * v);
        if (basis.size() == f1.dim()) break;
    }
    return basis;
}

Verdict check_characterizations_weak(const SampledCurve& f1, const SampledCurve& f2,
                                     const Functional& xstar, const Tol& tol) {
    require_nonzero(xstar);
    Verdict v;
    bool c1 = weakly_related(f1, f2, xstar, tol);

    // scalar self-relation: r ~_r 0 in R collapses to r = 0
    bool c2 = true;
    for (std::size_t i = 0; i < f1.nodes(); ++i) {
        double r = xstar(f1.values[i]) - xstar(f2.values[i]);
        if (!tol.scalar_eq(r, 0.0)) c2 = false;
    }

    bool c3 = true;
    for (std::size_t i = 0; i < f1.nodes(); ++i)
        if (!tol.scalar_eq(xstar(f1.values[i] - f2.values[i]), 0.0)) c3 = false;

    std::vector<Vec> basis = range_span_basis(f1, f2, tol);
    double scale = 1.0 + xstar.dual_norm();
    bool c4 = true;
    for (const Vec& b : basis)
        if (std::abs(xstar(b)) > tol.eps * scale) c4 = false;
    bool c5 = c4;  // closure = span in finite dimension

    v.add("nodewise_relation", c1);
    v.add("scalar_self_relation", c2);
    v.add("range_in_null", c3);
    v.add("span_in_null", c4);
    v.add("closure_in_null", c5);
    bool all_equal = (c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5);
    v.add("verdicts_identical", all_equal);
    v.pass = all_equal;
    return v;
}

std::optional<Functional> find_witness_functional(const SampledCurve& f1,
                                                  const SampledCurve& f2, NormIndex ambient,
                                                  const Tol& tol) {
    std::vector<Vec> basis = range_span_basis(f1, f2, tol);
    std::size_t dim = f1.dim();
    if (basis.size() >= dim) return std::nullopt;

    // deterministic complement direction: the standard basis vector with the
    // largest residual after projecting out the span
    Vec best = Vec::zeros(dim);
    double best_norm = -1.0;
    for (std::size_t k = 0; k < dim; ++k) {
        Vec v = Vec::zeros(dim);
        v[k] = 1.0;
        for (const Vec& b : basis) v -= dot(v, b) * b;
        for (const Vec& b : basis) v -= dot(v, b) * b;
        double n = euclid_norm(v);
        if (n > best_norm) {
            best_norm = n;
            best = v;
        }
    }
    NormIndex q = ambient.dual();
    double dn = norm(best, q);
    return Functional{(1.0 / dn) * best, q};
}

Verdict separated_implies_equal(const SampledCurve& f1, const SampledCurve& f2,
                                NormIndex ambient, const Tol& tol) {
    require_same_grid(f1, f2);
    Verdict v;
    bool all_related = true;
    for (const Functional& ek : dual_basis(f1.dim(), ambient))
        if (!weakly_related(f1, f2, ek, tol)) all_related = false;
    bool equal = true;
    for (std::size_t i = 0; i < f1.nodes(); ++i)
        if (!tol.vec_eq(f1.values[i], f2.values[i])) equal = false;
    v.add("dual_basis_related", all_related);
    v.add("nodewise_equal", equal);
    v.add("equivalent", all_related == equal);
    v.pass = (all_related == equal);
    return v;
}

Verdict check_equivalence_on_functions(const SampledCurve& f1, const SampledCurve& f2,
                                       const SampledCurve& f3, const Functional& xstar,
                                       const Tol& tol) {
    require_nonzero(xstar);
    Verdict v;
    v.add("reflexive", weakly_related(f1, f1, xstar, tol));
    bool r12 = weakly_related(f1, f2, xstar, tol);
    bool r21 = weakly_related(f2, f1, xstar, tol);
    v.add("symmetric", r12 == r21);
    bool r23 = weakly_related(f2, f3, xstar, tol);
    bool r13 = weakly_related(f1, f3, xstar, tol);
    v.add("transitive", !(r12 && r23) || r13);
    return v;
}

}  // namespace ovs
