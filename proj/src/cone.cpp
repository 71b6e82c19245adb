#include "ovs/cone.hpp"

#include <cmath>
#include <random>

namespace ovs {

Functional norming_functional(const Vec& x0, NormIndex n) {
    if (sup_norm(x0) == 0.0)
        throw std::invalid_argument("norming_functional: x0 must be non-zero");
    std::size_t d = x0.dim();
    Vec c = Vec::zeros(d);
    if (n.p == 2.0) {
        c = x0;
    } else if (n.p == 1.0) {
        double n1 = one_norm(x0);
        for (std::size_t i = 0; i < d; ++i)
            c[i] = x0[i] > 0.0 ? n1 : (x0[i] < 0.0 ? -n1 : 0.0);
    } else if (n.is_inf()) {
        double ninf = sup_norm(x0);
        std::size_t j = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (std::abs(x0[i]) > std::abs(x0[j])) j = i;
        c[j] = x0[j] > 0.0 ? ninf : -ninf;
    } else {
        double np = norm(x0, n);
        double scale = std::pow(np, 2.0 - n.p);
        for (std::size_t i = 0; i < d; ++i) {
            double s = x0[i] > 0.0 ? 1.0 : (x0[i] < 0.0 ? -1.0 : 0.0);
            c[i] = scale * s * std::pow(std::abs(x0[i]), n.p - 1.0);
        }
    }
    return Functional{c, n.dual()};
}

ExtensibleCone build_cone(const Vec& x0, NormIndex n, std::optional<double> alpha) {
    Functional f = norming_functional(x0, n);
    double nx = norm(x0, n);
    double a = alpha.value_or(nx);
    if (!(a > 0.0) || a > nx * (1.0 + 1e-12))
        throw std::domain_error("build_cone: alpha must lie in (0, ||x0||]");
    return ExtensibleCone{x0, f, a, n};
}

bool contains(const ExtensibleCone& cone, const Vec& x, const Tol& tol) {
    require_same_dim(cone.base, x);
    double fx = cone.functional(x);
    double rhs = cone.alpha * norm(x, cone.norm_index);
    return fx >= rhs - tol.eps * (1.0 + std::max(std::abs(fx), rhs));
}

bool leq(const ExtensibleCone& cone, const Vec& x, const Vec& y, const Tol& tol) {
    return contains(cone, y - x, tol);
}

Vec random_cone_member(const ExtensibleCone& cone, std::uint64_t seed, int index,
                       const Tol& tol) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(index + 1)));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    double delta = 3.0 * u01(rng);
    Vec w = Vec::zeros(cone.base.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) w[i] = sym(rng);

    auto margin = [&](const Vec& m) {
        return cone.functional(m) - cone.alpha * norm(m, cone.norm_index);
    };
    Vec base_pt = delta * cone.base;
    double slack = -1e-12 * (1.0 + norm(base_pt, cone.norm_index));
    // largest t in [0,1] keeping delta*x0 + t*w inside the cone
    double lo = 0.0, hi = 1.0;
    if (margin(base_pt + w) >= slack) {
        lo = 1.0;
    } else {
        for (int it = 0; it < 50; ++it) {
            double mid = 0.5 * (lo + hi);
            if (margin(base_pt + mid * w) >= slack)
                lo = mid;
            else
                hi = mid;
        }
    }
    (void)tol;
    return base_pt + lo * w;
}

Verdict check_cone_axioms(const ExtensibleCone& cone, int samples, std::uint64_t seed,
                          const Tol& tol) {
    Verdict v;
    bool closed_add = true, closed_scale = true, proper = true, limits = true;
    for (int k = 0; k < samples; ++k) {
        Vec x = random_cone_member(cone, seed, 2 * k, tol);
        Vec y = random_cone_member(cone, seed, 2 * k + 1, tol);
        if (!contains(cone, x + y, tol)) closed_add = false;
        std::mt19937_64 rng(seed ^ (0xda942042e4dd58b5ULL * (std::uint64_t)(k + 1)));
        std::uniform_real_distribution<double> u(0.0, 5.0);
        if (!contains(cone, u(rng) * x, tol)) closed_scale = false;
        // properness: a member of non-trivial norm cannot have -x in the cone
        if (norm(x, cone.norm_index) > tol.eps && contains(cone, -x, tol) &&
            contains(cone, x, tol))
            proper = false;
        // closedness on a convergent member sequence: limit of (1+1/j)x is x
        Vec limit = x;
        bool seq_ok = true;
        for (int j = 1; j <= 4; ++j)
            if (!contains(cone, (1.0 + 1.0 / j) * x, tol)) seq_ok = false;
        if (!seq_ok || !contains(cone, limit, tol)) limits = false;
    }
    // properness near zero under the tolerance rule
    Vec tiny = 1e-12 * cone.base;
    bool tiny_ok = !(contains(cone, tiny, tol) && contains(cone, -tiny, tol)) ||
                   norm(tiny, cone.norm_index) <= tol.eps;
    v.add("closed_under_addition", closed_add);
    v.add("closed_under_scaling", closed_scale);
    v.add("proper", proper && tiny_ok);
    v.add("sequence_limits_member", limits);
    bool base_ok = contains(cone, cone.base, tol);
    v.add("contains_base", base_ok);
    return v;
}

Verdict check_norm_monotone(const ExtensibleCone& cone, const Vec& x, const Vec& y,
                            const Tol& tol) {
    double nx0 = norm(cone.base, cone.norm_index);
    if (!tol.scalar_eq(cone.alpha, nx0))
        throw std::invalid_argument("check_norm_monotone: requires alpha = ||x0||");
    if (!contains(cone, x, tol) || !leq(cone, x, y, tol))
        throw std::invalid_argument("check_norm_monotone: requires 0 <= x <= y in the cone");
    Verdict v;
    double nx = norm(x, cone.norm_index), ny = norm(y, cone.norm_index);
    double res = std::max(0.0, nx - ny) / (1.0 + std::max(nx, ny));
    v.add("norm_monotone", res <= tol.eps, res);
    return v;
}

bool ray_cone_membership(const Vec& x0, const Vec& v, const Tol& tol) {
    if (sup_norm(x0) == 0.0)
        throw std::invalid_argument("ray_cone_membership: x0 must be non-zero");
    require_same_dim(x0, v);
    if (sup_norm(v) <= tol.eps * (1.0 + sup_norm(x0))) return true;
    double delta = dot(v, x0) / dot(x0, x0);
    if (delta < -tol.eps) return false;
    return tol.vec_eq(v, delta * x0);
}

}  // namespace ovs
