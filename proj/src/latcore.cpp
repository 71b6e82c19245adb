#include "ovs/latcore.hpp"

#include <algorithm>
#include <cmath>

namespace ovs {

Vec join(const Vec& x, const Vec& y) {
    require_same_dim(x, y);
    Vec r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = std::max(x[i], y[i]);
    return r;
}

Vec meet(const Vec& x, const Vec& y) {
    require_same_dim(x, y);
    Vec r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = std::min(x[i], y[i]);
    return r;
}

Vec abs(const Vec& x) {
    Vec r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = std::abs(x[i]);
    return r;
}

Vec pos(const Vec& x) {
    Vec r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = std::max(x[i], 0.0);
    return r;
}

Vec neg(const Vec& x) {
    Vec r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = std::max(-x[i], 0.0);
    return r;
}

bool is_orthogonal(const Vec& x, const Vec& y, const Tol& tol) {
    require_same_dim(x, y);
    Vec ax = abs(x), ay = abs(y);
    return tol.vec_eq(abs(ax - ay), ax + ay);
}

OrthogonalDecomposition decompose_unique(const Vec& x) {
    return {pos(x), neg(x)};
}

bool is_orthogonal_decomposition_of(const Vec& x, const Vec& x1, const Vec& x2,
                                    const Tol& tol) {
    require_same_dim(x, x1);
    require_same_dim(x, x2);
    Vec zero = Vec::zeros(x.dim());
    if (!tol.vec_leq(zero, x1) || !tol.vec_leq(zero, x2)) return false;
    if (!tol.vec_eq(x, x1 - x2)) return false;
    return is_orthogonal(x1, x2, tol);
}

Verdict check_lattice_identities(const Vec& x, const Vec& y, const Vec& z, const Tol& tol) {
    require_same_dim(x, y);
    require_same_dim(x, z);
    Verdict v;

    auto eq = [&](const std::string& law, const Vec& a, const Vec& b) {
        double r = tol.vec_residual(a, b);
        v.add(law, r <= tol.eps, r);
    };
    auto leq = [&](const std::string& law, const Vec& a, const Vec& b) {
        double r = tol.leq_residual(a, b);
        v.add(law, r <= tol.eps, r);
    };

    Vec axy = abs(x - y);
    eq("join_formula", join(x, y), 0.5 * (x + y + axy));
    eq("meet_formula", meet(x, y), 0.5 * (x + y - axy));
    eq("abs_diff_join_meet", axy, join(x, y) - meet(x, y));
    leq("abs_abs_diff_le_sum", abs(abs(x) - abs(y)), abs(x + y));
    leq("abs_abs_diff_le_diff", abs(abs(x) - abs(y)), abs(x - y));
    leq("birkhoff_join", abs(join(x, z) - join(y, z)), axy);
    leq("birkhoff_meet", abs(meet(x, z) - meet(y, z)), axy);
    leq("pos_part_contraction", abs(pos(x) - pos(y)), axy);
    leq("neg_part_contraction", abs(neg(x) - neg(y)), axy);
    eq("sum_diff_join", join(abs(x + y), abs(x - y)), abs(x) + abs(y));
    eq("sum_diff_meet", meet(abs(x + y), abs(x - y)), abs(abs(x) - abs(y)));
    leq("triangle", abs(x + y), abs(x) + abs(y));
    eq("join_associative", join(join(x, y), z), join(x, join(y, z)));
    return v;
}

bool is_inf_orthogonal(const Vec& x, const Vec& y, NormIndex n, int samples,
                       const Tol& tol) {
    require_same_dim(x, y);
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x[i] < 0.0 || y[i] < 0.0)
            throw std::invalid_argument("is_inf_orthogonal: inputs must be >= 0");
    if (samples < 2) samples = 2;

    if (n.is_inf()) {
        bool disjoint = true;
        for (std::size_t i = 0; i < x.dim(); ++i)
            if (x[i] > tol.eps && y[i] > tol.eps) disjoint = false;
        if (disjoint) return true;
    }

    auto holds_at = [&](double a, double b) {
        double lhs = norm(a * x + b * y, n);
        double rhs = std::max(norm(a * x, n), norm(b * y, n));
        return tol.scalar_eq(lhs, rhs);
    };
    for (int i = 0; i < samples; ++i) {
        double a = -1.0 + 2.0 * i / (samples - 1);
        // homogeneity: the a = 1 slice covers every ray with a != 0
        if (!holds_at(1.0, a)) return false;
        for (int j = 0; j < samples; ++j) {
            double b = -1.0 + 2.0 * j / (samples - 1);
            if (!holds_at(a, b)) return false;
        }
    }
    return true;
}

bool is_order_projection(const Vec& p, const Tol& tol) {
    Vec zero = Vec::zeros(p.dim());
    if (!tol.vec_leq(zero, p))
        throw std::invalid_argument("is_order_projection: p must be >= 0");
    if (sup_norm(p) > 1.0 + tol.eps)
        throw std::invalid_argument("is_order_projection: sup norm of p must be <= 1");

    Vec e(std::vector<double>(p.dim(), 1.0));
    Vec ep = e - p;

    bool coords01 = true;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (!(std::abs(p[i]) <= tol.eps || std::abs(p[i] - 1.0) <= tol.eps))
            coords01 = false;
    }
    bool perp1 = is_orthogonal(p, ep, tol);       // e - p ~_p 0
    bool perp2 = is_orthogonal(ep, p, tol);       // p ~_{e-p} 0
    if (coords01 != perp1 || perp1 != perp2)
        throw std::logic_error("is_order_projection: characterizations disagree");
    return perp1;
}

}  // namespace ovs
