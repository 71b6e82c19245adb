#pragma once

#include <cstddef>

#include "ovs/core.hpp"

namespace ovs {

// Coordinatewise lattice operations on R^n.
Vec join(const Vec& x, const Vec& y);
Vec meet(const Vec& x, const Vec& y);
Vec abs(const Vec& x);
Vec pos(const Vec& x);
Vec neg(const Vec& x);

// x _|_ y in the extended sense: | |x|-|y| | = |x|+|y|, i.e. the supports of
// |x| and |y| are disjoint up to tolerance.
bool is_orthogonal(const Vec& x, const Vec& y, const Tol& tol);

// The unique orthogonal decomposition x = x+ - x-.
struct OrthogonalDecomposition {
    Vec positive;
    Vec negative;
};
OrthogonalDecomposition decompose_unique(const Vec& x);

// Verification hook: does (x1, x2) qualify as an orthogonal decomposition of x?
// Any pair passing this must coincide with (x+, x-).
bool is_orthogonal_decomposition_of(const Vec& x, const Vec& x1, const Vec& x2,
                                    const Tol& tol);

// All eight lattice identities/inequalities, the triangle inequality and
// associativity of join, evaluated with per-law residuals.
Verdict check_lattice_identities(const Vec& x, const Vec& y, const Vec& z, const Tol& tol);

// Sampled check of ||ax + by|| = max(||ax||, ||by||) for x, y >= 0. For the sup
// norm with disjoint supports the answer is analytic; otherwise a "true"
// verdict is grid evidence over (a, b) in [-1,1]^2 plus the a = 1 slice, not a
// proof.
bool is_inf_orthogonal(const Vec& x, const Vec& y, NormIndex n, int samples,
                       const Tol& tol = Tol{});

// Order-projection test on the sup-norm instance with order unit e = all-ones:
// p is a projection iff p _|_ (e - p) iff every coordinate is 0 or 1. The three
// equivalent readings are cross-checked internally.
bool is_order_projection(const Vec& p, const Tol& tol);

}  // namespace ovs
