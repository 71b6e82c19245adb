#pragma once

#include "ovs/core.hpp"
#include "ovs/latcore.hpp"

namespace ovs {

// The strong relation ~x0: x ~ y iff x - y is orthogonal to x0.
// A zero base is permitted; the relation then degenerates to "always related".
struct StrongRelation {
    Vec base;
    Tol tol;

    bool base_is_zero() const { return sup_norm(base) <= tol.eps; }
};

bool strongly_related(const StrongRelation& rel, const Vec& x, const Vec& y);

// Reflexivity, symmetry and transitivity on a supplied triple.
Verdict check_equivalence(const StrongRelation& rel, const Vec& x, const Vec& y,
                          const Vec& z);

// Given x ~ y: a*x ~ a*y, x ~_{b*x0} y and a*x ~_{b*x0} a*y.
Verdict check_scalar_invariance(const StrongRelation& rel, const Vec& x, const Vec& y,
                                double alpha, double beta);

// Given x1 ~ y1 and x2 ~ y2: x1 +- x2 ~ y1 +- y2.
Verdict check_additivity(const StrongRelation& rel, const Vec& x1, const Vec& y1,
                         const Vec& x2, const Vec& y2);

// Four-way equivalence: x ~ y  <=>  (x+ ~ y+ and x- ~ y-)  <=>  x v y ~ x ^ y
// <=>  (x v z ~ y v z and x ^ z ~ y ^ z, probed at the given z and z = 0).
Verdict check_characterizations(const StrongRelation& rel, const Vec& x, const Vec& y,
                                const Vec& z);

// Absolute-value properties (1)-(5); each item is vacuously true when its
// hypothesis fails.
Verdict check_abs_properties(const StrongRelation& rel, const Vec& x, const Vec& y);

// x ~_x 0 holds iff x = 0.
bool related_to_zero_self(const Vec& x, const Tol& tol);

}  // namespace ovs
