#pragma once

#include <cstdint>
#include <optional>

#include "ovs/curve.hpp"

namespace ovs {

// Norming functional of x0 under the p-norm: x*(x0) = ||x0||^2 and
// ||x*||_dual = ||x0||, computed by the duality map of the norm. For p = 1 the
// sign-vector scaling is used (sign(0) := 0); for p = inf the coefficient sits
// on the lowest-index maximal coordinate.
Functional norming_functional(const Vec& x0, NormIndex n);

// X+_{x0} = { x : x*(x) >= alpha * ||x|| } with alpha in (0, ||x0||].
struct ExtensibleCone {
    Vec base;
    Functional functional;
    double alpha = 0.0;
    NormIndex norm_index;
};

ExtensibleCone build_cone(const Vec& x0, NormIndex n,
                          std::optional<double> alpha = std::nullopt);

bool contains(const ExtensibleCone& cone, const Vec& x, const Tol& tol);

// x <= y in the cone order iff y - x is a member.
bool leq(const ExtensibleCone& cone, const Vec& x, const Vec& y, const Tol& tol);

// Cone axioms on seeded random members: closure under addition and
// non-negative scaling, properness, and membership of limits of convergent
// member sequences.
Verdict check_cone_axioms(const ExtensibleCone& cone, int samples, std::uint64_t seed,
                          const Tol& tol);

// At alpha = ||x0||: 0 <= x <= y in the cone implies ||x|| <= ||y||.
Verdict check_norm_monotone(const ExtensibleCone& cone, const Vec& x, const Vec& y,
                            const Tol& tol);

// Membership of the ray cone { d * x0 : d >= 0 }.
bool ray_cone_membership(const Vec& x0, const Vec& v, const Tol& tol);

// Deterministic generator for cone members (used by the axiom checks and the
// verification suites): scales a random direction into the membership region.
Vec random_cone_member(const ExtensibleCone& cone, std::uint64_t seed, int index,
                       const Tol& tol);

}  // namespace ovs
