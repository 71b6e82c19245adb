#pragma once

#include <optional>
#include <vector>

#include "ovs/curve.hpp"

namespace ovs {

// f1 ~x* f2: the functional cannot distinguish the curves at any grid node.
// Rejects the zero functional.
bool weakly_related(const SampledCurve& f1, const SampledCurve& f2,
                    const Functional& xstar, const Tol& tol);

// Orthonormal (Euclidean) basis of span{(f1-f2)(t_i)} by modified Gram-Schmidt
// with singular threshold eps*(1 + max column magnitude).
std::vector<Vec> range_span_basis(const SampledCurve& f1, const SampledCurve& f2,
                                  const Tol& tol);

// Five-way equivalence: nodewise relation, scalar self-relation of the
// composed trace, range/span/closure of f1-f2 inside Null(x*). Closure equals
// span in finite dimension and is checked as such.
Verdict check_characterizations_weak(const SampledCurve& f1, const SampledCurve& f2,
                                     const Functional& xstar, const Tol& tol);

// A unit-dual-norm functional annihilating span{(f1-f2)(t_i)}, when the span
// is proper; nullopt when the span is the whole space.
std::optional<Functional> find_witness_functional(const SampledCurve& f1,
                                                  const SampledCurve& f2, NormIndex ambient,
                                                  const Tol& tol);

// Relation under the full dual basis is equivalent to nodewise equality.
Verdict separated_implies_equal(const SampledCurve& f1, const SampledCurve& f2,
                                NormIndex ambient, const Tol& tol);

// Reflexivity, symmetry, transitivity of ~x* on a triple of curves.
Verdict check_equivalence_on_functions(const SampledCurve& f1, const SampledCurve& f2,
                                       const SampledCurve& f3, const Functional& xstar,
                                       const Tol& tol);

}  // namespace ovs
