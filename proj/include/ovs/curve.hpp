#pragma once

#include <cstddef>
#include <vector>

#include "ovs/core.hpp"

namespace ovs {

// A curve [a,b] -> R^n sampled on a strictly increasing grid t0 < ... < tm.
struct SampledCurve {
    std::vector<double> grid;
    std::vector<Vec> values;

    SampledCurve() = default;
    SampledCurve(std::vector<double> grid_, std::vector<Vec> values_);

    std::size_t nodes() const { return grid.size(); }
    std::size_t dim() const { return values.empty() ? 0 : values.front().dim(); }
};

void require_same_grid(const SampledCurve& a, const SampledCurve& b);

SampledCurve operator-(const SampledCurve& a, const SampledCurve& b);
SampledCurve operator+(const SampledCurve& a, const SampledCurve& b);

// Bounded linear functional on R^n: v |-> sum coeffs_i * v_i. The dual norm of
// the functional is ||coeffs||_q for the stored q.
struct Functional {
    Vec coeffs;
    NormIndex dual_norm_index = NormIndex::two();

    double operator()(const Vec& v) const { return dot(coeffs, v); }
    double dual_norm() const { return norm(coeffs, dual_norm_index); }
    bool is_zero() const { return sup_norm(coeffs) == 0.0; }
};

// k-th dual basis functional e_k*, with the dual index matching ambient p.
Functional dual_basis_functional(std::size_t dim, std::size_t k, NormIndex ambient);
std::vector<Functional> dual_basis(std::size_t dim, NormIndex ambient);

}  // namespace ovs
