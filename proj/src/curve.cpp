#include "ovs/curve.hpp"

namespace ovs {

SampledCurve::SampledCurve(std::vector<double> grid_, std::vector<Vec> values_)
    : grid(std::move(grid_)), values(std::move(values_)) {
    if (grid.size() < 2)
        throw std::invalid_argument("SampledCurve: need at least two grid nodes");
    if (grid.size() != values.size())
        throw std::invalid_argument("SampledCurve: grid/value count mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("SampledCurve: grid not strictly increasing at node " +
                                        std::to_string(i));
    for (const Vec& v : values)
        if (v.dim() != values.front().dim())
            throw std::invalid_argument("SampledCurve: values must share one dimension");
}

void require_same_grid(const SampledCurve& a, const SampledCurve& b) {
    if (a.grid != b.grid)
        throw std::invalid_argument("curves must share the same grid");
    if (a.dim() != b.dim())
        throw std::invalid_argument("curves must share the same dimension");
}

SampledCurve operator-(const SampledCurve& a, const SampledCurve& b) {
    require_same_grid(a, b);
    SampledCurve r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

SampledCurve operator+(const SampledCurve& a, const SampledCurve& b) {
    require_same_grid(a, b);
    SampledCurve r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

Functional dual_basis_functional(std::size_t dim, std::size_t k, NormIndex ambient) {
    Vec c = Vec::zeros(dim);
    c[k] = 1.0;
    return Functional{c, ambient.dual()};
}

std::vector<Functional> dual_basis(std::size_t dim, NormIndex ambient) {
    std::vector<Functional> fs;
    fs.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) fs.push_back(dual_basis_functional(dim, k, ambient));
    return fs;
}

}  // namespace ovs
