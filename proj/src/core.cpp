#include "ovs/core.hpp"

#include <algorithm>

namespace ovs {

static void check_coords(const std::vector<double>& c) {
    if (c.empty())
        throw std::invalid_argument("Vec: dimension must be >= 1");
    for (double v : c)
        if (!std::isfinite(v))
            throw std::invalid_argument("Vec: coordinates must be finite");
}

Vec::Vec(std::vector<double> coords) : c_(std::move(coords)) { check_coords(c_); }

Vec::Vec(std::initializer_list<double> coords) : c_(coords) { check_coords(c_); }

Vec Vec::zeros(std::size_t dim) {
    if (dim == 0)
        throw std::invalid_argument("Vec: dimension must be >= 1");
    return Vec(std::vector<double>(dim, 0.0));
}

Vec& Vec::operator+=(const Vec& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= -1.0; }
Vec operator*(double s, Vec a) { return a *= s; }
Vec operator*(Vec a, double s) { return a *= s; }

double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}

NormIndex::NormIndex(double p_) : p(p_) {
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("NormIndex: p must be in [1, inf]");
}

NormIndex NormIndex::dual() const {
    if (p == 1.0) return NormIndex::inf();
    if (is_inf()) return NormIndex::one();
    return NormIndex(p / (p - 1.0));
}

double norm(const Vec& x, NormIndex n) {
    if (n.is_inf()) return sup_norm(x);
    if (n.p == 1.0) return one_norm(x);
    if (n.p == 2.0) return euclid_norm(x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += std::pow(std::abs(x[i]), n.p);
    return std::pow(s, 1.0 / n.p);
}

double sup_norm(const Vec& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double one_norm(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += std::abs(x[i]);
    return s;
}

double euclid_norm(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

double Tol::scalar_residual(double a, double b) const {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

double Tol::vec_residual(const Vec& a, const Vec& b) const {
    require_same_dim(a, b);
    double num = 0.0, ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        ma = std::max(ma, std::abs(a[i]));
        mb = std::max(mb, std::abs(b[i]));
    }
    return num / (1.0 + std::max(ma, mb));
}

double Tol::leq_residual(const Vec& a, const Vec& b) const {
    require_same_dim(a, b);
    double num = 0.0, ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        num = std::max(num, a[i] - b[i]);
        ma = std::max(ma, std::abs(a[i]));
        mb = std::max(mb, std::abs(b[i]));
    }
    return std::max(0.0, num) / (1.0 + std::max(ma, mb));
}

void Verdict::add(const std::string& law, bool ok, double residual) {
    checks.push_back({law, ok, residual});
    pass = pass && ok;
    max_residual = std::max(max_residual, residual);
}

}  // namespace ovs
