#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovs {

// Element of R^n with coordinatewise order. Coordinates must be finite.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::vector<double> coords);
    Vec(std::initializer_list<double> coords);

    static Vec zeros(std::size_t dim);

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(double s);

private:
    std::vector<double> c_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(double s, Vec a);
Vec operator*(Vec a, double s);
double dot(const Vec& a, const Vec& b);

void require_same_dim(const Vec& a, const Vec& b);

// The p of an l^p norm; p in [1, inf].
struct NormIndex {
    double p = 2.0;

    NormIndex() = default;
    explicit NormIndex(double p_);

    static NormIndex one() { return NormIndex(1.0); }
    static NormIndex two() { return NormIndex(2.0); }
    static NormIndex inf() { return NormIndex(std::numeric_limits<double>::infinity()); }

    bool is_inf() const { return std::isinf(p); }
    // The q with 1/p + 1/q = 1.
    NormIndex dual() const;
};

double norm(const Vec& x, NormIndex n);
double sup_norm(const Vec& x);
double one_norm(const Vec& x);
double euclid_norm(const Vec& x);

// Relative-absolute hybrid comparison: a ~ b iff |a-b| <= eps*(1+max(|a|,|b|)).
// Vectors are compared in the sup norm.
struct Tol {
    double eps = 1e-9;

    double scalar_residual(double a, double b) const;
    bool scalar_eq(double a, double b) const { return scalar_residual(a, b) <= eps; }
    double vec_residual(const Vec& a, const Vec& b) const;
    bool vec_eq(const Vec& a, const Vec& b) const { return vec_residual(a, b) <= eps; }
    // One-sided: residual of the claim a <= b (coordinatewise), 0 when it holds.
    double leq_residual(const Vec& a, const Vec& b) const;
    bool vec_leq(const Vec& a, const Vec& b) const { return leq_residual(a, b) <= eps; }
};

// One named law checked against a residual.
struct LawCheck {
    std::string law;
    bool pass = false;
    double residual = 0.0;
};

struct Verdict {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<LawCheck> checks;

    void add(const std::string& law, bool ok, double residual = 0.0);
};

}  // namespace ovs
