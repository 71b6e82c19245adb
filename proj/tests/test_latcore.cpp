#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ovs/latcore.hpp"

using namespace ovs;

static const Tol tol{};

TEST_CASE("join and meet are coordinatewise extrema") {
    CHECK(tol.vec_eq(join(Vec{1, 3}, Vec{2, 1}), Vec{2, 3}));
    CHECK(tol.vec_eq(meet(Vec{1, 3}, Vec{2, 1}), Vec{1, 1}));
    Vec x{-1, 2};
    CHECK(tol.vec_eq(join(x, x), x));
    CHECK(tol.vec_eq(meet(x, x), x));
    CHECK(tol.vec_eq(join(x, Vec{0, 0}), Vec{0, 2}));
    CHECK(tol.vec_eq(meet(x, Vec{0, 0}), Vec{-1, 0}));
    CHECK_THROWS_AS(join(Vec{1, 2}, Vec{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("abs, pos, neg and their identities") {
    CHECK(tol.vec_eq(abs(Vec{-2, 3}), Vec{2, 3}));
    CHECK(tol.vec_eq(pos(Vec{-1, 2}), Vec{0, 2}));
    CHECK(tol.vec_eq(neg(Vec{-1, 2}), Vec{1, 0}));
    CHECK(tol.vec_eq(pos(Vec{-1, 2}) + neg(Vec{-1, 2}), abs(Vec{-1, 2})));
    CHECK(tol.vec_eq(abs(Vec{0, 0}), Vec{0, 0}));
}

TEST_CASE("orthogonality is disjoint support") {
    CHECK(is_orthogonal(Vec{1, 0}, Vec{0, 1}, tol));
    CHECK_FALSE(is_orthogonal(Vec{1, 1}, Vec{0, 1}, tol));
    CHECK(is_orthogonal(Vec{-2, 0}, Vec{0, 3}, tol));
    CHECK(is_orthogonal(Vec{1, 0}, Vec{1, 0} - Vec{1, 0}, tol));
    // symmetry and x _|_ x iff x = 0
    CHECK(is_orthogonal(Vec{0, 1}, Vec{1, 0}, tol));
    CHECK_FALSE(is_orthogonal(Vec{1, 0}, Vec{1, 0}, tol));
    CHECK(is_orthogonal(Vec{0, 0}, Vec{0, 0}, tol));
}

TEST_CASE("unique orthogonal decomposition") {
    auto d = decompose_unique(Vec{-1, 2});
    CHECK(tol.vec_eq(d.positive, Vec{0, 2}));
    CHECK(tol.vec_eq(d.negative, Vec{1, 0}));
    d = decompose_unique(Vec{3, 4});
    CHECK(tol.vec_eq(d.positive, Vec{3, 4}));
    CHECK(tol.vec_eq(d.negative, Vec{0, 0}));
    d = decompose_unique(Vec{0, 0});
    CHECK(tol.vec_eq(d.positive, Vec{0, 0}));
    CHECK(tol.vec_eq(d.negative, Vec{0, 0}));
}

TEST_CASE("only the canonical split passes the decomposition predicate") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::uniform_real_distribution<double> shift(0.1, 5.0);
    for (int k = 0; k < 200; ++k) {
        std::size_t d = 2 + (std::size_t)(rng() % 5);
        Vec x = Vec::zeros(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = u(rng);
        auto dec = decompose_unique(x);
        CHECK(is_orthogonal_decomposition_of(x, dec.positive, dec.negative, tol));
        // any shifted re-split x = (x+ + s) - (x- + s) with s > 0 breaks orthogonality
        Vec s = Vec::zeros(d);
        s[rng() % d] = shift(rng);
        bool alt = is_orthogonal_decomposition_of(x, dec.positive + s, dec.negative + s, tol);
        CHECK_FALSE(alt);
    }
}

TEST_CASE("lattice identity battery on fixed triples") {
    auto all_pass = [](const Verdict& v) {
        for (const auto& c : v.checks)
            if (!c.pass) return false;
        return true;
    };
    CHECK(all_pass(check_lattice_identities(Vec{1, -2}, Vec{3, 0}, Vec{0, 5}, tol)));
    Verdict z = check_lattice_identities(Vec{0, 0}, Vec{0, 0}, Vec{0, 0}, tol);
    CHECK(all_pass(z));
    CHECK(z.max_residual == 0.0);
    // disjoint supports: |x+y| v |x-y| = |x| + |y|
    Vec x{1, 0}, y{0, 1};
    CHECK(tol.vec_eq(join(abs(x + y), abs(x - y)), abs(x) + abs(y)));
    CHECK(all_pass(check_lattice_identities(x, y, Vec{0, 0}, tol)));
}

TEST_CASE("sampled inf-orthogonality") {
    CHECK(is_inf_orthogonal(Vec{1, 0}, Vec{0, 1}, NormIndex::inf(), 9));
    CHECK_FALSE(is_inf_orthogonal(Vec{1, 0}, Vec{0, 1}, NormIndex::two(), 9));
    CHECK_FALSE(is_inf_orthogonal(Vec{1, 0}, Vec{2, 0}, NormIndex::inf(), 9));
    CHECK_THROWS_AS(is_inf_orthogonal(Vec{-1, 0}, Vec{0, 1}, NormIndex::inf(), 9),
                    std::invalid_argument);
}

TEST_CASE("order projections are 0/1 vectors") {
    CHECK(is_order_projection(Vec{1, 0, 1}, tol));
    CHECK_FALSE(is_order_projection(Vec{0.5, 0, 0}, tol));
    CHECK(is_order_projection(Vec{0, 0, 0}, tol));
    CHECK(is_order_projection(Vec{1, 1, 1}, tol));
    CHECK_THROWS_AS(is_order_projection(Vec{-0.5, 0}, tol), std::invalid_argument);
    CHECK_THROWS_AS(is_order_projection(Vec{1.5, 0}, tol), std::invalid_argument);
}
