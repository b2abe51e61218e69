#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/moments.hpp"

using namespace bergman;

TEST_CASE("closed-form moments") {
    const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
    const RadialProfile rsq = make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
    const RadialProfile tuned = make_radial_polynomial({cplx{1, 0}, cplx{0, 0}, cplx{-1.5, 0}});

    CHECK(moment(one, 3) == cplx{0.25, 0});
    CHECK(moment(rsq, 3) == cplx{1.0 / 6.0, 0});
    CHECK(std::abs(moment(tuned, 3)) < 1e-17);
    CHECK_THROWS_AS(moment(one, -1), std::invalid_argument);
}

TEST_CASE("omega closed forms") {
    const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
    const RadialProfile rsq = make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
    const RadialProfile tuned = make_radial_polynomial({cplx{1, 0}, cplx{0, 0}, cplx{-1.5, 0}});

    for (int m = 0; m < 10; ++m) {
        CHECK(std::abs(omega(one, m) - cplx{1, 0}) < 1e-15);
        CHECK(std::abs(omega(rsq, m) - cplx{(m + 1.0) / (m + 2.0), 0}) < 1e-15);
    }
    CHECK(omega(tuned, 0) == cplx{0.25, 0});
    CHECK(std::abs(omega(tuned, 1)) == 0.0);
}

TEST_CASE("eigenvalue_sequence") {
    const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
    const EigenvalueSequence s1 = eigenvalue_sequence(one, 4);
    REQUIRE(s1.values.size() == 4);
    for (const auto& v : s1.values) CHECK(v == cplx{1, 0});

    const RadialProfile rsq = make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
    const EigenvalueSequence s2 = eigenvalue_sequence(rsq, 3);
    CHECK(std::abs(s2.values[0] - cplx{0.5, 0}) < 1e-16);
    CHECK(std::abs(s2.values[1] - cplx{2.0 / 3.0, 0}) < 1e-16);
    CHECK(std::abs(s2.values[2] - cplx{0.75, 0}) < 1e-16);

    const RadialProfile tuned = make_radial_polynomial({cplx{1, 0}, cplx{0, 0}, cplx{-1.5, 0}});
    const EigenvalueSequence s3 = eigenvalue_sequence(tuned, 2);
    CHECK(s3.values[0] == cplx{0.25, 0});
    CHECK(std::abs(s3.values[1]) == 0.0);

    CHECK_THROWS_AS(eigenvalue_sequence(one, 0), std::invalid_argument);
}

TEST_CASE("gauss-legendre oracle") {
    SUBCASE("one node integrates constants") {
        const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
        CHECK(std::abs(quadrature_moment(one, 0, 1) - cplx{1, 0}) < 1e-15);
    }
    SUBCASE("degree-7 exactness at 4 nodes") {
        const RadialProfile rsq =
            make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
        CHECK(std::abs(quadrature_moment(rsq, 3, 4) - cplx{1.0 / 6.0, 0}) < 1e-16);
    }
    SUBCASE("degree-9 exactness at 8 nodes") {
        const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
        CHECK(std::abs(quadrature_moment(one, 9, 8) - cplx{0.1, 0}) < 1e-15);
    }
    SUBCASE("rule weights sum to one") {
        for (std::size_t n : {1, 2, 5, 16, 32, 48}) {
            const QuadratureRule rule = gauss_legendre_01(n);
            double sum = 0.0;
            for (double w : rule.weights) sum += w;
            CHECK(std::abs(sum - 1.0) < 1e-14);
            for (double x : rule.nodes) {
                CHECK(x > 0.0);
                CHECK(x < 1.0);
            }
        }
    }
}

TEST_CASE("moment oracle agreement on random profiles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> kdist(0, 40);
    std::uniform_int_distribution<std::size_t> deg(0, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> c(deg(rng) + 1);
        for (auto& z : c) z = cplx{coef(rng), coef(rng)};
        const RadialProfile u(c);
        const int k = kdist(rng);
        const cplx exact = moment(u, k);
        const cplx quad = quadrature_moment(u, k, 32);
        CHECK(std::abs(exact - quad) < 1e-13 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("omega linearity") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<cplx> cu(5), cv(7);
        for (auto& z : cu) z = cplx{coef(rng), coef(rng)};
        for (auto& z : cv) z = cplx{coef(rng), coef(rng)};
        const RadialProfile u(cu), v(cv);
        const cplx alpha{coef(rng), coef(rng)}, beta{coef(rng), coef(rng)};
        const int m = trial % 8;
        const cplx lhs = omega(u.scaled(alpha).plus(v.scaled(beta)), m);
        const cplx rhs = alpha * omega(u, m) + beta * omega(v, m);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("real profiles give real omega") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<cplx> c(6);
        for (auto& z : c) z = cplx{coef(rng), 0.0};
        const RadialProfile u(c);
        CHECK(std::abs(omega(u, trial % 12).imag()) < 1e-15);
    }
}
