#include <doctest.h>

#include <cmath>

#include "bergman/moments.hpp"
#include "bergman/operators.hpp"

using namespace bergman;

namespace {

const Symbol kOne = Symbol::radial(make_radial_polynomial({cplx{1, 0}}));
const Symbol kZbar = symbol_from_bipoly({{0, 1, cplx{1, 0}}});
const Symbol kZ = symbol_from_bipoly({{1, 0, cplx{1, 0}}});

}  // namespace

TEST_CASE("T_1 is the identity") {
    const TruncatedOperator op = toeplitz_matrix(kOne, 4);
    for (std::size_t l = 0; l < 4; ++l) {
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::abs(op.entries(l, k) - cplx{l == k ? 1.0 : 0.0, 0}) < 1e-15);
        }
    }
}

TEST_CASE("T_zbar subdiagonal confirms the normalization") {
    const TruncatedOperator op = toeplitz_matrix(kZbar, 3);
    CHECK(std::abs(op.entries(0, 1) - cplx{std::sqrt(0.5), 0}) < 1e-15);
    CHECK(std::abs(op.entries(1, 2) - cplx{std::sqrt(2.0 / 3.0), 0}) < 1e-15);
    // everything off the l = k-1 diagonal is a structural zero
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (static_cast<int>(l) - static_cast<int>(k) != -1) {
                CHECK(op.entries(l, k) == cplx{0, 0});
            }
        }
    }
}

TEST_CASE("radial symbols give exact diagonals matching omega") {
    const RadialProfile rsq = make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
    const TruncatedOperator op = toeplitz_matrix(Symbol::radial(rsq), 3);
    CHECK(std::abs(op.entries(0, 0) - cplx{0.5, 0}) < 1e-16);
    CHECK(std::abs(op.entries(1, 1) - cplx{2.0 / 3.0, 0}) < 1e-16);
    CHECK(std::abs(op.entries(2, 2) - cplx{0.75, 0}) < 1e-16);
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (l != k) CHECK(op.entries(l, k) == cplx{0, 0});
        }
    }
    const EigenvalueSequence seq = eigenvalue_sequence(rsq, 3);
    for (std::size_t m = 0; m < 3; ++m) {
        CHECK(std::abs(op.entries(m, m) - seq.values[m]) < 1e-16);
    }
}

TEST_CASE("measure_matrix") {
    SUBCASE("single atom at 1/2") {
        const AtomicMeasure nu({{cplx{0.5, 0}, cplx{1, 0}}});
        const TruncatedOperator op = measure_matrix(nu, 2);
        CHECK(std::abs(op.entries(0, 0) - cplx{1, 0}) < 1e-15);
        CHECK(std::abs(op.entries(0, 1) - cplx{std::sqrt(2.0) / 2.0, 0}) < 1e-15);
        CHECK(std::abs(op.entries(1, 0) - cplx{std::sqrt(2.0) / 2.0, 0}) < 1e-15);
        CHECK(std::abs(op.entries(1, 1) - cplx{0.5, 0}) < 1e-15);
        CHECK(numerical_rank(op, 1e-8).rank == 1);
    }
    SUBCASE("empty measure gives the zero matrix") {
        const AtomicMeasure nu;
        const TruncatedOperator op = measure_matrix(nu, 3);
        for (std::size_t l = 0; l < 3; ++l) {
            for (std::size_t k = 0; k < 3; ++k) CHECK(op.entries(l, k) == cplx{0, 0});
        }
        const RankReport report = numerical_rank(op, 1e-8);
        CHECK(report.rank == 0);
        CHECK(report.singular_values[0] == 0.0);
    }
    SUBCASE("two atoms give rank 2") {
        const AtomicMeasure nu(
            {{cplx{0.5, 0}, cplx{1, 0}}, {cplx{-0.3, 0.4}, cplx{0, 1}}});
        CHECK(numerical_rank(measure_matrix(nu, 8), 1e-8).rank == 2);
    }
    SUBCASE("three distinct atoms, n=16, rank 3") {
        const AtomicMeasure nu({{cplx{0.5, 0}, cplx{1, 0}},
                                {cplx{-0.3, 0.4}, cplx{2, -1}},
                                {cplx{0.1, -0.6}, cplx{-1, 0.5}}});
        CHECK(numerical_rank(measure_matrix(nu, 16), 1e-8).rank == 3);
    }
}

TEST_CASE("multiply") {
    SUBCASE("identity law") {
        const TruncatedOperator id = toeplitz_matrix(kOne, 5);
        const TruncatedOperator a = toeplitz_matrix(kZbar, 5);
        std::vector<TruncatedOperator> ops = {id, a};
        const TruncatedOperator prod = multiply(ops);
        for (std::size_t l = 0; l < 5; ++l) {
            for (std::size_t k = 0; k < 5; ++k) {
                CHECK(std::abs(prod.entries(l, k) - a.entries(l, k)) < 1e-15);
            }
        }
    }
    SUBCASE("diagonal factors multiply entrywise") {
        const RadialProfile g = make_radial_polynomial({cplx{1, 0}, cplx{0.5, 0}});
        const RadialProfile f = make_radial_polynomial({cplx{0, 0}, cplx{2, 0}});
        std::vector<TruncatedOperator> ops = {radial_diagonal(g, 6), radial_diagonal(f, 6)};
        const TruncatedOperator prod = multiply(ops);
        for (std::size_t m = 0; m < 6; ++m) {
            const cplx expected =
                omega(g, static_cast<int>(m)) * omega(f, static_cast<int>(m));
            CHECK(std::abs(prod.entries(m, m) - expected) < 1e-15);
        }
    }
    SUBCASE("T_zbar T_z matches (k+1)/(k+2) away from the truncation edge") {
        const std::size_t n = 4;
        std::vector<TruncatedOperator> ops = {toeplitz_matrix(kZbar, n),
                                              toeplitz_matrix(kZ, n)};
        const TruncatedOperator prod = multiply(ops);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const double expected = (k + 1.0) / (k + 2.0);
            CHECK(std::abs(prod.entries(k, k) - cplx{expected, 0}) < 1e-14);
        }
    }
    SUBCASE("dimension mismatch rejected") {
        std::vector<TruncatedOperator> ops = {toeplitz_matrix(kOne, 3),
                                              toeplitz_matrix(kOne, 4)};
        CHECK_THROWS_AS(multiply(ops), std::invalid_argument);
    }
}

TEST_CASE("apply") {
    const TruncatedOperator id = toeplitz_matrix(kOne, 3);
    const std::vector<cplx> v = {cplx{1, 2}, cplx{-0.5, 0}, cplx{0, 3}};
    const std::vector<cplx> out = apply(id, v);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(out[i] - v[i]) < 1e-15);

    const TruncatedOperator zbar = toeplitz_matrix(kZbar, 3);
    const std::vector<cplx> e1 = {cplx{0, 0}, cplx{1, 0}, cplx{0, 0}};
    const std::vector<cplx> mapped = apply(zbar, e1);
    CHECK(std::abs(mapped[0] - cplx{std::sqrt(0.5), 0}) < 1e-15);
    CHECK(std::abs(mapped[1]) == 0.0);
    CHECK(std::abs(mapped[2]) == 0.0);

    const RadialProfile rsq = make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
    const TruncatedOperator diag = radial_diagonal(rsq, 3);
    const std::vector<cplx> e2 = {cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    CHECK(std::abs(apply(diag, e2)[2] - cplx{0.75, 0}) < 1e-15);

    CHECK_THROWS_AS(bergman::apply(id, std::vector<cplx>(5)), std::invalid_argument);
}

TEST_CASE("numerical_rank contract") {
    const TruncatedOperator id = toeplitz_matrix(kOne, 8);
    const RankReport report = numerical_rank(id, 1e-8);
    CHECK(report.rank == 8);
    CHECK(report.tolerance == 1e-8);
    for (std::size_t i = 1; i < report.singular_values.size(); ++i) {
        CHECK(report.singular_values[i - 1] >= report.singular_values[i]);
    }
    CHECK_THROWS_AS(numerical_rank(id, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(numerical_rank(id, 1.5), std::invalid_argument);
}

TEST_CASE("adjoint law and truncation nesting") {
    const Symbol f = symbol_from_bipoly(
        {{2, 0, cplx{0.5, -1}}, {0, 1, cplx{1, 0.25}}, {1, 1, cplx{-0.75, 0}}});
    const TruncatedOperator a = toeplitz_matrix(f, 10);
    const TruncatedOperator b = toeplitz_matrix(conjugate_symbol(f), 10);
    const ComplexMatrix ah = a.entries.adjoint();
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(std::abs(b.entries(i, j) - ah(i, j)) < 1e-13);
        }
    }
    const TruncatedOperator big = toeplitz_matrix(f, 11);
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(a.entries(i, j) == big.entries(i, j));
        }
    }
}
