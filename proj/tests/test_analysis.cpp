#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bergman/analysis.hpp"
#include "bergman/prescribe_zero_set.hpp"

using namespace bergman;

namespace {

// Independent brute-force evaluation of the determinant identity: loops over
// all atom tuples and expands the determinant over permutations by hand.
cplx brute_force_detid(const AtomicMeasure& nu, std::size_t N, const std::vector<int>& m,
                       const std::vector<int>& k) {
    const std::size_t d = nu.atoms().size();
    if (d == 0) return cplx{0, 0};
    std::size_t tuple_count = 1;
    for (std::size_t i = 0; i < N; ++i) tuple_count *= d;

    cplx total{0, 0};
    for (std::size_t code = 0; code < tuple_count; ++code) {
        std::vector<std::size_t> pick(N);
        std::size_t rest = code;
        for (std::size_t l = 0; l < N; ++l) {
            pick[l] = rest % d;
            rest /= d;
        }
        cplx weight_product{1, 0};
        for (std::size_t l = 0; l < N; ++l) {
            weight_product *= nu.atoms()[pick[l]].weight *
                              std::pow(nu.atoms()[pick[l]].location, m[l]);
        }
        // det over permutations, sign tracked by explicit inversion count
        std::vector<std::size_t> perm(N);
        std::iota(perm.begin(), perm.end(), 0);
        cplx det{0, 0};
        do {
            int inversions = 0;
            for (std::size_t i = 0; i < N; ++i) {
                for (std::size_t j = i + 1; j < N; ++j) {
                    if (perm[i] > perm[j]) ++inversions;
                }
            }
            cplx term{1, 0};
            for (std::size_t j = 0; j < N; ++j) {
                term *= std::pow(std::conj(nu.atoms()[pick[j]].location), k[perm[j]]);
            }
            det += (inversions % 2 == 0 ? 1.0 : -1.0) * term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += weight_product * det;
    }
    return total;
}

const AtomicMeasure kTwoAtoms({{cplx{0.5, 0}, cplx{1, 0}}, {cplx{1.0 / 3.0, 0}, cplx{1, 0}}});

}  // namespace

TEST_CASE("zero_set_report") {
    SUBCASE("constant profile has no zeros") {
        const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
        const ZeroSetReport report = zero_set_report(eigenvalue_sequence(one, 16), 1e-10);
        CHECK(report.indices.empty());
        CHECK(report.muntz_partial_sum == 0.0);
        CHECK(report.scan_limit == 16);
    }
    SUBCASE("1 - 1.5 r^2 vanishes exactly at m=1") {
        const RadialProfile u = make_radial_polynomial({cplx{1, 0}, cplx{0, 0}, cplx{-1.5, 0}});
        const ZeroSetReport report = zero_set_report(eigenvalue_sequence(u, 16), 1e-10);
        CHECK(report.indices == std::vector<int>{1});
        CHECK(report.muntz_partial_sum == 0.5);
    }
    SUBCASE("prescribed zeros at 0 and 2") {
        const RadialProfile u = prescribe_zero_set({0, 2}, 4);
        const ZeroSetReport report = zero_set_report(eigenvalue_sequence(u, 16), 1e-10);
        CHECK(report.indices == std::vector<int>{0, 2});
        CHECK(report.muntz_partial_sum == 1.0 + 1.0 / 3.0);
    }
    SUBCASE("zero sequence rejected") {
        EigenvalueSequence seq;
        seq.values.assign(4, cplx{0, 0});
        CHECK_THROWS_WITH_AS(zero_set_report(seq, 1e-10), "zero_set_report: zero symbol",
                             std::invalid_argument);
    }
}

TEST_CASE("triangular_reconstruction") {
    SUBCASE("identity symbol reproduces e_k") {
        const Symbol one = Symbol::radial(make_radial_polynomial({cplx{1, 0}}));
        for (int k = 1; k <= 5; ++k) {
            CHECK(triangular_reconstruction(one, k, 16).residual < 1e-14);
        }
    }
    SUBCASE("f = z shifts exactly") {
        const Symbol z = symbol_from_bipoly({{1, 0, cplx{1, 0}}});
        for (int k = 0; k <= 5; ++k) {
            const TriangularResult res = triangular_reconstruction(z, k, 16);
            CHECK(res.residual < 1e-12);
            // T_z e_k = sqrt((k+1)/(k+2)) e_{k+1}: leading weight is the inverse
            const double expected = std::sqrt((k + 2.0) / (k + 1.0));
            CHECK(std::abs(res.leading_coefficient - cplx{expected, 0}) < 1e-10);
        }
    }
    SUBCASE("f = z + zbar") {
        const Symbol f =
            symbol_from_bipoly({{1, 0, cplx{1, 0}}, {0, 1, cplx{1, 0}}});
        CHECK(triangular_reconstruction(f, 2, 16).residual < 1e-12);
    }
    SUBCASE("vanishing top-mode moment is a hypothesis violation, not a residual") {
        // radial top mode, omega zero prescribed at m=2 kills moment(u, 5) = the
        // k=2 top-mode integral
        const Symbol f = Symbol::radial(prescribe_zero_set({2}, 4));
        CHECK_THROWS_AS(triangular_reconstruction(f, 2, 16), HypothesisViolation);
        CHECK_NOTHROW(triangular_reconstruction(f, 1, 16));
    }
    SUBCASE("preconditions") {
        const Symbol z = symbol_from_bipoly({{1, 0, cplx{1, 0}}});
        CHECK_THROWS_AS(triangular_reconstruction(z, 15, 16), std::invalid_argument);
        const Symbol one = Symbol::radial(make_radial_polynomial({cplx{1, 0}}));
        CHECK_THROWS_AS(triangular_reconstruction(one, 0, 16), std::invalid_argument);
    }
}

TEST_CASE("determinant_identity") {
    SUBCASE("N = 1 reduces to a plain moment sum") {
        const cplx value = determinant_identity(kTwoAtoms, 1, {2}, {1});
        const cplx expected = std::pow(cplx{0.5, 0}, 2) * std::pow(cplx{0.5, 0}, 1) +
                              std::pow(cplx{1.0 / 3.0, 0}, 2) * std::pow(cplx{1.0 / 3.0, 0}, 1);
        CHECK(std::abs(value - expected) < 1e-16);
    }
    SUBCASE("single atom with N = 2 vanishes exactly") {
        const AtomicMeasure one_atom({{cplx{0.4, 0.3}, cplx{2, -1}}});
        CHECK(determinant_identity(one_atom, 2, {0, 0}, {0, 1}) == cplx{0, 0});
        CHECK(determinant_identity(one_atom, 2, {3, 1}, {2, 5}) == cplx{0, 0});
    }
    SUBCASE("two atoms, N = 2, against the brute-force oracle") {
        const cplx value = determinant_identity(kTwoAtoms, 2, {0, 1}, {0, 1});
        const cplx oracle = brute_force_detid(kTwoAtoms, 2, {0, 1}, {0, 1});
        CHECK(std::abs(value) > 1e-4);
        CHECK(std::abs(value - oracle) < 1e-15);
    }
    SUBCASE("oracle agreement over random exponents and sizes") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> exp(0, 8);
        std::uniform_real_distribution<double> coord(-0.8, 0.8);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t d = 1 + trial % 4;
            std::vector<Atom> atoms;
            for (std::size_t i = 0; i < d; ++i) {
                atoms.push_back({cplx{coord(rng), coord(rng)},
                                 cplx{coord(rng) + 1.0, coord(rng)}});
            }
            const AtomicMeasure nu(atoms);
            const std::size_t N = 1 + trial % 4;
            std::vector<int> m(N), k(N);
            for (auto& e : m) e = exp(rng);
            for (auto& e : k) e = exp(rng);
            const cplx value = determinant_identity(nu, N, m, k);
            const cplx oracle = brute_force_detid(nu, N, m, k);
            CHECK(std::abs(value - oracle) < 1e-12 * (1.0 + std::abs(oracle)));
        }
    }
    SUBCASE("antisymmetry under k-swap is exact") {
        const cplx base = determinant_identity(kTwoAtoms, 2, {1, 2}, {0, 3});
        const cplx swapped = determinant_identity(kTwoAtoms, 2, {1, 2}, {3, 0});
        CHECK(swapped == -base);
        CHECK(determinant_identity(kTwoAtoms, 2, {1, 2}, {3, 3}) == cplx{0, 0});
    }
    SUBCASE("tuple guard") {
        std::vector<Atom> atoms;
        for (int i = 0; i < 8; ++i) {
            atoms.push_back({cplx{0.1 * (i + 1), 0}, cplx{1, 0}});
        }
        const AtomicMeasure nu(atoms);
        CHECK_THROWS_AS(determinant_identity(nu, 9, std::vector<int>(9, 0),
                                             std::vector<int>(9, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("f_eval") {
    SUBCASE("w = 0 recovers the determinant identity") {
        const cplx lhs = f_eval(kTwoAtoms, 2, {0, 1}, {0, 2}, cplx{0, 0});
        const cplx rhs = determinant_identity(kTwoAtoms, 2, {0, 1}, {0, 2});
        CHECK(std::abs(lhs - rhs) < 1e-16);
    }
    SUBCASE("single atom vanishes for any w") {
        const AtomicMeasure one_atom({{cplx{0.4, 0.3}, cplx{2, -1}}});
        CHECK(f_eval(one_atom, 2, {0, 0}, {0, 1}, cplx{1.7, 2.2}) == cplx{0, 0});
    }
    SUBCASE("integer w shifts the exponents") {
        const cplx lhs = f_eval(kTwoAtoms, 2, {0, 1}, {0, 2}, cplx{3, 0});
        const cplx rhs = determinant_identity(kTwoAtoms, 2, {3, 4}, {3, 5});
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(rhs));
    }
    SUBCASE("domain errors") {
        const AtomicMeasure with_origin(
            {{cplx{0, 0}, cplx{1, 0}}, {cplx{0.5, 0}, cplx{1, 0}}});
        CHECK_THROWS_AS(f_eval(with_origin, 1, {0}, {0}, cplx{0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(f_eval(kTwoAtoms, 1, {0}, {0}, cplx{-0.1, 0}), std::domain_error);
    }
}

TEST_CASE("product_rank_experiment") {
    const RadialProfile one = make_radial_polynomial({cplx{1, 0}});
    const Symbol mid_one = Symbol::radial(one);

    SUBCASE("all identities give full rank") {
        const ExperimentReport report =
            product_rank_experiment({one}, mid_one, {one}, 8, 1e-8);
        REQUIRE(report.predicted_rank.has_value());
        CHECK(*report.predicted_rank == 8);
        CHECK(report.observed_rank.rank == 8);
        CHECK(report.s2_kernel_indices.empty());
        CHECK(report.verdict);
    }
    SUBCASE("two prescribed zeros drop the rank by two") {
        const RadialProfile g = prescribe_zero_set({0, 1}, 3);
        const ExperimentReport report =
            product_rank_experiment({g}, mid_one, {one}, 16, 1e-8);
        REQUIRE(report.predicted_rank.has_value());
        CHECK(*report.predicted_rank == 14);
        CHECK(report.observed_rank.rank == 14);
        CHECK(report.s2_kernel_indices == std::vector<int>{0, 1});
        CHECK(report.verdict);
    }
    SUBCASE("radial middle factor contributes its own zero set") {
        const RadialProfile g = make_radial_polynomial({cplx{1, 0}, cplx{0, 0}, cplx{-1.5, 0}});
        const RadialProfile rsq =
            make_radial_polynomial({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});
        const ExperimentReport report =
            product_rank_experiment({g}, Symbol::radial(rsq), {rsq}, 8, 1e-8);
        REQUIRE(report.predicted_rank.has_value());
        CHECK(*report.predicted_rank == 7);
        CHECK(report.observed_rank.rank == 7);
        CHECK(report.verdict);
    }
    SUBCASE("non-radial middle factor carries no prediction") {
        const Symbol mid = symbol_from_bipoly({{1, 0, cplx{1, 0}}});
        const ExperimentReport report =
            product_rank_experiment({one}, mid, {one}, 8, 1e-8);
        CHECK_FALSE(report.predicted_rank.has_value());
        CHECK(report.truncation_artifact_possible);
    }
    SUBCASE("zero profile factors rejected") {
        CHECK_THROWS_AS(product_rank_experiment({RadialProfile{}}, mid_one, {one}, 8, 1e-8),
                        std::invalid_argument);
    }
}
