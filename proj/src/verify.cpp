#include "bergman/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "bergman/analysis.hpp"
#include "bergman/io.hpp"
#include "bergman/moments.hpp"
#include "bergman/operators.hpp"
#include "bergman/prescribe_zero_set.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

namespace {

RadialProfile random_profile(std::mt19937& rng, std::size_t max_degree, bool real_only = false) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<cplx> c(deg(rng) + 1);
    for (auto& z : c) z = cplx{coef(rng), real_only ? 0.0 : coef(rng)};
    if (c.back() == cplx{0.0, 0.0}) c.back() = cplx{1.0, 0.0};
    return RadialProfile(std::move(c));
}

Symbol random_symbol(std::mt19937& rng, int mode_span, std::size_t max_degree) {
    std::map<int, RadialProfile> modes;
    std::uniform_int_distribution<int> pick(-mode_span, mode_span);
    for (int i = 0; i < 3; ++i) {
        modes.insert_or_assign(pick(rng), random_profile(rng, max_degree));
    }
    return Symbol(std::move(modes));
}

AtomicMeasure random_measure(std::mt19937& rng, std::size_t num_atoms,
                             bool positive_weights = false) {
    std::uniform_real_distribution<double> coord(-0.9, 0.9);
    std::uniform_real_distribution<double> pos(0.1, 2.0);
    std::vector<Atom> atoms;
    while (atoms.size() < num_atoms) {
        const cplx z{coord(rng), coord(rng)};
        if (z == cplx{0.0, 0.0}) continue;
        bool dup = false;
        for (const auto& a : atoms) dup = dup || a.location == z;
        if (dup) continue;
        const cplx w = positive_weights ? cplx{pos(rng), 0.0} : cplx{coord(rng) + 1.5, coord(rng)};
        atoms.push_back({z, w});
    }
    return AtomicMeasure(std::move(atoms));
}

// ||f||^2 over the mass-1 disk by tensor quadrature: Gauss-Legendre in r
// against the weight 2r dr, uniform grid in theta (exact for trigonometric
// polynomials shorter than the grid).
double disk_norm_sq_quadrature(const Symbol& f, std::size_t r_nodes, std::size_t theta_nodes) {
    const QuadratureRule rule = gauss_legendre_01(r_nodes);
    double total = 0.0;
    for (std::size_t i = 0; i < r_nodes; ++i) {
        double ring = 0.0;
        for (std::size_t j = 0; j < theta_nodes; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(theta_nodes);
            ring += std::norm(f.eval(rule.nodes[i], theta));
        }
        ring /= static_cast<double>(theta_nodes);
        total += rule.weights[i] * 2.0 * rule.nodes[i] * ring;
    }
    return total;
}

// Exact per-mode Parseval sum: sum_m 2 integral_0^1 |f_m(r)|^2 r dr.
double mode_norm_sq_exact(const Symbol& f) {
    double total = 0.0;
    for (const auto& [m, profile] : f.modes()) {
        const auto& c = profile.coeffs();
        cplx mode_sq{0.0, 0.0};
        for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = 0; b < c.size(); ++b) {
                mode_sq += c[a] * std::conj(c[b]) / static_cast<double>(a + b + 2);
            }
        }
        total += 2.0 * mode_sq.real();
    }
    return total;
}

CheckResult make(const std::string& name, double residual, double tol) {
    return CheckResult{name, residual, tol, residual <= tol};
}

CheckResult check_mode_round_trip() {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> pow(0, 5);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BipolyTerm> terms;
        for (int t = 0; t < 8; ++t) {
            terms.push_back({pow(rng), pow(rng), cplx{coef(rng), coef(rng)}});
        }
        const Symbol f = symbol_from_bipoly(terms);
        for (double r : {0.15, 0.4, 0.75, 0.95}) {
            for (int j = 0; j < 12; ++j) {
                const double theta = 2.0 * std::numbers::pi * j / 12.0;
                const cplx z = std::polar(r, theta);
                cplx direct{0.0, 0.0};
                for (const auto& t : terms) {
                    direct += t.coefficient * std::pow(z, t.z_power) *
                              std::pow(std::conj(z), t.zbar_power);
                }
                const cplx via_modes = f.eval(r, theta);
                worst = std::max(worst, std::abs(via_modes - direct) / (1.0 + std::abs(direct)));
            }
        }
    }
    return make("symbols.mode_extraction_round_trip", worst, 1e-12);
}

CheckResult check_conjugate_involution() {
    std::mt19937 rng(102);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = random_symbol(rng, 3, 5);
        const Symbol back = conjugate_symbol(conjugate_symbol(f));
        if (back.modes().size() != f.modes().size()) worst = 1.0;
        for (const auto& [m, profile] : f.modes()) {
            if (!(back.mode(m) == profile)) worst = 1.0;
        }
    }
    return make("symbols.conjugate_involution", worst, 0.0);
}

CheckResult check_prescribed_zero_sets() {
    double worst = 0.0;
    const std::vector<std::pair<std::set<int>, std::size_t>> cases = {
        {{}, 0}, {{1}, 2}, {{0, 2}, 4}, {{0, 1, 5}, 6}, {{3, 7, 11, 19}, 8}};
    for (const auto& [zeros, degree] : cases) {
        const RadialProfile u = prescribe_zero_set(zeros, degree);
        double max_omega = 0.0;
        for (std::size_t m = 0; m <= 4 * std::max<std::size_t>(degree, 1); ++m) {
            max_omega = std::max(max_omega, std::abs(omega(u, static_cast<int>(m))));
        }
        for (int s : zeros) {
            worst = std::max(worst, std::abs(omega(u, s)) / max_omega);
        }
    }
    return make("symbols.prescribed_zero_set_residual", worst, 1e-10);
}

CheckResult check_parseval() {
    std::mt19937 rng(103);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const Symbol f = random_symbol(rng, 3, 5);
        const double quad = disk_norm_sq_quadrature(f, 32, 32);
        const double per_mode = mode_norm_sq_exact(f);
        worst = std::max(worst, std::abs(quad - per_mode) / quad);
    }
    return make("symbols.parseval_per_mode", worst, 1e-10);
}

CheckResult check_moment_oracle() {
    std::mt19937 rng(104);
    std::uniform_int_distribution<int> kdist(0, 40);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const RadialProfile u = random_profile(rng, 12);
        const int k = kdist(rng);
        const cplx exact = moment(u, k);
        const cplx quad = quadrature_moment(u, k, 32);
        worst = std::max(worst, std::abs(exact - quad) / (1.0 + std::abs(exact)));
    }
    return make("moments.oracle_agreement", worst, 1e-13);
}

CheckResult check_omega_linearity() {
    std::mt19937 rng(105);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const RadialProfile u = random_profile(rng, 8);
        const RadialProfile v = random_profile(rng, 8);
        const cplx alpha{coef(rng), coef(rng)};
        const cplx beta{coef(rng), coef(rng)};
        const int m = trial % 10;
        const cplx combined = omega(u.scaled(alpha).plus(v.scaled(beta)), m);
        const cplx split = alpha * omega(u, m) + beta * omega(v, m);
        worst = std::max(worst, std::abs(combined - split));
    }
    return make("moments.omega_linearity", worst, 1e-14);
}

CheckResult check_substitution_identity() {
    // omega(u, m) = (m+1) integral_0^1 u(r^{1/2}) r^m dr; the quadrature
    // route evaluates u(sqrt(r)) at nodes placed through the smoothing
    // substitution r = s^2 (node s_i^2, weight 2 s_i w_i).
    std::mt19937 rng(106);
    const QuadratureRule rule = gauss_legendre_01(48);
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const RadialProfile u = random_profile(rng, 10);
        const int m = trial % 12;
        cplx quad{0.0, 0.0};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = rule.nodes[i];
            const double r = s * s;
            quad += 2.0 * s * rule.weights[i] * u.eval(std::sqrt(r)) * std::pow(r, m);
        }
        quad *= static_cast<double>(m + 1);
        const cplx closed = omega(u, m);
        worst = std::max(worst, std::abs(quad - closed) / (1.0 + std::abs(closed)));
    }
    return make("moments.eqn_substitution_identity", worst, 1e-12);
}

CheckResult check_real_omega() {
    std::mt19937 rng(107);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const RadialProfile u = random_profile(rng, 10, /*real_only=*/true);
        worst = std::max(worst, std::abs(omega(u, trial % 16).imag()));
    }
    return make("moments.real_profiles_real_omega", worst, 1e-15);
}

CheckResult check_adjoint_law() {
    std::mt19937 rng(108);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = random_symbol(rng, 4, 6);
        const TruncatedOperator a = toeplitz_matrix(f, 16);
        const TruncatedOperator b = toeplitz_matrix(conjugate_symbol(f), 16);
        const ComplexMatrix ah = a.entries.adjoint();
        for (std::size_t i = 0; i < 16; ++i) {
            for (std::size_t j = 0; j < 16; ++j) {
                worst = std::max(worst, std::abs(b.entries(i, j) - ah(i, j)));
            }
        }
    }
    return make("operators.adjoint_law", worst, 1e-13);
}

CheckResult check_band_structure() {
    std::mt19937 rng(109);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = random_symbol(rng, 3, 4);
        const TruncatedOperator a = toeplitz_matrix(f, 20);
        const int lo = f.min_mode(), hi = f.max_mode();
        for (std::size_t l = 0; l < 20; ++l) {
            for (std::size_t k = 0; k < 20; ++k) {
                const int diff = static_cast<int>(l) - static_cast<int>(k);
                const bool in_band = diff >= lo && diff <= hi && !f.mode(diff).is_zero();
                if (!in_band && a.entries(l, k) != cplx{0.0, 0.0}) worst = 1.0;
            }
        }
    }
    return make("operators.band_structure", worst, 0.0);
}

CheckResult check_truncation_nesting() {
    std::mt19937 rng(110);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = random_symbol(rng, 3, 4);
        const TruncatedOperator small = toeplitz_matrix(f, 12);
        const TruncatedOperator big = toeplitz_matrix(f, 13);
        for (std::size_t i = 0; i < 12; ++i) {
            for (std::size_t j = 0; j < 12; ++j) {
                if (small.entries(i, j) != big.entries(i, j)) worst = 1.0;
            }
        }
    }
    return make("operators.truncation_nesting", worst, 0.0);
}

CheckResult check_radial_diagonality() {
    std::mt19937 rng(111);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const RadialProfile u = random_profile(rng, 8);
        const TruncatedOperator a = toeplitz_matrix(Symbol::radial(u), 16);
        for (std::size_t l = 0; l < 16; ++l) {
            for (std::size_t k = 0; k < 16; ++k) {
                if (l != k) {
                    if (a.entries(l, k) != cplx{0.0, 0.0}) worst = 1.0;
                } else {
                    worst = std::max(worst,
                                     std::abs(a.entries(k, k) - omega(u, static_cast<int>(k))));
                }
            }
        }
    }
    return make("operators.radial_diagonality", worst, 1e-14);
}

CheckResult check_measure_psd() {
    std::mt19937 rng(112);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const AtomicMeasure nu = random_measure(rng, 4, /*positive_weights=*/true);
        const TruncatedOperator a = measure_matrix(nu, 12);
        const SvdResult svd = jacobi_svd(a.entries);
        const std::vector<double> eig = hermitian_eigenvalues(a.entries);
        const double scale = svd.sigma.empty() ? 1.0 : std::max(svd.sigma[0], 1e-300);
        for (std::size_t i = 0; i < eig.size(); ++i) {
            worst = std::max(worst, std::abs(svd.sigma[i] - eig[i]) / scale);
        }
    }
    return make("operators.measure_psd_svd_vs_eig", worst, 1e-10);
}

CheckResult check_svd_reconstruction() {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst = 0.0;
    for (std::size_t n : {8, 24, 48}) {
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx{coef(rng), coef(rng)};
        }
        const SvdResult svd = jacobi_svd(a);
        ComplexMatrix usv = svd.u;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) usv(i, j) *= svd.sigma[j];
        }
        usv = matmul(usv, svd.v.adjoint());
        ComplexMatrix diff(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) diff(i, j) = usv(i, j) - a(i, j);
        }
        worst = std::max(worst, diff.frobenius_norm() / a.frobenius_norm());
    }
    return make("operators.svd_self_check", worst, 1e-12);
}

CheckResult check_detid_antisymmetry() {
    std::mt19937 rng(114);
    std::uniform_int_distribution<int> exp(0, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const AtomicMeasure nu = random_measure(rng, 3);
        std::vector<int> m = {exp(rng), exp(rng), exp(rng)};
        std::vector<int> k = {exp(rng), exp(rng) + 7, exp(rng) + 14};  // pairwise distinct
        const cplx base = determinant_identity(nu, 3, m, k);
        std::vector<int> swapped = {k[1], k[0], k[2]};
        const cplx neg = determinant_identity(nu, 3, m, swapped);
        if (neg != -base) worst = 1.0;
        std::vector<int> repeated = {k[0], k[0], k[2]};
        if (determinant_identity(nu, 3, m, repeated) != cplx{0.0, 0.0}) worst = 1.0;
    }
    return make("analysis.detid_antisymmetry", worst, 0.0);
}

CheckResult check_low_rank_vanishing() {
    std::mt19937 rng(115);
    std::uniform_int_distribution<int> exp(0, 8);
    double worst = 0.0;
    for (std::size_t d = 1; d <= 3; ++d) {
        const AtomicMeasure nu = random_measure(rng, d);
        const std::size_t N = d + 1;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> m(N), k(N);
            for (auto& e : m) e = exp(rng);
            for (auto& e : k) e = exp(rng);
            const DetIdResult res = determinant_identity_detailed(nu, N, m, k);
            if (res.magnitude_sum > 0.0) {
                worst = std::max(worst, std::abs(res.value) / res.magnitude_sum);
            }
        }
    }
    return make("analysis.detid_low_rank_vanishing", worst, 1e-12);
}

CheckResult check_shift_consistency() {
    std::mt19937 rng(116);
    std::uniform_int_distribution<int> exp(0, 5);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const AtomicMeasure nu = random_measure(rng, 2);
        const int s = trial % 9;
        std::vector<int> m = {exp(rng), exp(rng)};
        std::vector<int> k = {exp(rng), exp(rng) + 6};
        const cplx lhs = f_eval(nu, 2, m, k, cplx{static_cast<double>(s), 0.0});
        std::vector<int> ms = {m[0] + s, m[1] + s};
        std::vector<int> ks = {k[0] + s, k[1] + s};
        const cplx rhs = determinant_identity(nu, 2, ms, ks);
        worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(rhs) + 1e-300));
    }
    return make("analysis.feval_shift_consistency", worst, 1e-13);
}

CheckResult check_feval_boundedness() {
    std::mt19937 rng(117);
    std::uniform_int_distribution<int> exp(0, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const AtomicMeasure nu = random_measure(rng, 3);
        const std::size_t N = 2;
        std::vector<int> m = {exp(rng), exp(rng)};
        std::vector<int> k = {exp(rng), exp(rng) + 5};
        double weight_sum = 0.0, max_abs = 0.0;
        for (const auto& a : nu.atoms()) {
            weight_sum += std::abs(a.weight);
            max_abs = std::max(max_abs, std::abs(a.location));
        }
        const double bound = std::pow(weight_sum, static_cast<double>(N)) *
                             std::pow(max_abs, m[0] + m[1]) * 2.0 *
                             std::pow(max_abs, k[0] + k[1]);
        const double radius = nu.radius_bound();
        for (double re : {0.0, 0.5, 2.0, 5.0, 10.0}) {
            const cplx value = f_eval(nu, N, m, k, cplx{re, 1.3});
            const double normalized =
                std::abs(value) * std::pow(radius, -2.0 * static_cast<double>(N) * re);
            worst = std::max(worst, normalized / bound);
        }
    }
    return make("analysis.feval_boundedness", worst, 1.0 + 1e-12);
}

CheckResult check_triangular_closure() {
    const std::size_t n = 32;
    double worst = 0.0;
    const Symbol fz = symbol_from_bipoly({{1, 0, cplx{1.0, 0.0}}});
    const Symbol fzzbar =
        symbol_from_bipoly({{1, 0, cplx{1.0, 0.0}}, {0, 1, cplx{1.0, 0.0}}});
    const Symbol fz2 = symbol_from_bipoly({{2, 0, cplx{1.0, 0.0}}, {0, 0, cplx{1.0, 0.0}}});
    for (const Symbol* f : {&fz, &fzzbar, &fz2}) {
        const int top = f->max_mode();
        for (int k = 0; k + top < static_cast<int>(n) / 2; ++k) {
            if (k + top < 1) continue;
            worst = std::max(worst, triangular_reconstruction(*f, k, n).residual);
        }
    }
    return make("analysis.triangular_induction_closure", worst, 1e-10);
}

CheckResult check_rank_prediction() {
    double worst = 0.0;
    const std::vector<std::set<int>> sets = {{}, {1}, {0, 2}, {0, 1, 5}};
    for (std::size_t n : {32, 64}) {
        for (const auto& zeros : sets) {
            const RadialProfile g = prescribe_zero_set(zeros, zeros.size() + 2);
            const RadialProfile f = make_radial_polynomial({cplx{0.0, 0.0}, cplx{0.0, 0.0},
                                                            cplx{1.0, 0.0}});
            const ExperimentReport report = product_rank_experiment(
                {g}, Symbol::radial(make_radial_polynomial({cplx{1.0, 0.0}})), {f}, n, 1e-8);
            if (!report.predicted_rank.has_value() ||
                *report.predicted_rank != report.observed_rank.rank) {
                worst = 1.0;
            }
        }
    }
    return make("analysis.rank_prediction_exactness", worst, 0.0);
}

CheckResult check_zero_set_prescribed() {
    const RadialProfile u = prescribe_zero_set({0, 2}, 4);
    const ZeroSetReport report = zero_set_report(eigenvalue_sequence(u, 32), 1e-10);
    double worst = 0.0;
    if (report.indices != std::vector<int>{0, 2}) worst = 1.0;
    if (report.muntz_partial_sum != 1.0 + 1.0 / 3.0) worst = 1.0;
    return make("analysis.zero_set_prescribed", worst, 0.0);
}

CheckResult check_csv_round_trip() {
    std::mt19937 rng(118);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    ComplexMatrix a(7, 5);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 5; ++j) a(i, j) = cplx{coef(rng), coef(rng)};
    }
    std::stringstream buf;
    io::write_matrix_csv(buf, a);
    const ComplexMatrix back = io::read_matrix_csv(buf);
    return make("cli.csv_round_trip", a == back ? 0.0 : 1.0, 0.0);
}

CheckResult check_zbar_subdiagonal() {
    const Symbol zbar = symbol_from_bipoly({{0, 1, cplx{1.0, 0.0}}});
    const TruncatedOperator a = toeplitz_matrix(zbar, 12);
    double worst = 0.0;
    for (std::size_t k = 1; k < 12; ++k) {
        const double expected = std::sqrt(static_cast<double>(k) / static_cast<double>(k + 1));
        worst = std::max(worst, std::abs(a.entries(k - 1, k) - cplx{expected, 0.0}));
    }
    return make("operators.zbar_subdiagonal", worst, 1e-14);
}

}  // namespace

CheckResult check_identity_normalization(double factor) {
    // Entries of T_1 under the given normalization: factor*(k+1)*moment(1, 2k+1).
    const RadialProfile one = make_radial_polynomial({cplx{1.0, 0.0}});
    double worst = 0.0;
    for (std::size_t k = 0; k < 12; ++k) {
        const cplx diag = factor * static_cast<double>(k + 1) *
                          moment(one, 2 * static_cast<int>(k) + 1);
        worst = std::max(worst, std::abs(diag - cplx{1.0, 0.0}));
    }
    return CheckResult{"operators.identity_normalization", worst, 1e-14, worst <= 1e-14};
}

std::vector<CheckResult> run_verify_suite() {
    std::vector<CheckResult> results;
    results.push_back(check_mode_round_trip());
    results.push_back(check_conjugate_involution());
    results.push_back(check_prescribed_zero_sets());
    results.push_back(check_parseval());
    results.push_back(check_moment_oracle());
    results.push_back(check_omega_linearity());
    results.push_back(check_substitution_identity());
    results.push_back(check_real_omega());
    results.push_back(check_identity_normalization(2.0));
    results.push_back(check_zbar_subdiagonal());
    results.push_back(check_adjoint_law());
    results.push_back(check_band_structure());
    results.push_back(check_truncation_nesting());
    results.push_back(check_radial_diagonality());
    results.push_back(check_measure_psd());
    results.push_back(check_svd_reconstruction());
    results.push_back(check_detid_antisymmetry());
    results.push_back(check_low_rank_vanishing());
    results.push_back(check_shift_consistency());
    results.push_back(check_feval_boundedness());
    results.push_back(check_triangular_closure());
    results.push_back(check_rank_prediction());
    results.push_back(check_zero_set_prescribed());
    results.push_back(check_csv_round_trip());
    return results;
}

}  // namespace bergman
