#include "bergman/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bergman {

ZeroSetReport zero_set_report(const EigenvalueSequence& seq, double tol) {
    if (seq.values.empty()) throw std::invalid_argument("zero_set_report: empty sequence");
    if (tol <= 0.0) throw std::invalid_argument("zero_set_report: tol must be positive");
    double max_abs = 0.0;
    for (const auto& v : seq.values) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) throw std::invalid_argument("zero_set_report: zero symbol");

    ZeroSetReport report{{}, 0.0, seq.values.size(), tol};
    for (std::size_t m = 0; m < seq.values.size(); ++m) {
        if (std::abs(seq.values[m]) <= tol * max_abs) {
            report.indices.push_back(static_cast<int>(m));
            report.muntz_partial_sum += 1.0 / static_cast<double>(m + 1);
        }
    }
    return report;
}

TriangularResult triangular_reconstruction(const Symbol& f, int k, std::size_t n) {
    if (f.is_zero()) throw std::invalid_argument("triangular_reconstruction: zero symbol");
    if (k < 0) throw std::invalid_argument("triangular_reconstruction: k must be non-negative");
    const int top = f.max_mode();
    const long target = static_cast<long>(k) + top;
    if (target < 1) throw std::invalid_argument("triangular_reconstruction: k+M must be >= 1");
    if (target >= static_cast<long>(n)) {
        throw std::invalid_argument("triangular_reconstruction: k+M must be below n");
    }

    // Nondegeneracy: the top-mode entry <T_f e_k, e_{k+M}> must not vanish.
    const cplx top_moment = moment(f.mode(top), 2 * k + top + 1);
    double term_scale = 0.0;
    for (std::size_t j = 0; j < f.mode(top).coeffs().size(); ++j) {
        term_scale += std::abs(f.mode(top).coeffs()[j]) /
                      static_cast<double>(j + static_cast<std::size_t>(2 * k + top + 1) + 1);
    }
    if (std::abs(top_moment) <= 1e-12 * term_scale) {
        std::ostringstream msg;
        msg << "triangular_reconstruction: hypothesis violated at k=" << k
            << " (top-mode moment vanishes)";
        throw HypothesisViolation(msg.str(), k);
    }

    const TruncatedOperator op = toeplitz_matrix(f, n);
    const std::size_t span_cols = static_cast<std::size_t>(target) + 1;
    ComplexMatrix basis(n, span_cols);
    for (std::size_t i = 0; i < n; ++i) basis(i, 0) = op.entries(i, static_cast<std::size_t>(k));
    for (std::size_t j = 0; j + 1 < span_cols; ++j) basis(j, j + 1) = cplx{1.0, 0.0};

    std::vector<cplx> rhs(n, cplx{0.0, 0.0});
    rhs[static_cast<std::size_t>(target)] = cplx{1.0, 0.0};

    const LeastSquaresResult ls = least_squares(basis, rhs);
    return TriangularResult{ls.residual, ls.solution[0]};
}

namespace {

// N x N determinant by Gaussian elimination with partial pivoting.
cplx small_det(ComplexMatrix a) {
    const std::size_t n = a.rows();
    cplx det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
        }
        if (a(pivot, col) == cplx{0.0, 0.0}) return cplx{0.0, 0.0};
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const cplx factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

struct TupleSumContext {
    std::vector<std::vector<cplx>> z_pow;     // [atom][exponent] for m powers
    std::vector<std::vector<cplx>> zbar_pow;  // [atom][exponent] for k powers
    std::vector<double> log_abs;              // log|z_j|
};

TupleSumContext prepare_tuple_sum(const AtomicMeasure& nu, const std::vector<int>& m_exp,
                                  const std::vector<int>& k_exp, bool need_logs) {
    int max_m = 0, max_k = 0;
    for (int e : m_exp) {
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
        max_m = std::max(max_m, e);
    }
    for (int e : k_exp) {
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
        max_k = std::max(max_k, e);
    }
    TupleSumContext ctx;
    for (const auto& atom : nu.atoms()) {
        std::vector<cplx> zp(static_cast<std::size_t>(max_m) + 1);
        std::vector<cplx> zbp(static_cast<std::size_t>(max_k) + 1);
        zp[0] = zbp[0] = cplx{1.0, 0.0};
        for (int e = 1; e <= max_m; ++e) zp[static_cast<std::size_t>(e)] = zp[e - 1] * atom.location;
        for (int e = 1; e <= max_k; ++e) {
            zbp[static_cast<std::size_t>(e)] = zbp[e - 1] * std::conj(atom.location);
        }
        ctx.z_pow.push_back(std::move(zp));
        ctx.zbar_pow.push_back(std::move(zbp));
        if (need_logs) ctx.log_abs.push_back(std::log(std::abs(atom.location)));
    }
    return ctx;
}

constexpr double kTupleGuard = 1e6;

cplx tuple_sum(const AtomicMeasure& nu, std::size_t N, const std::vector<int>& m_exp,
               const std::vector<int>& k_exp, const cplx* w, double* magnitude_sum = nullptr) {
    if (N == 0) throw std::invalid_argument("tuple sum: N must be positive");
    if (m_exp.size() != N || k_exp.size() != N) {
        throw std::invalid_argument("tuple sum: exponent lists must have length N");
    }
    const std::size_t d = nu.atoms().size();
    if (d == 0) return cplx{0.0, 0.0};
    if (std::pow(static_cast<double>(d), static_cast<double>(N)) > kTupleGuard) {
        throw std::invalid_argument("tuple sum: d^N exceeds the 1e6 tuple guard");
    }

    const TupleSumContext ctx = prepare_tuple_sum(nu, m_exp, k_exp, w != nullptr);

    // A repeated column exponent duplicates a determinant row in every tuple,
    // and a repeated weight exponent pairs each tuple with its slot-swapped
    // mirror whose determinant is negated; either way the sum is exactly zero.
    bool exact_zero = false;
    for (std::size_t i = 0; i < N && !exact_zero; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            if (k_exp[i] == k_exp[j] || m_exp[i] == m_exp[j]) {
                exact_zero = true;
                break;
            }
        }
    }

    std::vector<std::size_t> tuple(N, 0);
    cplx total{0.0, 0.0};
    while (true) {
        cplx prefactor{1.0, 0.0};
        double log_abs_prod = 0.0;
        for (std::size_t l = 0; l < N; ++l) {
            const std::size_t a = tuple[l];
            prefactor *= nu.atoms()[a].weight * ctx.z_pow[a][static_cast<std::size_t>(m_exp[l])];
            if (w != nullptr) log_abs_prod += ctx.log_abs[a];
        }
        if (w != nullptr) prefactor *= std::exp(2.0 * (*w) * log_abs_prod);

        // A repeated atom duplicates a determinant column; those tuples are
        // exact zeros, and elimination would only produce roundoff in their place.
        bool repeated = false;
        for (std::size_t i = 0; i < N && !repeated; ++i) {
            for (std::size_t j = i + 1; j < N; ++j) {
                if (tuple[i] == tuple[j]) {
                    repeated = true;
                    break;
                }
            }
        }

        ComplexMatrix det_arg(N, N);
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                det_arg(i, j) = ctx.zbar_pow[tuple[j]][static_cast<std::size_t>(k_exp[i])];
            }
        }
        if (!repeated && !exact_zero) total += prefactor * small_det(det_arg);
        if (magnitude_sum != nullptr) {
            // Hadamard bound on |det|: the summand scale survives even when
            // the determinant itself cancels to zero.
            double bound = 1.0;
            for (std::size_t j = 0; j < N; ++j) {
                double col = 0.0;
                for (std::size_t i = 0; i < N; ++i) col += std::norm(det_arg(i, j));
                bound *= std::sqrt(col);
            }
            *magnitude_sum += std::abs(prefactor) * bound;
        }

        // odometer over [0,d)^N
        std::size_t pos = 0;
        while (pos < N && ++tuple[pos] == d) {
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == N) break;
    }
    return total;
}

}  // namespace

cplx determinant_identity(const AtomicMeasure& nu, std::size_t N,
                          const std::vector<int>& m_exponents,
                          const std::vector<int>& k_exponents) {
    return tuple_sum(nu, N, m_exponents, k_exponents, nullptr);
}

DetIdResult determinant_identity_detailed(const AtomicMeasure& nu, std::size_t N,
                                          const std::vector<int>& m_exponents,
                                          const std::vector<int>& k_exponents) {
    DetIdResult out{cplx{0.0, 0.0}, 0.0};
    out.value = tuple_sum(nu, N, m_exponents, k_exponents, nullptr, &out.magnitude_sum);
    return out;
}

cplx f_eval(const AtomicMeasure& nu, std::size_t N, const std::vector<int>& m_exponents,
            const std::vector<int>& k_exponents, cplx w) {
    if (nu.has_origin_atom()) throw std::invalid_argument("f_eval: origin atom excluded");
    if (w.real() < 0.0) throw std::domain_error("f_eval: Re(w) must be non-negative");
    return tuple_sum(nu, N, m_exponents, k_exponents, &w);
}

namespace {

constexpr double kZeroDetectTol = 1e-10;

std::set<int> omega_zero_set(const RadialProfile& h, std::size_t n) {
    std::set<int> zeros;
    double max_abs = 0.0;
    std::vector<cplx> vals(n);
    for (std::size_t m = 0; m < n; ++m) {
        vals[m] = omega(h, static_cast<int>(m));
        max_abs = std::max(max_abs, std::abs(vals[m]));
    }
    for (std::size_t m = 0; m < n; ++m) {
        if (std::abs(vals[m]) <= kZeroDetectTol * max_abs) zeros.insert(static_cast<int>(m));
    }
    return zeros;
}

}  // namespace

ExperimentReport product_rank_experiment(const std::vector<RadialProfile>& g_list,
                                         const Symbol& f_mid,
                                         const std::vector<RadialProfile>& f_list,
                                         std::size_t n, double tol) {
    if (n == 0) throw std::invalid_argument("product_rank_experiment: n must be positive");
    for (const auto& h : g_list) {
        if (h.is_zero()) throw std::invalid_argument("product_rank_experiment: zero profile");
    }
    for (const auto& h : f_list) {
        if (h.is_zero()) throw std::invalid_argument("product_rank_experiment: zero profile");
    }

    std::vector<TruncatedOperator> chain;
    for (const auto& h : g_list) chain.push_back(radial_diagonal(h, n));
    chain.push_back(toeplitz_matrix(f_mid, n));
    for (const auto& h : f_list) chain.push_back(radial_diagonal(h, n));
    const TruncatedOperator product = multiply(chain);

    ExperimentReport report;
    report.config_echo = product.provenance;
    report.observed_rank = numerical_rank(product, tol);
    report.truncation_artifact_possible = !f_mid.is_radial();

    std::set<int> g_zeros;
    for (const auto& h : g_list) {
        const auto z = omega_zero_set(h, n);
        g_zeros.insert(z.begin(), z.end());
    }
    report.s2_kernel_indices.assign(g_zeros.begin(), g_zeros.end());

    std::set<int> f_zeros;
    for (const auto& h : f_list) {
        const auto z = omega_zero_set(h, n);
        f_zeros.insert(z.begin(), z.end());
    }

    // e_j = S1 e_j / prod omega(f_i, j) off the zero sets.
    double s1_residual = 0.0;
    const std::size_t s1_start = g_list.size() + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (f_zeros.count(static_cast<int>(j)) != 0) continue;
        cplx omega_prod{1.0, 0.0};
        cplx diag{1.0, 0.0};
        for (std::size_t i = 0; i < f_list.size(); ++i) {
            omega_prod *= omega(f_list[i], static_cast<int>(j));
            diag *= chain[s1_start + i].entries(j, j);
        }
        s1_residual = std::max(s1_residual, std::abs(diag / omega_prod - cplx{1.0, 0.0}));
    }
    report.residuals.push_back({"s1_identity_residual", s1_residual, 1e-10});

    if (f_mid.is_radial()) {
        std::set<int> all_zeros = g_zeros;
        all_zeros.insert(f_zeros.begin(), f_zeros.end());
        if (!f_mid.is_zero()) {
            const auto mid_zeros = omega_zero_set(f_mid.mode(0), n);
            all_zeros.insert(mid_zeros.begin(), mid_zeros.end());
            report.predicted_rank = n - all_zeros.size();
        } else {
            report.predicted_rank = 0;
        }
    }

    report.verdict = true;
    for (const auto& r : report.residuals) {
        if (r.value > r.tolerance) report.verdict = false;
    }
    if (report.predicted_rank.has_value() &&
        *report.predicted_rank != report.observed_rank.rank) {
        report.verdict = false;
    }
    return report;
}

}  // namespace bergman
