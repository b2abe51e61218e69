#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/atomic_measure.hpp"
#include "bergman/moments.hpp"
#include "bergman/operators.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

// Z(h) at truncation scale: indices m < scan_limit where omega(h,m) is zero
// relative to the largest eigenvalue in range, plus the partial sum of the
// Muntz-Szasz series sum 1/(m+1) over those indices.
struct ZeroSetReport {
    std::vector<int> indices;
    double muntz_partial_sum;
    std::size_t scan_limit;
    double tol;
};

ZeroSetReport zero_set_report(const EigenvalueSequence& seq, double tol);

// Residual of reconstructing e_{k+M} from span({T_f e_k} u {e_0..e_{k+M-1}})
// inside the n-truncation.  leading_coefficient is the weight placed on
// T_f e_k, the quantity driving the induction.
struct TriangularResult {
    double residual;
    cplx leading_coefficient;
};

struct HypothesisViolation : std::runtime_error {
    HypothesisViolation(const std::string& msg, int k_) : std::runtime_error(msg), k(k_) {}
    int k;
};

TriangularResult triangular_reconstruction(const Symbol& f, int k, std::size_t n);

// Exact d^N-term sum of integral prod_l z_l^{m_l} det(conj(z_j)^{k_i}) dnu^N.
// Antisymmetric in the entries of k; identically zero whenever the measure
// has fewer than N atoms.
cplx determinant_identity(const AtomicMeasure& nu, std::size_t N,
                          const std::vector<int>& m_exponents,
                          const std::vector<int>& k_exponents);

// Same sum plus the accumulated magnitude of the individual summands,
// the natural scale for judging cancellation to zero.
struct DetIdResult {
    cplx value;
    double magnitude_sum;
};
DetIdResult determinant_identity_detailed(const AtomicMeasure& nu, std::size_t N,
                                          const std::vector<int>& m_exponents,
                                          const std::vector<int>& k_exponents);

// Same sum weighted by |z_1...z_N|^{2w} through the principal branch,
// defined for Re(w) >= 0 and measures with no atom at the origin.
cplx f_eval(const AtomicMeasure& nu, std::size_t N, const std::vector<int>& m_exponents,
            const std::vector<int>& k_exponents, cplx w);

struct NamedResidual {
    std::string name;
    double value;
    double tolerance;
};

struct ExperimentReport {
    std::string config_echo;
    std::optional<std::size_t> predicted_rank;  // absent for non-radial middle factor
    RankReport observed_rank;
    std::vector<int> s2_kernel_indices;  // truncation-level zero set of the left product
    std::vector<NamedResidual> residuals;
    bool truncation_artifact_possible;
    bool verdict;
};

// Rank experiment for products S2 * T_f * S1 with radial factor lists:
// builds the diagonal compressions, multiplies, and compares the observed
// numerical rank with the zero-set prediction.
ExperimentReport product_rank_experiment(const std::vector<RadialProfile>& g_list,
                                         const Symbol& f_mid,
                                         const std::vector<RadialProfile>& f_list,
                                         std::size_t n, double tol);

}  // namespace bergman
