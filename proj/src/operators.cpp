#include "bergman/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bergman/moments.hpp"

namespace bergman {

TruncatedOperator toeplitz_matrix(const Symbol& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("toeplitz_matrix: n must be positive");
    TruncatedOperator op{n, ComplexMatrix(n, n), "T[" + f.describe() + "]"};
    for (const auto& [m, profile] : f.modes()) {
        // Mode m contributes only to the diagonal l - k = m.
        for (std::size_t k = 0; k < n; ++k) {
            const long l = static_cast<long>(k) + m;
            if (l < 0 || l >= static_cast<long>(n)) continue;
            const double norm = 2.0 * std::sqrt(static_cast<double>((k + 1) * (l + 1)));
            op.entries(static_cast<std::size_t>(l), k) =
                norm * moment(profile, static_cast<int>(k) + static_cast<int>(l) + 1);
        }
    }
    return op;
}

TruncatedOperator measure_matrix(const AtomicMeasure& nu, std::size_t n) {
    if (n == 0) throw std::invalid_argument("measure_matrix: n must be positive");
    TruncatedOperator op{n, ComplexMatrix(n, n), "T[" + nu.describe() + "]"};
    for (const auto& atom : nu.atoms()) {
        // powers[k] = z^k with the 0^0 = 1 convention.
        std::vector<cplx> zpow(n), zbarpow(n);
        zpow[0] = zbarpow[0] = cplx{1.0, 0.0};
        for (std::size_t k = 1; k < n; ++k) {
            zpow[k] = zpow[k - 1] * atom.location;
            zbarpow[k] = zbarpow[k - 1] * std::conj(atom.location);
        }
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t k = 0; k < n; ++k) {
                const double norm = std::sqrt(static_cast<double>((k + 1) * (l + 1)));
                op.entries(l, k) += norm * atom.weight * zpow[k] * zbarpow[l];
            }
        }
    }
    return op;
}

TruncatedOperator multiply(std::span<const TruncatedOperator> ops) {
    if (ops.empty()) throw std::invalid_argument("multiply: empty operator list");
    const std::size_t n = ops.front().dim;
    for (const auto& op : ops) {
        if (op.dim != n) throw std::invalid_argument("multiply: dimension mismatch");
    }
    TruncatedOperator out{n, ops.front().entries, ops.front().provenance};
    for (std::size_t i = 1; i < ops.size(); ++i) {
        out.entries = matmul(out.entries, ops[i].entries);
        out.provenance += "*" + ops[i].provenance;
    }
    return out;
}

std::vector<cplx> apply(const TruncatedOperator& a, const std::vector<cplx>& v) {
    if (v.size() != a.dim) throw std::invalid_argument("apply: coefficient length mismatch");
    return matvec(a.entries, v);
}

RankReport numerical_rank(const ComplexMatrix& a, double tol) {
    if (tol <= 0.0 || tol >= 1.0) {
        throw std::invalid_argument("numerical_rank: tol must be in (0,1)");
    }
    const SvdResult svd = jacobi_svd(a);
    RankReport report{svd.sigma, tol, 0};
    if (!svd.sigma.empty() && svd.sigma[0] > 0.0) {
        for (double s : svd.sigma) {
            if (s > tol * svd.sigma[0]) ++report.rank;
        }
    }
    return report;
}

RankReport numerical_rank(const TruncatedOperator& a, double tol) {
    return numerical_rank(a.entries, tol);
}

TruncatedOperator radial_diagonal(const RadialProfile& u, std::size_t n) {
    if (n == 0) throw std::invalid_argument("radial_diagonal: n must be positive");
    TruncatedOperator op{n, ComplexMatrix(n, n), "diag[" + u.describe() + "]"};
    for (std::size_t m = 0; m < n; ++m) {
        op.entries(m, m) = omega(u, static_cast<int>(m));
    }
    return op;
}

}  // namespace bergman
