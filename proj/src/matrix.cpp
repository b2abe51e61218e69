#include "bergman/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bergman {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto& z : data_) acc += std::norm(z);
    return std::sqrt(acc);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cplx> out(a.rows(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOrthTol = 1e-14;

}  // namespace

SvdResult jacobi_svd(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n) throw std::invalid_argument("jacobi_svd: requires rows >= cols");

    ComplexMatrix work = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Columns whose norm has collapsed to roundoff relative to the whole matrix
    // carry singular values below representable precision; rotating against them
    // only churns noise and prevents the relative criterion from settling.
    const double fro2 = [&] {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) acc += std::norm(work(i, j));
        }
        return acc;
    }();
    const double negligible = fro2 * kOrthTol * kOrthTol;

    bool converged = (n <= 1);
    double worst = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq{0.0, 0.0};
                for (std::size_t i = 0; i < m; ++i) {
                    app += std::norm(work(i, p));
                    aqq += std::norm(work(i, q));
                    apq += std::conj(work(i, p)) * work(i, q);
                }
                if (app <= negligible || aqq <= negligible) continue;
                const double scale = std::sqrt(app * aqq);
                if (std::abs(apq) <= kOrthTol * scale) continue;
                worst = std::max(worst, std::abs(apq) / scale);
                converged = false;

                // Zero the 2x2 Gram off-diagonal: apq = |apq| e^{i phi}.
                const double abs_apq = std::abs(apq);
                const cplx phase = apq / abs_apq;
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;

                for (std::size_t i = 0; i < m; ++i) {
                    const cplx wp = work(i, p), wq = work(i, q);
                    work(i, p) = cs * wp - sn * std::conj(phase) * wq;
                    work(i, q) = sn * phase * wp + cs * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = cs * vp - sn * std::conj(phase) * vq;
                    v(i, q) = sn * phase * vp + cs * vq;
                }
            }
        }
    }
    if (!converged) {
        throw SvdError("jacobi_svd: no convergence after 60 sweeps", worst);
    }

    std::vector<double> sigma(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(work(i, j));
        sigma[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.u = ComplexMatrix(m, n);
    out.v = ComplexMatrix(n, n);
    out.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sigma[src];
        if (sigma[src] > 0.0) {
            for (std::size_t i = 0; i < m; ++i) out.u(i, j) = work(i, src) / sigma[src];
        }
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    }
    return out;
}

LeastSquaresResult least_squares(const ComplexMatrix& a, const std::vector<cplx>& b,
                                 double rcond) {
    if (a.rows() != b.size()) throw std::invalid_argument("least_squares: dimension mismatch");
    const SvdResult svd = jacobi_svd(a);
    const double cutoff = svd.sigma.empty() ? 0.0 : rcond * svd.sigma[0];
    std::vector<cplx> x(a.cols(), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (svd.sigma[j] <= cutoff) continue;
        cplx utb{0.0, 0.0};
        for (std::size_t i = 0; i < a.rows(); ++i) utb += std::conj(svd.u(i, j)) * b[i];
        utb /= svd.sigma[j];
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] += svd.v(i, j) * utb;
    }
    const std::vector<cplx> ax = matvec(a, x);
    double res = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) res += std::norm(ax[i] - b[i]);
    return LeastSquaresResult{std::move(x), std::sqrt(res)};
}

std::vector<cplx> smallest_right_singular_vector(const ComplexMatrix& a) {
    ComplexMatrix padded = a;
    if (a.rows() < a.cols()) {
        padded = ComplexMatrix(a.cols(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) padded(i, j) = a(i, j);
        }
    }
    const SvdResult svd = jacobi_svd(padded);
    const std::size_t last = padded.cols() - 1;
    std::vector<cplx> out(padded.cols());
    for (std::size_t i = 0; i < padded.cols(); ++i) out[i] = svd.v(i, last);
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    }
    const std::size_t n = a.rows();
    ComplexMatrix w = a;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(w(p, q));
        }
        if (std::sqrt(off) <= 1e-15 * (w.frobenius_norm() + 1e-300)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = w(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const cplx phase = apq / abs_apq;
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                // Two-sided update W <- J^H W J with the same rotation as the SVD.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx wip = w(i, p), wiq = w(i, q);
                    w(i, p) = cs * wip - sn * std::conj(phase) * wiq;
                    w(i, q) = sn * phase * wip + cs * wiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx wpj = w(p, j), wqj = w(q, j);
                    w(p, j) = cs * wpj - sn * phase * wqj;
                    w(q, j) = sn * std::conj(phase) * wpj + cs * wqj;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

}  // namespace bergman
