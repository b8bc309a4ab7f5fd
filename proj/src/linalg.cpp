#include "qmono/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmono/errors.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

EigenResult hermitian_eig(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("hermitian_eig: matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", expected square");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol::hermitian * scale) {
        throw ValidationError("hermitian_eig: input not Hermitian, max |M - M^dagger| = " +
                              std::to_string(asym));
    }
    Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: no convergence within the iteration cap, "
                    "off-diagonal residual " +
                    std::to_string((sym - Matrix(sym.diagonal().asDiagonal())).norm()));
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& m) {
    EigenResult eig = hermitian_eig(m);
    RealVector roots(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        double v = eig.values[i];
        if (v < -tol::psd_clamp) {
            throw ValidationError("psd_sqrt: eigenvalue " + std::to_string(v) +
                                  " below -" + std::to_string(tol::psd_clamp));
        }
        roots[i] = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    Matrix r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) {
        throw DimensionError("partial_trace: matrix not square");
    }
    long total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionError("partial_trace: subsystem dimension < 1");
        total *= d;
    }
    if (total != rho.rows()) {
        throw DimensionError("partial_trace: product of dims " + std::to_string(total) +
                             " != matrix dimension " + std::to_string(rho.rows()));
    }
    if (keep.empty()) {
        throw DimensionError("partial_trace: keep set is empty");
    }
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::unique(kept.begin(), kept.end()) != kept.end()) {
        throw DimensionError("partial_trace: keep set has duplicates");
    }
    if (kept.front() < 0 || kept.back() >= static_cast<int>(dims.size())) {
        throw DimensionError("partial_trace: keep index out of range");
    }

    std::vector<int> traced;
    for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
        if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
    }

    long dim_keep = 1;
    for (int s : kept) dim_keep *= dims[s];
    long dim_traced = 1;
    for (int s : traced) dim_traced *= dims[s];

    // Strides of each subsystem in the full index (subsystem 0 most significant).
    std::vector<long> stride(dims.size(), 1);
    for (int s = static_cast<int>(dims.size()) - 2; s >= 0; --s) {
        stride[s] = stride[s + 1] * dims[s + 1];
    }

    auto embed = [&](long sub, const std::vector<int>& subsys) {
        long idx = 0;
        for (int pos = static_cast<int>(subsys.size()) - 1; pos >= 0; --pos) {
            int s = subsys[pos];
            idx += (sub % dims[s]) * stride[s];
            sub /= dims[s];
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dim_keep, dim_keep);
    for (long t = 0; t < dim_traced; ++t) {
        const long t_off = traced.empty() ? 0 : embed(t, traced);
        for (long i = 0; i < dim_keep; ++i) {
            const long row = embed(i, kept) + t_off;
            for (long j = 0; j < dim_keep; ++j) {
                out(i, j) += rho(row, embed(j, kept) + t_off);
            }
        }
    }
    return out;
}

Vector haar_random_pure(int n_qubits, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 6) {
        throw DomainError("haar_random_pure: n_qubits " + std::to_string(n_qubits) +
                          " outside [1, 6]");
    }
    Vector psi(1L << n_qubits);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        psi[i] = rng.complex_normal();
    }
    psi /= psi.norm();
    return psi;
}

Vector haar_random_pure(int n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_pure(n_qubits, rng);
}

} // namespace qmono
