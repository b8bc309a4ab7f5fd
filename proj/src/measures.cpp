#include "qmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmono/errors.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

constexpr double kAlphaSlack = 1e-12;

// sigma_y (x) sigma_y, real and symmetric.
Matrix spin_flip_operator() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 3) = s(3, 0) = -1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

void require_two_qubits(const DensityMatrix& rho, const char* who) {
    if (rho.matrix.rows() != 4) {
        throw DimensionError(std::string(who) + ": expected a 4x4 two-qubit matrix, got " +
                             std::to_string(rho.matrix.rows()) + "x" +
                             std::to_string(rho.matrix.cols()));
    }
}

void require_three_qubits(const PureState& psi, const char* who) {
    if (psi.n_qubits != 3) {
        throw DimensionError(std::string(who) + ": expected 3 qubits, got " +
                             std::to_string(psi.n_qubits));
    }
}

int check_focus(const PureState& psi, int a, const char* who) {
    if (a < 0 || a >= psi.n_qubits) {
        throw DimensionError(std::string(who) + ": focus qubit " + std::to_string(a) +
                             " out of range");
    }
    return a;
}

} // namespace

std::array<int, 2> partners_of_focus(int a) {
    switch (a) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        case 2: return {0, 1};
        default: throw DimensionError("partners_of_focus: focus " + std::to_string(a));
    }
}

MeasureValue concurrence_pure(const PureState& psi, const Bipartition& part) {
    if (static_cast<int>(part.side_a.size() + part.side_b.size()) != psi.n_qubits) {
        throw DimensionError("concurrence_pure: bipartition does not cover the register");
    }
    // Coefficient matrix of the bipartition: row bits from side A, column bits
    // from side B, each MSB-first.
    const long rows = 1L << part.side_a.size();
    const long cols = 1L << part.side_b.size();
    Matrix coeff(rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            long idx = 0;
            for (std::size_t pos = 0; pos < part.side_a.size(); ++pos) {
                const long bit = (i >> (part.side_a.size() - 1 - pos)) & 1;
                idx |= bit << (psi.n_qubits - 1 - part.side_a[pos]);
            }
            for (std::size_t pos = 0; pos < part.side_b.size(); ++pos) {
                const long bit = (j >> (part.side_b.size() - 1 - pos)) & 1;
                idx |= bit << (psi.n_qubits - 1 - part.side_b[pos]);
            }
            coeff(i, j) = psi.amplitudes[idx];
        }
    }
    // sqrt(2 (1 - Tr rho_A^2)) equals twice the Frobenius norm of the 2x2
    // minors of the coefficient matrix. Summing squared minors avoids the
    // cancellation in 1 - Tr rho^2, so near-product states come out at the
    // true scale instead of sqrt(eps).
    double sum = 0.0;
    for (long i = 0; i < rows; ++i) {
        for (long j = i + 1; j < rows; ++j) {
            for (long k = 0; k < cols; ++k) {
                for (long l = k + 1; l < cols; ++l) {
                    sum += std::norm(coeff(i, k) * coeff(j, l) -
                                     coeff(i, l) * coeff(j, k));
                }
            }
        }
    }
    const double c = 2.0 * std::sqrt(sum) / psi.amplitudes.squaredNorm();
    return {c, MeasureKind::concurrence, true, true};
}

Matrix spin_flip(const DensityMatrix& rho) {
    require_two_qubits(rho, "spin_flip");
    static const Matrix s = spin_flip_operator();
    return s * rho.matrix.conjugate() * s;
}

std::array<double, 4> wootters_mus(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_mus");
    const EigenResult eig = hermitian_eig(rho.matrix);

    // Subnormalized eigenvectors of the significant spectrum.
    int rank = 0;
    Matrix sub(4, 4);
    for (int i = 3; i >= 0; --i) {
        const double lambda = eig.values[i];
        if (lambda > 1e-14) {
            sub.col(rank++) = std::sqrt(lambda) * eig.vectors.col(i);
        }
    }
    static const Matrix s = spin_flip_operator();
    const Matrix tau =
        sub.leftCols(rank).transpose() * s * sub.leftCols(rank);

    Eigen::JacobiSVD<Matrix> svd(tau);
    std::array<double, 4> mus{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < rank; ++i) {
        mus[i] = svd.singularValues()[i];
    }
    std::sort(mus.begin(), mus.end(), std::greater<>());
    return mus;
}

MeasureValue concurrence_2q(const DensityMatrix& rho) {
    const auto mu = wootters_mus(rho);
    const double c = std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
    return {c, MeasureKind::concurrence, true, true};
}

MeasureValue coa_2q(const DensityMatrix& rho) {
    const auto mu = wootters_mus(rho);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix, Eigen::EigenvaluesOnly);
    const int rank = (solver.eigenvalues().array() > tol::rank_eps).count();
    const double sum = mu[0] + mu[1] + mu[2] + mu[3];
    return {sum, MeasureKind::coa, rank <= 2, true};
}

MeasureValue coa_via_tangle(const PureState& psi, int a, int partner) {
    require_three_qubits(psi, "coa_via_tangle");
    check_focus(psi, a, "coa_via_tangle");
    check_focus(psi, partner, "coa_via_tangle");
    if (partner == a) {
        throw DimensionError("coa_via_tangle: partner equals focus");
    }
    const double c_ab = concurrence_2q(reduce(psi, {a, partner})).value;
    const double tau = three_tangle(psi, a).value;
    const double value = std::sqrt(std::max(0.0, c_ab * c_ab + tau));
    return {value, MeasureKind::coa, true, true};
}

double binary_entropy(double x) {
    if (x < -kAlphaSlack || x > 1.0 + kAlphaSlack) {
        throw DomainError("binary_entropy: argument " + std::to_string(x) +
                          " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double f_of(double x) {
    if (x < -kAlphaSlack || x > 1.0 + kAlphaSlack) {
        throw DomainError("f_of: argument " + std::to_string(x) + " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - x)));
}

MeasureValue eof_pure(const PureState& psi, const Bipartition& part) {
    const DensityMatrix rho_a = reduce(psi, part.side_a);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_a.matrix, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda > 1e-16) entropy -= lambda * std::log2(lambda);
    }
    return {std::max(0.0, entropy), MeasureKind::eof, true, true};
}

MeasureValue eof_2q(const DensityMatrix& rho) {
    const double c = concurrence_2q(rho).value;
    return {f_of(c * c), MeasureKind::eof, true, true};
}

MeasureValue three_tangle(const PureState& psi, int a) {
    require_three_qubits(psi, "three_tangle");
    check_focus(psi, a, "three_tangle");
    const auto [b, c] = partners_of_focus(a);
    const double c_abc = concurrence_pure(psi, bipartition({a}, 3)).value;
    const double c_ab = concurrence_2q(reduce(psi, {a, b})).value;
    const double c_ac = concurrence_2q(reduce(psi, {a, c})).value;
    const double tau = c_abc * c_abc - c_ab * c_ab - c_ac * c_ac;
    return {tau, MeasureKind::tangle, true, true};
}

MeasureValue residual_concurrence(const PureState& psi, int a, double alpha) {
    require_three_qubits(psi, "residual_concurrence");
    check_focus(psi, a, "residual_concurrence");
    const auto [b, c] = partners_of_focus(a);
    const double c_abc = concurrence_pure(psi, bipartition({a}, 3)).value;
    const double c_ab = concurrence_2q(reduce(psi, {a, b})).value;
    const double c_ac = concurrence_2q(reduce(psi, {a, c})).value;
    const double value =
        std::pow(c_abc, alpha) - std::pow(c_ab, alpha) - std::pow(c_ac, alpha);
    return {value, MeasureKind::residual, true, alpha >= 2.0 - kAlphaSlack};
}

MeasureValue residual_eof(const PureState& psi, int a, double alpha) {
    require_three_qubits(psi, "residual_eof");
    check_focus(psi, a, "residual_eof");
    const auto [b, c] = partners_of_focus(a);
    const double e_abc = eof_pure(psi, bipartition({a}, 3)).value;
    const double e_ab = eof_2q(reduce(psi, {a, b})).value;
    const double e_ac = eof_2q(reduce(psi, {a, c})).value;
    const double value =
        std::pow(e_abc, alpha) - std::pow(e_ab, alpha) - std::pow(e_ac, alpha);
    return {value, MeasureKind::residual, true, alpha >= std::sqrt(2.0) - kAlphaSlack};
}

} // namespace qmono
