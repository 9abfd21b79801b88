#include "qbell/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace qbell {

double max_abs(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    return max_abs(a - b);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const ComplexMatrix gram = m.adjoint() * m;
    return max_abs_diff(gram, ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

std::vector<EigenSpace> hermitian_eigensystem(const ComplexMatrix& m,
                                              double cluster_tol) {
    if (!is_hermitian(m))
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
    const auto& values = solver.eigenvalues();    // ascending
    const auto& vectors = solver.eigenvectors();  // orthonormal columns

    std::vector<EigenSpace> spaces;
    const Eigen::Index n = values.size();
    Eigen::Index start = 0;
    while (start < n) {
        // Grow the cluster while successive gaps stay below the tolerance.
        Eigen::Index end = start + 1;
        while (end < n && values(end) - values(end - 1) <= cluster_tol) ++end;
        ComplexMatrix projector = ComplexMatrix::Zero(n, n);
        double value_sum = 0.0;
        for (Eigen::Index k = start; k < end; ++k) {
            projector += vectors.col(k) * vectors.col(k).adjoint();
            value_sum += values(k);
        }
        spaces.push_back({value_sum / static_cast<double>(end - start), projector});
        start = end;
    }
    return spaces;
}

ComplexMatrix exp_skew_hermitian(const ComplexMatrix& h, double t) {
    ComplexMatrix result = ComplexMatrix::Zero(h.rows(), h.cols());
    for (const auto& space : hermitian_eigensystem(h))
        result += std::exp(Complex(0.0, -t * space.eigenvalue)) * space.projector;
    return result;
}

}  // namespace qbell
