#include "scsa/spectral.hpp"

#include <cmath>
#include <numbers>

namespace scsa {

Eigen::MatrixXd second_derivative_matrix(const Grid& grid) {
    const int m = grid.m;
    const double delta = 2.0 * std::numbers::pi / m;
    const double pref = (delta * delta) / (grid.dx * grid.dx);

    // Off-diagonal entries are even functions of k-j; precompute one row.
    std::vector<double> offdiag(m, 0.0);
    double diag;
    if (m % 2 == 0) {
        diag = -std::numbers::pi * std::numbers::pi / (3.0 * delta * delta) - 1.0 / 6.0;
        for (int d = 1; d < m; ++d) {
            double s = std::sin(0.5 * d * delta);
            double sign = (d % 2 == 0) ? 1.0 : -1.0;
            offdiag[d] = -sign * 0.5 / (s * s);
        }
    } else {
        // +1/12 (not -1/12) makes the matrix annihilate constants for odd M
        diag = -std::numbers::pi * std::numbers::pi / (3.0 * delta * delta) + 1.0 / 12.0;
        for (int d = 1; d < m; ++d) {
            double s = std::sin(0.5 * d * delta);
            double c = std::cos(0.5 * d * delta);
            double sign = (d % 2 == 0) ? 1.0 : -1.0;
            offdiag[d] = -sign * 0.5 * c / (s * s);
        }
    }

    Eigen::MatrixXd d2(m, m);
    for (int k = 0; k < m; ++k) {
        d2(k, k) = pref * diag;
        for (int j = 0; j < k; ++j) {
            double v = pref * offdiag[k - j];
            d2(k, j) = v;
            d2(j, k) = v;
        }
    }
    return d2;
}

EigenDecomposition eig_sym(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw NonSymmetricInputError("eig_sym: matrix not square");
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    const double scale = a.cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(scale, 1.0))
        throw NonSymmetricInputError("eig_sym: matrix not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceError("eig_sym: iteration did not converge");
    return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace scsa
