#pragma once

#include <Eigen/Dense>

#include "scsa/signal.hpp"

namespace scsa {

/// Fourier pseudo-spectral second-derivative matrix on the grid.
///
/// Dense, symmetric, negative semidefinite (it annihilates constants).
/// Entries depend only on k-j through the even/odd-M trigonometric
/// formulas with wavelength constant 2*pi/M and prefactor
/// (2*pi/M)^2 / dx^2.
Eigen::MatrixXd second_derivative_matrix(const Grid& grid);

/// Full spectrum of a dense symmetric matrix.
struct EigenDecomposition {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // column n pairs with values(n); orthonormal
};

/// All eigenpairs of a symmetric matrix, values ascending.
/// Throws NonSymmetricInputError beyond 1e-12 relative asymmetry and
/// NoConvergenceError if the iteration fails.
EigenDecomposition eig_sym(const Eigen::MatrixXd& a);

}  // namespace scsa
