#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "scsa/signal.hpp"

namespace scsa {

/// Negative spectrum of -D2 - chi*diag(y): kappa_n = sqrt(-lambda_n)
/// sorted descending, with the matching L2-normalized eigenfunction
/// samples as columns (sum psi^2 * dx = 1).
struct SchrodingerSpectrum {
    double chi;
    Grid grid;
    std::vector<double> kappas;  // descending
    Eigen::MatrixXd eigfuncs;    // M x N, column n pairs with kappas[n]

    int count() const { return static_cast<int>(kappas.size()); }
};

/// Full analysis bundle for one (signal, chi) pair.
struct ScsaResult {
    SchrodingerSpectrum spectrum;
    std::vector<double> reconstruction;
    double mse;
    double inv1;  // (1/chi) * sum kappa
    double inv3;  // (1/chi^2) * sum kappa^3
    std::vector<double> levels;  // kappa^2 / chi
};

/// H = -D2 - chi*diag(samples). Signal must be nonnegative.
Eigen::MatrixXd assemble_hamiltonian(const Signal& s, double chi);

SchrodingerSpectrum negative_spectrum(const Signal& s, double chi, double eps_rel = 1e-10);

/// y_chi = (4/chi) * sum kappa_n * psi_n^2, pointwise.
std::vector<double> reconstruct(const SchrodingerSpectrum& spec);

/// J = (1/M) * sum (y_i - y_rec_i)^2.
double mse(const Signal& y, const std::vector<double>& y_rec);

/// First and third kappa momenta: ((1/chi) sum kappa, (1/chi^2) sum kappa^3).
std::pair<double, double> momenta(const SchrodingerSpectrum& spec);

/// kappa_n^2 / chi, one level per spectral component.
std::vector<double> quantization_levels(const SchrodingerSpectrum& spec);

/// rho = (4/chi) sum kappa - integral of y; vanishes iff -chi*y is
/// reflectionless.
double reflectionless_deficit(const Signal& y, const SchrodingerSpectrum& spec);

/// Convenience pipeline: spectrum, reconstruction and all diagnostics.
ScsaResult analyze(const Signal& s, double chi, double eps_rel = 1e-10);

}  // namespace scsa
