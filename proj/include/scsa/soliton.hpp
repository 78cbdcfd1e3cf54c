#pragma once

#include <vector>

#include "scsa/signal.hpp"

namespace scsa {

/// Discrete scattering data of a reflectionless potential: decay rates
/// kappa_n and norming constants c_n, together with the chi scaling.
struct SolitonModel {
    double chi;
    std::vector<double> kappas;     // distinct, positive
    std::vector<double> constants;  // positive, same length
};

/// Evaluate the determinant representation
///   y(x) = (2/chi) d^2/dx^2 ln det(I + A(x)),
///   A_mn(x) = c_m c_n / (kappa_m + kappa_n) * exp(-(kappa_m + kappa_n) x)
/// on the grid. Requires dx <= 0.25 / max kappa.
Signal nsoliton_signal(const SolitonModel& model, const Grid& grid);

/// chi value at which -chi*sech^2 is reflectionless: N(N+1).
double poschl_teller_chi(int n);

/// Analytic decay rates of -chi*sech^2: s, s-1, ... down to the last
/// positive value, with s = (-1 + sqrt(1+4chi))/2.
std::vector<double> poschl_teller_kappas(double chi);

}  // namespace scsa
