#pragma once

#include <utility>
#include <vector>

#include "scsa/core.hpp"

namespace scsa {

/// One evaluation of the pipeline at a fixed chi.
struct SweepPoint {
    double chi;
    int count;   // N_chi
    double mse;  // J(chi)
    bool monotonicity_anomaly = false;  // count dropped below an earlier one
};

/// Interval [chi_lo, chi_hi] on which N_chi is constant.
struct Plateau {
    int count;
    double chi_lo;
    double chi_hi;
};

/// Evaluate (count, J) at every chi in the ascending list.
std::vector<SweepPoint> sweep(const Signal& s, const std::vector<double>& chis);

/// Log-spaced chi values in [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int n);

/// Initial guess chi = (pi*N / integral sqrt(y))^2 from the eigenvalue
/// counting asymptotics.
double weyl_chi_for_target(const Signal& s, int n_target);

/// Bracket the plateau where N_chi equals n_target by bisecting the
/// count function, to 1e-3 relative chi resolution.
Plateau find_plateau(const Signal& s, int n_target, std::pair<double, double> bracket);

/// Minimize J over the plateau: coarse grid of `budget` points, then
/// golden-section refinement around the best sample.
std::pair<double, double> optimize_chi(const Signal& s, const Plateau& plateau, int budget = 16);

}  // namespace scsa
