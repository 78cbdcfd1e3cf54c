#include "scsa/core.hpp"

#include <cmath>

#include "scsa/spectral.hpp"

namespace scsa {

Eigen::MatrixXd assemble_hamiltonian(const Signal& s, double chi) {
    if (!(chi > 0)) throw InvalidParameterError("assemble_hamiltonian: chi must be positive");
    if (s.min() < 0)
        throw NegativeSignalError("assemble_hamiltonian: signal has negative samples, shift first");
    Eigen::MatrixXd h = -second_derivative_matrix(s.grid);
    for (int j = 0; j < s.size(); ++j) h(j, j) -= chi * s.samples[j];
    return h;
}

SchrodingerSpectrum negative_spectrum(const Signal& s, double chi, double eps_rel) {
    const auto decomp = eig_sym(assemble_hamiltonian(s, chi));
    const int m = s.size();
    const double threshold = -eps_rel * chi * s.max();

    int n = 0;
    while (n < m && decomp.values(n) < threshold) ++n;

    SchrodingerSpectrum spec{chi, s.grid, std::vector<double>(n), Eigen::MatrixXd(m, n)};
    // eig_sym is ascending, so column 0 already has the largest kappa.
    const double norm = 1.0 / std::sqrt(s.grid.dx);  // unit Euclidean -> unit L2
    for (int k = 0; k < n; ++k) {
        spec.kappas[k] = std::sqrt(-decomp.values(k));
        spec.eigfuncs.col(k) = decomp.vectors.col(k) * norm;
    }
    return spec;
}

std::vector<double> reconstruct(const SchrodingerSpectrum& spec) {
    const int m = spec.grid.m;
    std::vector<double> y(m, 0.0);
    for (int n = 0; n < spec.count(); ++n) {
        const double w = 4.0 / spec.chi * spec.kappas[n];
        for (int j = 0; j < m; ++j) {
            double p = spec.eigfuncs(j, n);
            y[j] += w * p * p;
        }
    }
    return y;
}

double mse(const Signal& y, const std::vector<double>& y_rec) {
    if (y.samples.size() != y_rec.size())
        throw LengthMismatchError("mse: signal and reconstruction lengths differ");
    double sum = 0.0;
    for (size_t j = 0; j < y_rec.size(); ++j) {
        double d = y.samples[j] - y_rec[j];
        sum += d * d;
    }
    return sum / static_cast<double>(y_rec.size());
}

std::pair<double, double> momenta(const SchrodingerSpectrum& spec) {
    double s1 = 0.0, s3 = 0.0;
    for (double k : spec.kappas) {
        s1 += k;
        s3 += k * k * k;
    }
    return {s1 / spec.chi, s3 / (spec.chi * spec.chi)};
}

std::vector<double> quantization_levels(const SchrodingerSpectrum& spec) {
    std::vector<double> levels(spec.kappas.size());
    for (size_t n = 0; n < levels.size(); ++n)
        levels[n] = spec.kappas[n] * spec.kappas[n] / spec.chi;
    return levels;
}

double reflectionless_deficit(const Signal& y, const SchrodingerSpectrum& spec) {
    double s1 = 0.0;
    for (double k : spec.kappas) s1 += k;
    return 4.0 / spec.chi * s1 - trapezoid(y.samples, y.grid.dx);
}

ScsaResult analyze(const Signal& s, double chi, double eps_rel) {
    ScsaResult r{negative_spectrum(s, chi, eps_rel), {}, 0.0, 0.0, 0.0, {}};
    r.reconstruction = reconstruct(r.spectrum);
    r.mse = mse(s, r.reconstruction);
    std::tie(r.inv1, r.inv3) = momenta(r.spectrum);
    r.levels = quantization_levels(r.spectrum);
    return r;
}

}  // namespace scsa
