#pragma once

#include <string>
#include <vector>

#include "scsa/errors.hpp"

namespace scsa {

/// Closed-interval equidistant grid: x_j = a + j*dx, j = 0..m-1, with
/// x_0 = a and x_{m-1} = b.
struct Grid {
    double a;
    double b;
    int m;
    double dx;

    double x(int j) const { return a + j * dx; }
    std::vector<double> points() const;
};

Grid make_grid(double a, double b, int m);

/// Sampled signal on an equidistant grid.
struct Signal {
    Grid grid;
    std::vector<double> samples;

    int size() const { return static_cast<int>(samples.size()); }
    double max() const;
    double min() const;
};

/// Nonnegative signal together with the offset that was subtracted to
/// make it so; original = signal.samples + offset.
struct ShiftedSignal {
    Signal signal;
    double offset;
};

// Closed-form test signals.
Signal generate_sech2(const Grid& grid, double x0);
Signal generate_gaussian(const Grid& grid, double mu, double sigma);
Signal generate_sine(const Grid& grid, double amplitude, double omega, double phase);
// Sinusoid with frequency ramping linearly from f0 to f1 across [a, b].
Signal generate_chirp(const Grid& grid, double amplitude, double f0, double f1);

ShiftedSignal shift_nonnegative(const Signal& s);

// CSV I/O: rows "x,value", optional single header line, x strictly
// increasing and equidistant to 1e-9 relative tolerance.
Signal load_csv(const std::string& path);
void save_csv(const Signal& s, const std::string& path);

/// Composite trapezoid integral of the samples over the grid.
double trapezoid(const std::vector<double>& values, double dx);

}  // namespace scsa
