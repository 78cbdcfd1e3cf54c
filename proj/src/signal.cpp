#include "scsa/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace scsa {

std::vector<double> Grid::points() const {
    std::vector<double> xs(m);
    for (int j = 0; j < m; ++j) xs[j] = x(j);
    return xs;
}

Grid make_grid(double a, double b, int m) {
    if (!(a < b)) throw InvalidDomainError("make_grid: require a < b");
    if (m < 4) throw InvalidDomainError("make_grid: require M >= 4");
    return Grid{a, b, m, (b - a) / (m - 1)};
}

double Signal::max() const { return *std::max_element(samples.begin(), samples.end()); }
double Signal::min() const { return *std::min_element(samples.begin(), samples.end()); }

namespace {

template <class F>
Signal sample(const Grid& grid, F f) {
    Signal s{grid, std::vector<double>(grid.m)};
    for (int j = 0; j < grid.m; ++j) s.samples[j] = f(grid.x(j));
    return s;
}

}  // namespace

Signal generate_sech2(const Grid& grid, double x0) {
    return sample(grid, [x0](double x) {
        double c = std::cosh(x - x0);
        return 1.0 / (c * c);
    });
}

Signal generate_gaussian(const Grid& grid, double mu, double sigma) {
    if (!(sigma > 0)) throw InvalidParameterError("generate_gaussian: sigma must be positive");
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
    return sample(grid, [=](double x) {
        double t = (x - mu) / sigma;
        return norm * std::exp(-0.5 * t * t);
    });
}

Signal generate_sine(const Grid& grid, double amplitude, double omega, double phase) {
    return sample(grid, [=](double x) { return amplitude * std::sin(omega * x + phase); });
}

Signal generate_chirp(const Grid& grid, double amplitude, double f0, double f1) {
    if (!(f0 > 0) || !(f1 > 0))
        throw InvalidParameterError("generate_chirp: frequencies must be positive");
    const double span = grid.b - grid.a;
    return sample(grid, [=](double x) {
        double t = x - grid.a;
        // instantaneous frequency f0 + (f1-f0)*t/span, integrated phase
        double phase = 2.0 * std::numbers::pi * (f0 * t + 0.5 * (f1 - f0) * t * t / span);
        return amplitude * std::sin(phase);
    });
}

ShiftedSignal shift_nonnegative(const Signal& s) {
    double lo = s.min();
    double offset = lo < 0 ? lo : 0.0;
    Signal out = s;
    if (offset < 0)
        for (double& v : out.samples) v -= offset;
    return ShiftedSignal{std::move(out), offset};
}

Signal load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_csv: cannot open " + path);
    std::vector<double> xs, ys;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::istringstream row(line);
        std::string xf, yf;
        if (!std::getline(row, xf, ',') || !std::getline(row, yf)) {
            throw ParseError("load_csv: malformed row at line " + std::to_string(lineno));
        }
        char* end = nullptr;
        double x = std::strtod(xf.c_str(), &end);
        bool xok = end != xf.c_str();
        double y = std::strtod(yf.c_str(), &end);
        bool yok = end != yf.c_str();
        if (!xok || !yok) {
            if (lineno == 1 && xs.empty()) continue;  // header line
            throw ParseError("load_csv: non-numeric row at line " + std::to_string(lineno));
        }
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("load_csv: non-finite value at line " + std::to_string(lineno));
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.size() < 4) throw ParseError("load_csv: need at least 4 samples");
    const int m = static_cast<int>(xs.size());
    const double dx = (xs.back() - xs.front()) / (m - 1);
    if (!(dx > 0)) throw NonEquidistantGridError("load_csv: x column not increasing");
    const double scale = std::max(std::abs(xs.front()), std::abs(xs.back())) + std::abs(dx);
    for (int j = 1; j < m; ++j) {
        double step = xs[j] - xs[j - 1];
        if (std::abs(step - dx) > 1e-9 * scale)
            throw NonEquidistantGridError("load_csv: x column not equidistant near row " +
                                          std::to_string(j + 1));
    }
    return Signal{make_grid(xs.front(), xs.back(), m), std::move(ys)};
}

void save_csv(const Signal& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("save_csv: cannot open " + path);
    out << "x,value\n";
    char buf[64];
    for (int j = 0; j < s.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.grid.x(j), s.samples[j]);
        out << buf;
    }
}

double trapezoid(const std::vector<double>& values, double dx) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (size_t j = 1; j + 1 < values.size(); ++j) sum += values[j];
    return sum * dx;
}

}  // namespace scsa
