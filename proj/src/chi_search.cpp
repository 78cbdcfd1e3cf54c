#include "scsa/chi_search.hpp"

#include <algorithm>
#include <cmath>

namespace scsa {

namespace {

int count_at(const Signal& s, double chi) { return negative_spectrum(s, chi).count(); }

double mse_at(const Signal& s, double chi) {
    auto spec = negative_spectrum(s, chi);
    return mse(s, reconstruct(spec));
}

}  // namespace

std::vector<SweepPoint> sweep(const Signal& s, const std::vector<double>& chis) {
    std::vector<SweepPoint> points;
    points.reserve(chis.size());
    int max_seen = 0;
    for (double chi : chis) {
        if (!(chi > 0)) throw InvalidParameterError("sweep: chi values must be positive");
        auto spec = negative_spectrum(s, chi);
        SweepPoint p{chi, spec.count(), mse(s, reconstruct(spec))};
        p.monotonicity_anomaly = p.count < max_seen;
        max_seen = std::max(max_seen, p.count);
        points.push_back(p);
    }
    return points;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> chis(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        chis[i] = std::exp(llo + (lhi - llo) * i / static_cast<double>(n - 1));
    return chis;
}

double weyl_chi_for_target(const Signal& s, int n_target) {
    if (n_target < 1) throw InvalidParameterError("weyl_chi_for_target: N must be positive");
    std::vector<double> root(s.samples.size());
    for (size_t j = 0; j < root.size(); ++j) root[j] = std::sqrt(s.samples[j]);
    const double integral = trapezoid(root, s.grid.dx);
    if (!(integral > 0)) throw ZeroSignalError("weyl_chi_for_target: signal is identically zero");
    const double r = std::numbers::pi * n_target / integral;
    return r * r;
}

Plateau find_plateau(const Signal& s, int n_target, std::pair<double, double> bracket) {
    const auto [blo, bhi] = bracket;
    if (!(blo > 0) || !(blo < bhi))
        throw InvalidParameterError("find_plateau: bad bracket");

    // Coarse scan to land inside the plateau.
    constexpr int kScan = 25;
    auto chis = log_spaced(blo, bhi, kScan);
    double inside = -1.0;
    std::vector<int> counts(kScan);
    for (int i = 0; i < kScan; ++i) {
        counts[i] = count_at(s, chis[i]);
        if (counts[i] == n_target && inside < 0) inside = chis[i];
    }
    if (inside < 0)
        throw TargetCountUnreachableError("find_plateau: count " + std::to_string(n_target) +
                                          " not attained inside bracket");

    auto bisect = [&](double lo, double hi, bool want_target_at_hi) {
        // Invariant: exactly one endpoint attains the target count.
        while (hi - lo > 1e-3 * lo) {
            double mid = 0.5 * (lo + hi);
            bool mid_is_target = count_at(s, mid) == n_target;
            if (mid_is_target == want_target_at_hi)
                hi = mid;
            else
                lo = mid;
        }
        return want_target_at_hi ? hi : lo;
    };

    double chi_lo = blo, chi_hi = bhi;
    if (counts.front() != n_target) {
        // Nearest scan point below `inside` without the target count.
        double below = blo;
        for (int i = 0; i < kScan && chis[i] < inside; ++i)
            if (counts[i] != n_target) below = chis[i];
        chi_lo = bisect(below, inside, true);
    }
    if (counts.back() != n_target) {
        double above = bhi;
        for (int i = kScan - 1; i >= 0 && chis[i] > inside; --i)
            if (counts[i] != n_target) above = chis[i];
        chi_hi = bisect(inside, above, false);
    }
    return Plateau{n_target, chi_lo, chi_hi};
}

std::pair<double, double> optimize_chi(const Signal& s, const Plateau& plateau, int budget) {
    budget = std::max(budget, 8);
    const double lo = plateau.chi_lo, hi = plateau.chi_hi;
    if (hi - lo <= 1e-6 * std::max(lo, 1.0)) return {lo, mse_at(s, lo)};

    std::vector<double> grid(budget), errs(budget);
    int best = 0;
    for (int i = 0; i < budget; ++i) {
        grid[i] = lo + (hi - lo) * i / static_cast<double>(budget - 1);
        errs[i] = mse_at(s, grid[i]);
        if (errs[i] < errs[best]) best = i;
    }

    // Golden-section around the best coarse sample.
    double a = grid[std::max(best - 1, 0)];
    double b = grid[std::min(best + 1, budget - 1)];
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = mse_at(s, c), fd = mse_at(s, d);
    while (b - a > 1e-4 * std::max(a, 1.0)) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = mse_at(s, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = mse_at(s, d);
        }
    }
    double chi_ref = fc < fd ? c : d;
    double err_ref = std::min(fc, fd);
    if (err_ref < errs[best]) return {chi_ref, err_ref};
    return {grid[best], errs[best]};
}

}  // namespace scsa
