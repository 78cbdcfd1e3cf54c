#include "scsa/decomposition.hpp"

namespace scsa {

PulseSplit split(const SchrodingerSpectrum& spec, int n_fast) {
    if (n_fast < 0 || n_fast > spec.count())
        throw OutOfRangeError("split: n_fast must be in [0, count]");
    const int m = spec.grid.m;
    PulseSplit out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), n_fast};
    // kappas are descending, so the first n_fast columns are the fast ones
    for (int n = 0; n < spec.count(); ++n) {
        auto& dst = n < n_fast ? out.fast : out.slow;
        const double w = 4.0 / spec.chi * spec.kappas[n];
        for (int j = 0; j < m; ++j) {
            double p = spec.eigfuncs(j, n);
            dst[j] += w * p * p;
        }
    }
    return out;
}

}  // namespace scsa
