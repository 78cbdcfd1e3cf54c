#pragma once

#include <vector>

#include "scsa/core.hpp"

namespace scsa {

/// Fast/slow partial sums of a reconstruction; fast + slow equals the
/// full reconstruction pointwise.
struct PulseSplit {
    std::vector<double> fast;  // n_fast largest-kappa components
    std::vector<double> slow;  // remaining components
    int n_fast;
};

PulseSplit split(const SchrodingerSpectrum& spec, int n_fast);

}  // namespace scsa
