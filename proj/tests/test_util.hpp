// Copyright 2026 The qpe-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpe/statevector.hpp"

namespace qpe::testing {

/// Haar-ish random normalized state: independent Gaussian real/imag parts.
inline StateVector random_state(unsigned n, std::mt19937_64& gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {g(gen), g(gen)};
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return StateVector::from_amplitudes(std::move(amps));
}

/// Binomial 1-sigma of a frequency estimate.
inline double binomial_sigma(double p, double trials) { return std::sqrt(p * (1.0 - p) / trials); }

}  // namespace qpe::testing
