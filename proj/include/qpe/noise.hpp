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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpe/random.hpp"
#include "qpe/statevector.hpp"

namespace qpe {

/// Symmetric depolarizing error after gates plus independent readout bit flips.
struct NoiseModel {
    double p1 = 0.0;         // after each one-qubit gate
    double p2 = 0.0;         // after each two-qubit gate
    double p_readout = 0.0;  // per measured bit

    /// Representative NISQ-era magnitudes used when noise is requested without explicit rates.
    static NoiseModel defaults() { return {0.002, 0.02, 0.03}; }

    bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }

    /// Throws ConfigError naming the offending field unless every rate lies in [0, 1].
    void validate() const;

    bool operator==(const NoiseModel&) const = default;
};

/// With probability p1 (arity 1) or p2 (arity 2), applies a uniformly chosen non-identity
/// Pauli (3 choices, or 15 two-qubit products) to `targets`. No randomness is consumed when
/// the relevant rate is zero.
void apply_gate_noise(StateVector& state, std::span<const QubitIndex> targets, const NoiseModel& model,
                      RandomSource& rng);

/// Flips `bit` with probability p_readout.
int apply_readout_noise(int bit, const NoiseModel& model, RandomSource& rng);

/// Flips every bit of a '0'/'1' string independently with probability p_readout.
std::string apply_readout_noise(const std::string& bits, const NoiseModel& model, RandomSource& rng);

}  // namespace qpe
