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
#include <optional>
#include <vector>

#include "qpe/circuit.hpp"
#include "qpe/histogram.hpp"
#include "qpe/noise.hpp"
#include "qpe/random.hpp"
#include "qpe/statevector.hpp"

namespace qpe {

/// State after running a measurement-free circuit from |0...0>. Throws ConfigError
/// if the circuit measures or conditions on classical bits.
StateVector final_state(const Circuit& circuit);

/// True when no gate touches a qubit after it has been measured and nothing is classically
/// conditioned, i.e. every measurement can be deferred to the end.
bool has_only_terminal_measurements(const Circuit& circuit);

/// Exact distribution of the classical register (index = register value, bit c = clbit c),
/// computed from the final statevector. Requires has_only_terminal_measurements().
std::vector<double> terminal_distribution(const Circuit& circuit);

/// Exact noiseless distribution of the classical register by enumerating every measurement
/// branch. Works for mid-circuit measurement and classical conditioning.
std::vector<double> outcome_distribution(const Circuit& circuit);

/// One trajectory: gates, stochastic Pauli errors after each gate, projective measurements and
/// readout flips. Returns the final classical register.
std::uint64_t run_shot(const Circuit& circuit, const NoiseModel& noise, RandomSource& rng);

/// Classical-register outcomes in shot order. Noiseless circuits whose measurements are all
/// terminal are sampled from the final distribution with a single stream seeded by `seed`;
/// otherwise each shot is re-executed on its own stream stream_seed(seed, shot).
std::vector<std::uint64_t> sample_outcomes(const Circuit& circuit, std::uint64_t shots,
                                           const std::optional<NoiseModel>& noise, std::uint64_t seed);

ShotHistogram sample_histogram(const Circuit& circuit, std::uint64_t shots, const std::optional<NoiseModel>& noise,
                               std::uint64_t seed);

}  // namespace qpe
