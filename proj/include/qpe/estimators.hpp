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

#include "qpe/histogram.hpp"
#include "qpe/noise.hpp"
#include "qpe/phase.hpp"

namespace qpe {

/// How Kitaev per-round phases are turned into bits.
enum class BitDecoder {
    BackSubstitution,  // sharpen_bits
    Rounding,          // round phi_hat_1 to n bits
};

/// Kitaev back-substitution: from k = n down to 1, choose x_k so that 0.x_k x_{k+1}...x_n is
/// circularly closest to round k's estimate; ties go to 0. `rounds` must contain k = 1..n_bits.
Bits sharpen_bits(const std::vector<KitaevRound>& rounds, unsigned n_bits);

/// Nearest n-bit fraction to `turns` (wrapping 1 -> 0).
Bits round_to_bits(double turns, unsigned n_bits);

/// Runs both Hadamard tests (K = I and K = S) for k = 1..n_bits, shots_per_circuit shots each.
/// Throws EstimationError naming k when a round's statistics are degenerate.
PhaseEstimate kitaev_estimate(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_circuit,
                              const std::optional<NoiseModel>& noise, std::uint64_t seed,
                              BitDecoder decoder = BitDecoder::BackSubstitution);

struct IterativeResult {
    PhaseEstimate estimate;
    /// Shot s contributes the n-bit string of its own raw outcomes across all steps (x_1 first).
    ShotHistogram transcript;
};

/// Iterative QPE from the least significant bit upward with semiclassical feedback; each bit is
/// a majority vote over shots_per_bit shots.
IterativeResult iterative_run(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_bit,
                              const std::optional<NoiseModel>& noise, std::uint64_t seed);

PhaseEstimate iterative_estimate(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_bit,
                                 const std::optional<NoiseModel>& noise, std::uint64_t seed);

/// Feedback angle for step j given already-estimated bits (x_1..x_n, only x_{j+1}.. are read):
/// -2 pi sum_{l>j} x_l 2^-(l-j+1).
double iterative_feedback_angle(unsigned j, const Bits& bits);

/// Hoeffding sample count ceil(ln(2/delta) / (2 epsilon^2)) for an epsilon-accurate mean with
/// probability 1 - delta.
std::uint64_t required_samples(double epsilon, double delta);

}  // namespace qpe
