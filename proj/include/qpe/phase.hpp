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
#include <string>
#include <string_view>
#include <vector>

namespace qpe {

/// Binary digits x_1..x_n of a phase, most significant (weight 1/2) first. Each entry is 0 or 1.
using Bits = std::vector<std::uint8_t>;

std::string bits_to_string(const Bits& bits);
/// Parses a '0'/'1' string; throws ConfigError naming `field` otherwise.
Bits parse_bits(std::string_view text, std::string_view field = "phase_bits");
/// sum_j x_j 2^-j.
double bits_to_turns(const Bits& bits);

/// Distance between two phases on the unit circle, in turns (result in [0, 0.5]).
double circular_distance(double a_turns, double b_turns);

/// Reduces any finite phase into [0, 1) turns.
double wrap_turns(double turns);

/// Eigenphase of the unitary, measured in turns (1 turn = 2 pi radians).
class PhasePoint {
   public:
    /// Throws ConfigError unless 0 <= turns < 1.
    static PhasePoint from_turns(double turns);
    static PhasePoint from_bits(Bits bits);
    static PhasePoint from_bits(std::string_view text) { return from_bits(parse_bits(text)); }

    double turns() const { return turns_; }
    const std::optional<Bits>& bits() const { return bits_; }

    /// turns * 2^n when that is an integer, i.e. the phase is n-bit representable.
    std::optional<std::uint64_t> exact_numerator(unsigned n) const;

    /// Fractional part of turns * 2^power; exact in binary floating point.
    double scaled_turns(unsigned power) const;

   private:
    PhasePoint(double turns, std::optional<Bits> bits) : turns_(turns), bits_(std::move(bits)) {}

    double turns_;
    std::optional<Bits> bits_;
};

/// Statistics of one Kitaev round k (circuits using controlled-U^(2^(k-1))).
struct KitaevRound {
    int k = 1;
    double c_k = 0.0;        // estimate of cos(2 pi phi_k)
    double s_k = 0.0;        // estimate of sin(2 pi phi_k)
    double phi_k_hat = 0.0;  // atan2(s_k, c_k) / 2 pi, wrapped to [0, 1)

    bool operator==(const KitaevRound&) const = default;
};

/// Throws EstimationError when c and s are both exactly zero.
KitaevRound make_kitaev_round(int k, double c_k, double s_k);

struct PhaseEstimate {
    double phi_hat_turns = 0.0;
    Bits bits;
    std::vector<KitaevRound> rounds;  // Kitaev only
    std::uint64_t shots_used = 0;
    /// Bit positions j (1-based, weight 2^-j) whose majority vote was an exact tie and defaulted to 0.
    std::vector<int> tied_bits;

    bool operator==(const PhaseEstimate&) const = default;
};

}  // namespace qpe
