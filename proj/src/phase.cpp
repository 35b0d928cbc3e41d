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

#include "qpe/phase.hpp"

#include <algorithm>
#include <cmath>

#include "qpe/errors.hpp"
#include "qpe/gates.hpp"

namespace qpe {

std::string bits_to_string(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

Bits parse_bits(std::string_view text, std::string_view field) {
    if (text.empty()) throw ConfigError(std::string(field) + ": empty bitstring");
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ConfigError(std::string(field) + ": expected only '0'/'1', got '" + std::string(text) + "'");
        }
        out.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

double bits_to_turns(const Bits& bits) {
    double acc = 0.0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j]) acc += std::ldexp(1.0, -static_cast<int>(j + 1));
    }
    return acc;
}

double wrap_turns(double turns) {
    double w = turns - std::floor(turns);
    return w >= 1.0 ? 0.0 : w;
}

double circular_distance(double a_turns, double b_turns) {
    const double d = wrap_turns(a_turns - b_turns);
    return std::min(d, 1.0 - d);
}

PhasePoint PhasePoint::from_turns(double turns) {
    if (!std::isfinite(turns) || turns < 0.0 || turns >= 1.0) {
        throw ConfigError("phase_turns: must lie in [0, 1)");
    }
    return PhasePoint(turns, std::nullopt);
}

PhasePoint PhasePoint::from_bits(Bits bits) {
    if (bits.empty()) throw ConfigError("phase_bits: empty bitstring");
    if (bits.size() > 52) throw ConfigError("phase_bits: at most 52 bits are representable");
    for (auto b : bits) {
        if (b > 1) throw ConfigError("phase_bits: digits must be 0 or 1");
    }
    const double turns = bits_to_turns(bits);
    return PhasePoint(turns, std::move(bits));
}

std::optional<std::uint64_t> PhasePoint::exact_numerator(unsigned n) const {
    if (n > 52) return std::nullopt;
    const double scaled = std::ldexp(turns_, static_cast<int>(n));
    if (scaled != std::floor(scaled)) return std::nullopt;
    return static_cast<std::uint64_t>(scaled);
}

double PhasePoint::scaled_turns(unsigned power) const {
    return wrap_turns(std::ldexp(turns_, static_cast<int>(power)));
}

KitaevRound make_kitaev_round(int k, double c_k, double s_k) {
    if (c_k == 0.0 && s_k == 0.0) {
        throw EstimationError("degenerate statistics at round k=" + std::to_string(k) + ": C_k = S_k = 0", k);
    }
    return KitaevRound{k, c_k, s_k, wrap_turns(std::atan2(s_k, c_k) / kTwoPi)};
}

}  // namespace qpe
