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

#include "qpe/builders.hpp"

#include <cmath>
#include <string>

#include "qpe/errors.hpp"

namespace qpe {

namespace {

void check_register(unsigned n, unsigned limit, const char* what) {
    if (n < 1 || n > limit) {
        throw ConfigError(std::string(what) + ": n_bits must be in [1, " + std::to_string(limit) + "]");
    }
}

/// -2 pi / 2^k, the conjugated R_k angle.
double inverse_rotation(unsigned k) { return -kTwoPi / std::ldexp(1.0, static_cast<int>(k)); }

/// Phase kicked onto register qubit j: 2 pi * frac(phi 2^j).
double kickback_angle(const PhasePoint& phi, unsigned j) { return kTwoPi * phi.scaled_turns(j); }

void append_register_preparation(Circuit& c, unsigned n, const PhasePoint& phi) {
    for (unsigned j = 0; j < n; ++j) {
        c.h(j);
        c.phase(kickback_angle(phi, j), j);
    }
}

void append_register_measurement(Circuit& c, unsigned n) {
    for (unsigned j = n; j-- > 0;) c.measure(j, n - 1 - j);
}

}  // namespace

Circuit build_hadamard_test(unsigned k, bool use_s_gate, const PhasePoint& phi) {
    if (k < 1 || k > kMaxHadamardRound) {
        throw ConfigError("k must be in [1, " + std::to_string(kMaxHadamardRound) + "]");
    }
    Circuit c(2, 1);
    c.x(1);
    c.h(0);
    if (use_s_gate) c.s(0);
    c.controlled_phase(kTwoPi * phi.scaled_turns(k - 1), 0, 1);
    c.h(0);
    c.measure(0, 0);
    return c;
}

Circuit build_inverse_qft(unsigned n) {
    check_register(n, kMaxQubits, "inverse QFT");
    Circuit c(n, 0);
    // Qubit n-1 holds 0.x_n (one H suffices); every further qubit first strips the bits
    // already resolved on the qubits above it.
    for (unsigned j = n; j-- > 0;) {
        for (unsigned m = n - 1; m > j; --m) c.controlled_phase(inverse_rotation(m - j + 1), m, j);
        c.h(j);
    }
    return c;
}

Circuit build_qft_qpe(unsigned n, const PhasePoint& phi) {
    check_register(n, kMaxLloydBits, "qft");
    const unsigned ancilla = n;
    Circuit c(n + 1, n);
    c.x(ancilla);
    for (unsigned j = 0; j < n; ++j) c.h(j);
    const double unit = kTwoPi * phi.turns();
    for (unsigned j = 0; j < n; ++j) {
        const std::uint64_t repeats = std::uint64_t{1} << j;
        for (std::uint64_t r = 0; r < repeats; ++r) c.controlled_phase(unit, j, ancilla);
    }
    c.extend(build_inverse_qft(n));
    append_register_measurement(c, n);
    return c;
}

Circuit build_modified_lloyd(unsigned n, const PhasePoint& phi) {
    check_register(n, kMaxQubits, "modified");
    Circuit c(n, n);
    append_register_preparation(c, n, phi);
    c.extend(build_inverse_qft(n));
    append_register_measurement(c, n);
    return c;
}

Circuit build_semiclassical_iqft_qpe(unsigned n, const PhasePoint& phi) {
    check_register(n, kMaxQubits, "semiclassical");
    Circuit c(n, n);
    append_register_preparation(c, n, phi);
    for (unsigned j = n; j-- > 0;) {
        // Qubit m > j was measured into classical bit n-1-m.
        for (unsigned m = n - 1; m > j; --m) c.conditional_phase(inverse_rotation(m - j + 1), j, n - 1 - m, 1);
        c.h(j);
        c.measure(j, n - 1 - j);
    }
    return c;
}

Circuit build_iterative_step(unsigned j, const PhasePoint& phi, double feedback_angle) {
    if (j < 1 || j > kMaxHadamardRound) {
        throw ConfigError("bit index must be in [1, " + std::to_string(kMaxHadamardRound) + "]");
    }
    Circuit c(2, 1);
    c.x(1);
    c.h(0);
    c.controlled_phase(kTwoPi * phi.scaled_turns(j - 1), 0, 1);
    c.phase(feedback_angle, 0);
    c.h(0);
    c.measure(0, 0);
    return c;
}

}  // namespace qpe
