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

#include "qpe/noise.hpp"

#include <array>
#include <cmath>

#include "qpe/errors.hpp"

namespace qpe {

namespace {

void check_rate(double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError(std::string("noise.") + field + " must be a probability in [0, 1]");
    }
}

// Pauli codes: 0 = I, 1 = X, 2 = Y, 3 = Z.
void apply_pauli(StateVector& state, unsigned code, QubitIndex q) {
    switch (code) {
        case 1:
            state.apply(gates::pauli_x(), q);
            break;
        case 2:
            state.apply(gates::pauli_y(), q);
            break;
        case 3:
            state.apply(gates::pauli_z(), q);
            break;
        default:
            break;
    }
}

}  // namespace

void NoiseModel::validate() const {
    check_rate(p1, "p1");
    check_rate(p2, "p2");
    check_rate(p_readout, "p_readout");
}

void apply_gate_noise(StateVector& state, std::span<const QubitIndex> targets, const NoiseModel& model,
                      RandomSource& rng) {
    if (targets.size() != 1 && targets.size() != 2) throw IndexError("gate noise supports arity 1 or 2");
    const double p = targets.size() == 1 ? model.p1 : model.p2;
    if (p <= 0.0 || !rng.bernoulli(p)) return;
    if (targets.size() == 1) {
        apply_pauli(state, static_cast<unsigned>(1 + rng.below(3)), targets[0]);
        return;
    }
    // 1..15 enumerates the non-identity products; low two bits act on the first target.
    const auto code = static_cast<unsigned>(1 + rng.below(15));
    apply_pauli(state, code & 3U, targets[0]);
    apply_pauli(state, code >> 2, targets[1]);
}

int apply_readout_noise(int bit, const NoiseModel& model, RandomSource& rng) {
    if (model.p_readout <= 0.0) return bit;
    return rng.bernoulli(model.p_readout) ? 1 - bit : bit;
}

std::string apply_readout_noise(const std::string& bits, const NoiseModel& model, RandomSource& rng) {
    std::string out = bits;
    for (char& c : out) {
        const int b = c == '1' ? 1 : 0;
        c = apply_readout_noise(b, model, rng) ? '1' : '0';
    }
    return out;
}

}  // namespace qpe
