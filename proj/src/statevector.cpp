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

#include "qpe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qpe/errors.hpp"

namespace qpe {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kCollapseFloor = 1e-14;

void check_qubit_count(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n));
    }
}

}  // namespace

StateVector StateVector::zero(unsigned num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
    check_qubit_count(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) throw IndexError("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ConfigError("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(dim));
    check_qubit_count(n);
    StateVector sv(n, std::move(amplitudes));
    if (std::abs(sv.norm_squared() - 1.0) > kNormTol) throw NumericalError("amplitudes are not normalized");
    return sv;
}

void StateVector::check_qubit(QubitIndex q) const {
    if (q >= num_qubits_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                         "-qubit register");
    }
}

void StateVector::apply(const GateMatrix2& gate, QubitIndex target) {
    check_qubit(target);
    const std::uint64_t stride = std::uint64_t{1} << target;
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    if (gate.is_diagonal()) {
        for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
            amplitudes_[i] *= (i & stride) ? g11 : g00;
        }
        return;
    }
    // Walk the pairs (i0, i1 = i0 | stride) with the target bit of i0 clear.
    for (std::uint64_t block = 0; block < amplitudes_.size(); block += 2 * stride) {
        for (std::uint64_t i0 = block; i0 < block + stride; ++i0) {
            const std::uint64_t i1 = i0 | stride;
            const Complex a0 = amplitudes_[i0];
            const Complex a1 = amplitudes_[i1];
            amplitudes_[i0] = g00 * a0 + g01 * a1;
            amplitudes_[i1] = g10 * a0 + g11 * a1;
        }
    }
}

void StateVector::apply_controlled_phase(double theta, QubitIndex control, QubitIndex target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw IndexError("controlled phase needs distinct control and target");
    const std::uint64_t mask = (std::uint64_t{1} << control) | (std::uint64_t{1} << target);
    const Complex factor = std::polar(1.0, theta);
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == mask) amplitudes_[i] *= factor;
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(), [](Complex a) { return std::norm(a); });
    return p;
}

double StateVector::probability_of_one(QubitIndex target) const {
    check_qubit(target);
    const std::uint64_t bit = std::uint64_t{1} << target;
    double p1 = 0.0;
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & bit) p1 += std::norm(amplitudes_[i]);
    }
    return p1;
}

double StateVector::project(QubitIndex target, int outcome) {
    check_qubit(target);
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t keep = outcome ? bit : 0;
    double p = 0.0;
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & bit) == keep) p += std::norm(amplitudes_[i]);
    }
    if (p < kCollapseFloor) throw NumericalError("projection onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        amplitudes_[i] = (i & bit) == keep ? amplitudes_[i] * scale : Complex{};
    }
    return p;
}

int StateVector::measure(QubitIndex target, RandomSource& rng) {
    const double p1 = probability_of_one(target);
    const double p0 = norm_squared() - p1;
    if (p0 < kCollapseFloor && p1 < kCollapseFloor) throw NumericalError("state has vanishing norm");
    // Skip the draw for certain outcomes so deterministic measurements do not consume randomness.
    int outcome;
    if (p1 < kCollapseFloor) {
        outcome = 0;
    } else if (p0 < kCollapseFloor) {
        outcome = 1;
    } else {
        outcome = rng.uniform() < p1 / (p0 + p1) ? 1 : 0;
    }
    project(target, outcome);
    return outcome;
}

std::vector<std::uint64_t> StateVector::sample_indices(std::uint64_t shots, RandomSource& rng) const {
    std::vector<double> cumulative(amplitudes_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += std::norm(amplitudes_[i]);
        cumulative[i] = acc;
    }
    // Last index with non-zero weight; guards against u * total landing past round-off.
    std::size_t last = amplitudes_.size() - 1;
    while (last > 0 && std::norm(amplitudes_[last]) == 0.0) --last;

    std::vector<std::uint64_t> out;
    out.reserve(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto idx = static_cast<std::size_t>(it - cumulative.begin());
        out.push_back(std::min(idx, last));
    }
    return out;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const Complex& a : amplitudes_) acc += std::norm(a);
    return acc;
}

StateVector new_zero_state(unsigned num_qubits) { return StateVector::zero(num_qubits); }

StateVector apply_single(StateVector state, const GateMatrix2& gate, QubitIndex target) {
    state.apply(gate, target);
    return state;
}

StateVector apply_controlled_phase(StateVector state, double theta, QubitIndex control, QubitIndex target) {
    state.apply_controlled_phase(theta, control, target);
    return state;
}

std::vector<double> probabilities(const StateVector& state) { return state.probabilities(); }

std::pair<int, StateVector> measure_qubit(StateVector state, QubitIndex target, RandomSource& rng) {
    const int bit = state.measure(target, rng);
    return {bit, std::move(state)};
}

ShotHistogram sample_all(const StateVector& state, std::uint64_t shots, RandomSource& rng) {
    if (shots == 0) throw ConfigError("shots must be at least 1");
    return histogram_from_outcomes(state.sample_indices(shots, rng), state.num_qubits());
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) throw ConfigError("state dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return worst;
}

}  // namespace qpe
