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

#include "qpe/executor.hpp"

#include <array>

#include "qpe/errors.hpp"

namespace qpe {

namespace {

constexpr double kBranchFloor = 1e-14;

void apply_unitary(StateVector& state, const Instruction& ins) {
    switch (ins.kind) {
        case GateKind::H:
            state.apply(gates::hadamard(), ins.qubits[0]);
            break;
        case GateKind::X:
            state.apply(gates::pauli_x(), ins.qubits[0]);
            break;
        case GateKind::S:
            state.apply(gates::s(), ins.qubits[0]);
            break;
        case GateKind::Phase:
        case GateKind::ConditionalPhase:
            state.apply(gates::phase(ins.theta), ins.qubits[0]);
            break;
        case GateKind::ControlledPhase:
            state.apply_controlled_phase(ins.theta, ins.qubits[0], ins.qubits[1]);
            break;
        case GateKind::Measure:
            break;
    }
}

std::uint64_t set_bit(std::uint64_t reg, unsigned bit, int value) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    return value ? (reg | mask) : (reg & ~mask);
}

bool condition_holds(const Instruction& ins, std::uint64_t reg) {
    return static_cast<int>((reg >> *ins.clbit) & 1U) == ins.required_value;
}

void enumerate_branches(const Circuit& circuit, std::size_t pos, StateVector state, std::uint64_t reg,
                        double weight, std::vector<double>& dist) {
    const auto& ins = circuit.instructions();
    for (; pos < ins.size(); ++pos) {
        const Instruction& step = ins[pos];
        if (step.kind == GateKind::ConditionalPhase) {
            if (condition_holds(step, reg)) apply_unitary(state, step);
        } else if (step.kind == GateKind::Measure) {
            const double p1 = state.probability_of_one(step.qubits[0]);
            const double p0 = 1.0 - p1;
            if (p1 > kBranchFloor) {
                StateVector branch = state;
                branch.project(step.qubits[0], 1);
                enumerate_branches(circuit, pos + 1, std::move(branch), set_bit(reg, *step.clbit, 1), weight * p1,
                                   dist);
            }
            if (p0 <= kBranchFloor) return;
            state.project(step.qubits[0], 0);
            reg = set_bit(reg, *step.clbit, 0);
            weight *= p0;
        } else {
            apply_unitary(state, step);
        }
    }
    dist[reg] += weight;
}

/// Statevector of all non-measurement instructions plus the (qubit, clbit) measurement map.
StateVector deferred_state(const Circuit& circuit, std::vector<std::pair<QubitIndex, unsigned>>& measures) {
    StateVector state = StateVector::zero(circuit.num_qubits());
    for (const Instruction& ins : circuit.instructions()) {
        if (ins.kind == GateKind::Measure) {
            measures.emplace_back(ins.qubits[0], *ins.clbit);
        } else {
            apply_unitary(state, ins);
        }
    }
    return state;
}

std::uint64_t register_from_basis(std::uint64_t index, const std::vector<std::pair<QubitIndex, unsigned>>& measures) {
    std::uint64_t reg = 0;
    for (const auto& [q, c] : measures) reg = set_bit(reg, c, static_cast<int>((index >> q) & 1U));
    return reg;
}

}  // namespace

StateVector final_state(const Circuit& circuit) {
    StateVector state = StateVector::zero(circuit.num_qubits());
    for (const Instruction& ins : circuit.instructions()) {
        if (ins.kind == GateKind::Measure || ins.kind == GateKind::ConditionalPhase) {
            throw ConfigError("final_state requires a circuit without measurements");
        }
        apply_unitary(state, ins);
    }
    return state;
}

bool has_only_terminal_measurements(const Circuit& circuit) {
    std::vector<bool> measured(circuit.num_qubits(), false);
    for (const Instruction& ins : circuit.instructions()) {
        if (ins.kind == GateKind::ConditionalPhase) return false;
        if (ins.kind == GateKind::Measure) {
            measured[ins.qubits[0]] = true;
            continue;
        }
        for (QubitIndex q : ins.qubits) {
            if (measured[q]) return false;
        }
    }
    return true;
}

std::vector<double> terminal_distribution(const Circuit& circuit) {
    if (!has_only_terminal_measurements(circuit)) {
        throw ConfigError("terminal_distribution requires measurements at the end of the circuit");
    }
    std::vector<std::pair<QubitIndex, unsigned>> measures;
    const StateVector state = deferred_state(circuit, measures);
    std::vector<double> dist(std::size_t{1} << circuit.num_clbits(), 0.0);
    const std::vector<double> probs = state.probabilities();
    for (std::uint64_t i = 0; i < probs.size(); ++i) dist[register_from_basis(i, measures)] += probs[i];
    return dist;
}

std::vector<double> outcome_distribution(const Circuit& circuit) {
    if (circuit.num_clbits() > kMaxQubits) throw ConfigError("too many classical bits to enumerate");
    std::vector<double> dist(std::size_t{1} << circuit.num_clbits(), 0.0);
    enumerate_branches(circuit, 0, StateVector::zero(circuit.num_qubits()), 0, 1.0, dist);
    return dist;
}

std::uint64_t run_shot(const Circuit& circuit, const NoiseModel& noise, RandomSource& rng) {
    StateVector state = StateVector::zero(circuit.num_qubits());
    std::uint64_t reg = 0;
    for (const Instruction& ins : circuit.instructions()) {
        if (ins.kind == GateKind::Measure) {
            const int bit = state.measure(ins.qubits[0], rng);
            reg = set_bit(reg, *ins.clbit, apply_readout_noise(bit, noise, rng));
            continue;
        }
        if (ins.kind == GateKind::ConditionalPhase && !condition_holds(ins, reg)) continue;
        apply_unitary(state, ins);
        apply_gate_noise(state, ins.qubits, noise, rng);
    }
    return reg;
}

std::vector<std::uint64_t> sample_outcomes(const Circuit& circuit, std::uint64_t shots,
                                           const std::optional<NoiseModel>& noise, std::uint64_t seed) {
    if (shots == 0) throw ConfigError("shots must be at least 1");
    const bool noiseless = !noise || noise->is_noiseless();
    if (noise) noise->validate();

    if (noiseless && has_only_terminal_measurements(circuit)) {
        std::vector<std::pair<QubitIndex, unsigned>> measures;
        const StateVector state = deferred_state(circuit, measures);
        RandomSource rng(seed);
        std::vector<std::uint64_t> out = state.sample_indices(shots, rng);
        for (std::uint64_t& v : out) v = register_from_basis(v, measures);
        return out;
    }

    const NoiseModel model = noise.value_or(NoiseModel{});
    std::vector<std::uint64_t> out;
    out.reserve(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        RandomSource rng(stream_seed(seed, s));
        out.push_back(run_shot(circuit, model, rng));
    }
    return out;
}

ShotHistogram sample_histogram(const Circuit& circuit, std::uint64_t shots, const std::optional<NoiseModel>& noise,
                               std::uint64_t seed) {
    return histogram_from_outcomes(sample_outcomes(circuit, shots, noise, seed), circuit.num_clbits());
}

}  // namespace qpe
