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
#include <vector>

#include "qpe/statevector.hpp"

namespace qpe {

enum class GateKind {
    H,
    X,
    S,
    Phase,             // diag(1, e^{i theta})
    ControlledPhase,   // targets = {control, target}
    Measure,           // targets = {qubit}, clbit = destination
    ConditionalPhase,  // Phase applied iff clbit == required_value
};

std::string to_string(GateKind kind);

/// One circuit step. Angles are radians.
struct Instruction {
    GateKind kind = GateKind::H;
    std::vector<QubitIndex> qubits;
    double theta = 0.0;
    std::optional<unsigned> clbit;
    int required_value = 1;

    static Instruction h(QubitIndex q) { return {GateKind::H, {q}, 0.0, std::nullopt}; }
    static Instruction x(QubitIndex q) { return {GateKind::X, {q}, 0.0, std::nullopt}; }
    static Instruction s(QubitIndex q) { return {GateKind::S, {q}, 0.0, std::nullopt}; }
    static Instruction phase(double theta, QubitIndex q) { return {GateKind::Phase, {q}, theta, std::nullopt}; }
    static Instruction controlled_phase(double theta, QubitIndex control, QubitIndex target) {
        return {GateKind::ControlledPhase, {control, target}, theta, std::nullopt};
    }
    static Instruction measure(QubitIndex q, unsigned c) { return {GateKind::Measure, {q}, 0.0, c}; }
    static Instruction conditional_phase(double theta, QubitIndex q, unsigned c, int value = 1) {
        return {GateKind::ConditionalPhase, {q}, theta, c, value};
    }

    /// Number of quantum targets the kind requires.
    std::size_t arity() const { return kind == GateKind::ControlledPhase ? 2 : 1; }

    bool operator==(const Instruction&) const = default;
};

struct GateCounts {
    std::uint64_t one_qubit = 0;
    std::uint64_t two_qubit = 0;
    std::uint64_t measurements = 0;
    std::uint64_t conditioned = 0;

    std::uint64_t total() const { return one_qubit + two_qubit + measurements + conditioned; }
    bool operator==(const GateCounts&) const = default;
};

/// Ordered instruction list over `num_qubits` qubits and `num_clbits` classical bits.
/// append() validates every instruction, so a Circuit is always well formed.
class Circuit {
   public:
    Circuit(unsigned num_qubits, unsigned num_clbits);

    unsigned num_qubits() const { return num_qubits_; }
    unsigned num_clbits() const { return num_clbits_; }
    const std::vector<Instruction>& instructions() const { return instructions_; }
    std::size_t size() const { return instructions_.size(); }
    bool empty() const { return instructions_.empty(); }

    /// Throws ConstructionError on wrong arity, out-of-range index, repeated qubit or non-finite angle.
    Circuit& append(Instruction instruction);

    Circuit& h(QubitIndex q) { return append(Instruction::h(q)); }
    Circuit& x(QubitIndex q) { return append(Instruction::x(q)); }
    Circuit& s(QubitIndex q) { return append(Instruction::s(q)); }
    Circuit& phase(double theta, QubitIndex q) { return append(Instruction::phase(theta, q)); }
    Circuit& controlled_phase(double theta, QubitIndex control, QubitIndex target) {
        return append(Instruction::controlled_phase(theta, control, target));
    }
    Circuit& measure(QubitIndex q, unsigned c) { return append(Instruction::measure(q, c)); }
    Circuit& conditional_phase(double theta, QubitIndex q, unsigned c, int value = 1) {
        return append(Instruction::conditional_phase(theta, q, c, value));
    }

    /// Appends every instruction of `other`; register sizes must be large enough.
    Circuit& extend(const Circuit& other);

    bool operator==(const Circuit&) const = default;

   private:
    unsigned num_qubits_;
    unsigned num_clbits_;
    std::vector<Instruction> instructions_;
};

/// Value-returning append.
Circuit append(Circuit circuit, Instruction instruction);

GateCounts gate_counts(const Circuit& circuit);

/// Longest chain of instructions that share a qubit or a classical bit.
std::size_t depth(const Circuit& circuit);

/// OpenQASM 2.0 text. Circuits without classically conditioned gates use one `c` register;
/// circuits with them get one single-bit register per classical bit (`c0`, `c1`, ...) so that
/// `if(cK==v)` tests exactly one bit.
std::string to_qasm(const Circuit& circuit);

}  // namespace qpe
