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

#include "qpe/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qpe/errors.hpp"

namespace qpe {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::S:
            return "S";
        case GateKind::Phase:
            return "Phase";
        case GateKind::ControlledPhase:
            return "ControlledPhase";
        case GateKind::Measure:
            return "Measure";
        case GateKind::ConditionalPhase:
            return "ConditionalPhase";
    }
    return "?";
}

Circuit::Circuit(unsigned num_qubits, unsigned num_clbits) : num_qubits_(num_qubits), num_clbits_(num_clbits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigError("circuit qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (num_clbits > 64) throw ConfigError("at most 64 classical bits are supported");
}

Circuit& Circuit::append(Instruction ins) {
    const std::string name = to_string(ins.kind);
    if (ins.qubits.size() != ins.arity()) {
        throw ConstructionError(name + " expects " + std::to_string(ins.arity()) + " qubit target(s)");
    }
    for (QubitIndex q : ins.qubits) {
        if (q >= num_qubits_) {
            throw ConstructionError(name + ": qubit " + std::to_string(q) + " out of range");
        }
    }
    if (ins.kind == GateKind::ControlledPhase && ins.qubits[0] == ins.qubits[1]) {
        throw ConstructionError("ControlledPhase: control and target must differ");
    }
    if (!std::isfinite(ins.theta)) throw ConstructionError(name + ": angle must be finite");

    const bool uses_clbit = ins.kind == GateKind::Measure || ins.kind == GateKind::ConditionalPhase;
    if (uses_clbit) {
        if (!ins.clbit) throw ConstructionError(name + " requires a classical bit");
        if (*ins.clbit >= num_clbits_) {
            throw ConstructionError(name + ": classical bit " + std::to_string(*ins.clbit) + " out of range");
        }
    } else if (ins.clbit) {
        throw ConstructionError(name + " takes no classical bit");
    }
    if (ins.kind == GateKind::ConditionalPhase && ins.required_value != 0 && ins.required_value != 1) {
        throw ConstructionError("ConditionalPhase: required value must be 0 or 1");
    }
    if (ins.kind != GateKind::ConditionalPhase) ins.required_value = 1;
    if (ins.kind != GateKind::Phase && ins.kind != GateKind::ControlledPhase &&
        ins.kind != GateKind::ConditionalPhase) {
        ins.theta = 0.0;
    }
    instructions_.push_back(std::move(ins));
    return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
    for (const Instruction& ins : other.instructions()) append(ins);
    return *this;
}

Circuit append(Circuit circuit, Instruction instruction) {
    circuit.append(std::move(instruction));
    return circuit;
}

GateCounts gate_counts(const Circuit& circuit) {
    GateCounts counts;
    for (const Instruction& ins : circuit.instructions()) {
        switch (ins.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::S:
            case GateKind::Phase:
                ++counts.one_qubit;
                break;
            case GateKind::ControlledPhase:
                ++counts.two_qubit;
                break;
            case GateKind::Measure:
                ++counts.measurements;
                break;
            case GateKind::ConditionalPhase:
                ++counts.conditioned;
                break;
        }
    }
    return counts;
}

std::size_t depth(const Circuit& circuit) {
    std::vector<std::size_t> qubit_level(circuit.num_qubits(), 0);
    std::vector<std::size_t> clbit_level(circuit.num_clbits(), 0);
    std::size_t overall = 0;
    for (const Instruction& ins : circuit.instructions()) {
        std::size_t level = 0;
        for (QubitIndex q : ins.qubits) level = std::max(level, qubit_level[q]);
        if (ins.clbit) level = std::max(level, clbit_level[*ins.clbit]);
        ++level;
        for (QubitIndex q : ins.qubits) qubit_level[q] = level;
        if (ins.clbit) clbit_level[*ins.clbit] = level;
        overall = std::max(overall, level);
    }
    return overall;
}

namespace {

std::string format_angle(double theta) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", theta);
    return buf;
}

bool has_conditionals(const Circuit& circuit) {
    return std::any_of(circuit.instructions().begin(), circuit.instructions().end(),
                       [](const Instruction& i) { return i.kind == GateKind::ConditionalPhase; });
}

}  // namespace

std::string to_qasm(const Circuit& circuit) {
    const bool split = has_conditionals(circuit);
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    if (split) {
        for (unsigned c = 0; c < circuit.num_clbits(); ++c) out << "creg c" << c << "[1];\n";
    } else if (circuit.num_clbits() > 0) {
        out << "creg c[" << circuit.num_clbits() << "];\n";
    }
    auto clbit_ref = [&](unsigned c) {
        return split ? "c" + std::to_string(c) + "[0]" : "c[" + std::to_string(c) + "]";
    };
    auto qubit_ref = [](QubitIndex q) { return "q[" + std::to_string(q) + "]"; };

    for (const Instruction& ins : circuit.instructions()) {
        switch (ins.kind) {
            case GateKind::H:
                out << "h " << qubit_ref(ins.qubits[0]) << ";\n";
                break;
            case GateKind::X:
                out << "x " << qubit_ref(ins.qubits[0]) << ";\n";
                break;
            case GateKind::S:
                out << "s " << qubit_ref(ins.qubits[0]) << ";\n";
                break;
            case GateKind::Phase:
                out << "u1(" << format_angle(ins.theta) << ") " << qubit_ref(ins.qubits[0]) << ";\n";
                break;
            case GateKind::ControlledPhase:
                out << "cu1(" << format_angle(ins.theta) << ") " << qubit_ref(ins.qubits[0]) << ","
                    << qubit_ref(ins.qubits[1]) << ";\n";
                break;
            case GateKind::Measure:
                out << "measure " << qubit_ref(ins.qubits[0]) << " -> " << clbit_ref(*ins.clbit) << ";\n";
                break;
            case GateKind::ConditionalPhase:
                out << "if(c" << *ins.clbit << "==" << ins.required_value << ") u1(" << format_angle(ins.theta)
                    << ") " << qubit_ref(ins.qubits[0]) << ";\n";
                break;
        }
    }
    return out.str();
}

}  // namespace qpe
