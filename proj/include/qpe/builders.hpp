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

#include "qpe/circuit.hpp"
#include "qpe/phase.hpp"

namespace qpe {

// Every builder uses U = diag(1, e^{2 pi i phi}) with eigenstate |1>, so controlled-U^m is a
// controlled phase of 2 pi phi m. For the register builders, classical bit i receives bit i of
// x = phi * 2^n, so the measured string read MSB first is x_1 x_2 ... x_n.

inline constexpr unsigned kMaxHadamardRound = 30;
inline constexpr unsigned kMaxLloydBits = 20;

/// Kitaev round k on two qubits (q0 control, q1 eigenstate):
/// X(q1) H(q0) [S(q0)] CP(2 pi phi 2^(k-1), q0, q1) H(q0) Measure(q0 -> c0).
Circuit build_hadamard_test(unsigned k, bool use_s_gate, const PhasePoint& phi);

/// Inverse QFT on qubits 0..n-1 without swaps. On the input prod_j (|0> + e^{2 pi i x 2^j / 2^n}|1>)
/// it leaves bit i of x on qubit n-1-i.
Circuit build_inverse_qft(unsigned n);

/// Textbook QPE with an eigenstate ancilla (qubit n); controlled-U^(2^j) is 2^j literal
/// controlled-phase repetitions.
Circuit build_qft_qpe(unsigned n, const PhasePoint& phi);

/// Ancilla-free QPE: the kicked-back phase on each register qubit is written with a single
/// Phase gate, followed by build_inverse_qft.
Circuit build_modified_lloyd(unsigned n, const PhasePoint& phi);

/// Ancilla-free preparation followed by the measurement-conditioned inverse QFT: each qubit is
/// measured as soon as its bit is extracted and later rotations are classically conditioned.
Circuit build_semiclassical_iqft_qpe(unsigned n, const PhasePoint& phi);

/// One step of iterative QPE for bit j (weight 2^-j): X(q1) H(q0) CP(2 pi phi 2^(j-1)) Phase(omega, q0)
/// H(q0) Measure(q0 -> c0).
Circuit build_iterative_step(unsigned j, const PhasePoint& phi, double feedback_angle);

}  // namespace qpe
