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

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qpe/gates.hpp"
#include "qpe/histogram.hpp"
#include "qpe/random.hpp"

namespace qpe {

/// Qubit position in a register. Qubit 0 is the least significant bit of a basis-state label.
using QubitIndex = unsigned;

inline constexpr unsigned kMaxQubits = 24;

/// Dense complex amplitudes of an n-qubit register.
///
/// Every mutating operation keeps the norm at 1 (within round-off). Operations are
/// single-threaded and touch no shared state, so distinct instances can live on
/// distinct threads.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits; throws ConfigError outside [1, 24].
    static StateVector zero(unsigned num_qubits);

    /// Computational basis state |index>.
    static StateVector basis(unsigned num_qubits, std::uint64_t index);

    /// Takes ownership of `amplitudes`; the length must be 2^n and the norm 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

    void apply(const GateMatrix2& gate, QubitIndex target);

    /// Multiplies amplitudes whose control and target bits are both set by e^{i theta}.
    void apply_controlled_phase(double theta, QubitIndex control, QubitIndex target);

    /// |amplitude_i|^2 for every basis state.
    std::vector<double> probabilities() const;

    /// P(qubit reads 1).
    double probability_of_one(QubitIndex target) const;

    /// Projective measurement with collapse and renormalization.
    int measure(QubitIndex target, RandomSource& rng);

    /// Collapses onto `outcome` and renormalizes; returns the pre-collapse probability of that outcome.
    double project(QubitIndex target, int outcome);

    /// Basis-state indices drawn independently from probabilities(); the state is not modified.
    std::vector<std::uint64_t> sample_indices(std::uint64_t shots, RandomSource& rng) const;

    double norm_squared() const;

   private:
    StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    void check_qubit(QubitIndex q) const;

    unsigned num_qubits_;
    std::vector<Complex> amplitudes_;
};

// Value-returning forms of the core operations.

StateVector new_zero_state(unsigned num_qubits);
StateVector apply_single(StateVector state, const GateMatrix2& gate, QubitIndex target);
StateVector apply_controlled_phase(StateVector state, double theta, QubitIndex control, QubitIndex target);
std::vector<double> probabilities(const StateVector& state);
std::pair<int, StateVector> measure_qubit(StateVector state, QubitIndex target, RandomSource& rng);

/// Histogram over all qubits, keys written qubit n-1 first. Throws ConfigError for zero shots.
ShotHistogram sample_all(const StateVector& state, std::uint64_t shots, RandomSource& rng);

/// Largest entrywise |a_i - b_i|; dimensions must match.
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace qpe
