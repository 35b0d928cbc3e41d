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

#include "json.hpp"

#include "qpe/builders.hpp"
#include "qpe/circuit.hpp"
#include "qpe/estimators.hpp"
#include "qpe/histogram.hpp"
#include "qpe/noise.hpp"
#include "qpe/phase.hpp"

namespace qpe {

enum class Method { Kitaev, Iterative, Qft, Modified, Semiclassical };

std::string to_string(Method method);
/// Throws ConfigError("method: ...") for unknown names.
Method parse_method(const std::string& name);

struct SweepConfig {
    std::vector<double> p2_grid;
    unsigned runs = 20;
};

struct ExperimentConfig {
    Method method = Method::Qft;
    unsigned n_bits = 4;
    std::optional<double> phase_turns;
    std::optional<std::string> phase_bits;
    std::uint64_t shots = 1024;
    std::optional<NoiseModel> noise;
    std::uint64_t seed = 0;
    BitDecoder kitaev_decoder = BitDecoder::BackSubstitution;
    std::optional<SweepConfig> sweep;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
    PhasePoint phase() const;
};

/// Parses a JSON config document; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

struct Report {
    ExperimentConfig config;
    ShotHistogram histogram;
    PhaseEstimate estimate;
    GateCounts gate_counts;
    /// Histogram mass on the true bitstring; only set when the phase is n_bits-exact.
    std::optional<double> success_probability;
    /// |phi_hat - phi| on the circle, in turns.
    double phase_error_turns = 0.0;
    std::string mode_bitstring;
};

/// The circuit whose gate counts a report quotes: the full register circuit for the QFT family,
/// the k = 1, K = I Hadamard test for Kitaev, the first (least significant) step for iterative.
Circuit representative_circuit(const ExperimentConfig& config);

/// Builds, executes and post-processes one experiment. Deterministic in (config, seed).
Report run_experiment(const ExperimentConfig& config);

nlohmann::ordered_json report_to_json(const Report& report);
/// Serialized report text (two-space indent, trailing newline).
std::string report_to_string(const Report& report);

struct ComparisonRow {
    Method method = Method::Qft;
    double p2 = 0.0;
    double mean_success = 0.0;
    std::uint64_t two_qubit_gates = 0;
};

/// Noise used for a grid cell: rates scale together as (p2/10, p2, 1.5 p2), so p2 = 0 is noiseless
/// and p2 = 0.02 gives the default model.
NoiseModel grid_noise(double p2);

/// For each (method, p2) cell, mean success probability over runs_per_cell seeds
/// base.seed, base.seed + 1, ... Cells run concurrently; the result does not depend on scheduling.
std::vector<ComparisonRow> compare_methods(const ExperimentConfig& base, const std::vector<Method>& methods,
                                           const std::vector<double>& p2_grid, unsigned runs_per_cell);

/// `method,p2,mean_success,two_qubit_gates` with one row per cell.
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace qpe
