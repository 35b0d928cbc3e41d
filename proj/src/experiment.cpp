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

#include "qpe/experiment.hpp"

#include <cstdio>
#include <future>
#include <set>
#include <sstream>

#include "qpe/errors.hpp"
#include "qpe/executor.hpp"

namespace qpe {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(Method method) {
    switch (method) {
        case Method::Kitaev:
            return "kitaev";
        case Method::Iterative:
            return "iterative";
        case Method::Qft:
            return "qft";
        case Method::Modified:
            return "modified";
        case Method::Semiclassical:
            return "semiclassical";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::Kitaev, Method::Iterative, Method::Qft, Method::Modified, Method::Semiclassical}) {
        if (to_string(m) == name) return m;
    }
    throw ConfigError("method: unknown method '" + name +
                      "' (expected kitaev, iterative, qft, modified or semiclassical)");
}

namespace {

std::string decoder_name(BitDecoder d) { return d == BitDecoder::Rounding ? "round" : "backsub"; }

BitDecoder parse_decoder(const std::string& name) {
    if (name == "backsub") return BitDecoder::BackSubstitution;
    if (name == "round") return BitDecoder::Rounding;
    throw ConfigError("kitaev_decoder: expected 'backsub' or 'round', got '" + name + "'");
}

template <typename T>
T field(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string(key) + ": missing or has the wrong type");
    }
}

void reject_unknown(const json& doc, std::initializer_list<const char*> known, const std::string& where) {
    std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, _] : doc.items()) {
        if (!allowed.count(key)) throw ConfigError(where + key + ": unknown field");
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n_bits < 1) throw ConfigError("n_bits: must be at least 1");
    if (phase_turns.has_value() == phase_bits.has_value()) {
        throw ConfigError("phase: exactly one of phase_turns and phase_bits must be given");
    }
    (void)phase();
    if (shots < 1) throw ConfigError("shots: must be at least 1");
    if (noise) noise->validate();
    if (sweep) {
        if (sweep->p2_grid.empty()) throw ConfigError("sweep.p2_grid: must not be empty");
        for (double p : sweep->p2_grid) {
            if (!(p >= 0.0 && p <= 1.0 / 1.5)) throw ConfigError("sweep.p2_grid: values must lie in [0, 2/3]");
        }
        if (sweep->runs < 1) throw ConfigError("sweep.runs: must be at least 1");
    }
}

PhasePoint ExperimentConfig::phase() const {
    if (phase_bits) return PhasePoint::from_bits(*phase_bits);
    if (phase_turns) return PhasePoint::from_turns(*phase_turns);
    throw ConfigError("phase: exactly one of phase_turns and phase_bits must be given");
}

ExperimentConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
    reject_unknown(doc, {"method", "n_bits", "phase_turns", "phase_bits", "shots", "noise", "seed", "kitaev_decoder", "sweep"},
                   "");
    ExperimentConfig cfg;
    if (doc.contains("method")) cfg.method = parse_method(field<std::string>(doc, "method"));
    if (doc.contains("n_bits")) cfg.n_bits = field<unsigned>(doc, "n_bits");
    if (doc.contains("phase_turns")) cfg.phase_turns = field<double>(doc, "phase_turns");
    if (doc.contains("phase_bits")) cfg.phase_bits = field<std::string>(doc, "phase_bits");
    if (doc.contains("shots")) cfg.shots = field<std::uint64_t>(doc, "shots");
    if (doc.contains("seed")) cfg.seed = field<std::uint64_t>(doc, "seed");
    if (doc.contains("kitaev_decoder")) cfg.kitaev_decoder = parse_decoder(field<std::string>(doc, "kitaev_decoder"));
    if (doc.contains("noise") && !doc.at("noise").is_null()) {
        const json& n = doc.at("noise");
        if (!n.is_object()) throw ConfigError("noise: expected an object");
        reject_unknown(n, {"p1", "p2", "p_readout"}, "noise.");
        NoiseModel model = NoiseModel::defaults();
        if (n.contains("p1")) model.p1 = field<double>(n, "p1");
        if (n.contains("p2")) model.p2 = field<double>(n, "p2");
        if (n.contains("p_readout")) model.p_readout = field<double>(n, "p_readout");
        cfg.noise = model;
    }
    if (doc.contains("sweep") && !doc.at("sweep").is_null()) {
        const json& s = doc.at("sweep");
        if (!s.is_object()) throw ConfigError("sweep: expected an object");
        reject_unknown(s, {"p2_grid", "runs"}, "sweep.");
        SweepConfig sweep;
        if (s.contains("p2_grid")) sweep.p2_grid = field<std::vector<double>>(s, "p2_grid");
        if (s.contains("runs")) sweep.runs = field<unsigned>(s, "runs");
        cfg.sweep = sweep;
    }
    return cfg;
}

ordered_json config_to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["method"] = to_string(cfg.method);
    j["n_bits"] = cfg.n_bits;
    if (cfg.phase_turns) j["phase_turns"] = *cfg.phase_turns;
    if (cfg.phase_bits) j["phase_bits"] = *cfg.phase_bits;
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    if (cfg.noise) {
        j["noise"] = {{"p1", cfg.noise->p1}, {"p2", cfg.noise->p2}, {"p_readout", cfg.noise->p_readout}};
    } else {
        j["noise"] = nullptr;
    }
    j["kitaev_decoder"] = decoder_name(cfg.kitaev_decoder);
    if (cfg.sweep) j["sweep"] = {{"p2_grid", cfg.sweep->p2_grid}, {"runs", cfg.sweep->runs}};
    return j;
}

Circuit representative_circuit(const ExperimentConfig& config) {
    const PhasePoint phi = config.phase();
    switch (config.method) {
        case Method::Kitaev:
            return build_hadamard_test(1, false, phi);
        case Method::Iterative:
            return build_iterative_step(config.n_bits, phi, 0.0);
        case Method::Qft:
            return build_qft_qpe(config.n_bits, phi);
        case Method::Modified:
            return build_modified_lloyd(config.n_bits, phi);
        case Method::Semiclassical:
            return build_semiclassical_iqft_qpe(config.n_bits, phi);
    }
    throw ConfigError("method: unsupported");
}

Report run_experiment(const ExperimentConfig& config) {
    config.validate();
    const PhasePoint phi = config.phase();
    const unsigned n = config.n_bits;

    Report report;
    report.config = config;
    switch (config.method) {
        case Method::Kitaev: {
            report.estimate = kitaev_estimate(n, phi, config.shots, config.noise, config.seed, config.kitaev_decoder);
            report.histogram.add(bits_to_string(report.estimate.bits), config.shots);
            break;
        }
        case Method::Iterative: {
            IterativeResult r = iterative_run(n, phi, config.shots, config.noise, config.seed);
            report.estimate = std::move(r.estimate);
            report.histogram = std::move(r.transcript);
            break;
        }
        case Method::Qft:
        case Method::Modified:
        case Method::Semiclassical: {
            const Circuit circuit = representative_circuit(config);
            report.histogram = sample_histogram(circuit, config.shots, config.noise, config.seed);
            report.estimate.bits = parse_bits(report.histogram.mode(), "histogram");
            report.estimate.phi_hat_turns = bits_to_turns(report.estimate.bits);
            report.estimate.shots_used = config.shots;
            break;
        }
    }
    report.gate_counts = gate_counts(representative_circuit(config));
    report.mode_bitstring = report.histogram.mode();
    if (auto m = phi.exact_numerator(n)) {
        report.success_probability = report.histogram.frequency(to_bitstring(*m, n));
    }
    report.phase_error_turns = circular_distance(report.estimate.phi_hat_turns, phi.turns());
    return report;
}

ordered_json report_to_json(const Report& report) {
    ordered_json j;
    j["config"] = config_to_json(report.config);

    ordered_json counts = ordered_json::object();
    for (const auto& [key, n] : report.histogram.counts) counts[key] = n;
    j["histogram"] = {{"shots", report.histogram.shots}, {"counts", counts}};

    ordered_json rounds = ordered_json::array();
    for (const KitaevRound& r : report.estimate.rounds) {
        rounds.push_back({{"k", r.k}, {"c_k", r.c_k}, {"s_k", r.s_k}, {"phi_k_hat", r.phi_k_hat}});
    }
    j["estimate"] = {{"phi_hat_turns", report.estimate.phi_hat_turns},
                     {"bits", bits_to_string(report.estimate.bits)},
                     {"rounds", rounds},
                     {"shots_used", report.estimate.shots_used},
                     {"tied_bits", report.estimate.tied_bits}};
    j["gate_counts"] = {{"one_qubit", report.gate_counts.one_qubit},
                        {"two_qubit", report.gate_counts.two_qubit},
                        {"measurements", report.gate_counts.measurements},
                        {"conditioned", report.gate_counts.conditioned}};
    if (report.success_probability) {
        j["success_probability"] = *report.success_probability;
    } else {
        j["success_probability"] = nullptr;
    }
    j["phase_error_turns"] = report.phase_error_turns;
    j["mode_bitstring"] = report.mode_bitstring;
    return j;
}

std::string report_to_string(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

NoiseModel grid_noise(double p2) { return NoiseModel{p2 / 10.0, p2, 1.5 * p2}; }

std::vector<ComparisonRow> compare_methods(const ExperimentConfig& base, const std::vector<Method>& methods,
                                           const std::vector<double>& p2_grid, unsigned runs_per_cell) {
    if (p2_grid.empty()) throw ConfigError("p2_grid: must not be empty");
    if (methods.empty()) throw ConfigError("methods: must not be empty");
    if (runs_per_cell < 1) throw ConfigError("runs: must be at least 1");
    for (double p2 : p2_grid) {
        if (!(p2 >= 0.0 && p2 <= 1.0 / 1.5)) throw ConfigError("p2_grid: values must lie in [0, 2/3]");
    }
    if (!base.phase().exact_numerator(base.n_bits)) {
        throw ConfigError("phase: comparison needs a phase that is exact in n_bits bits");
    }

    std::vector<std::future<ComparisonRow>> cells;
    for (Method method : methods) {
        for (double p2 : p2_grid) {
            cells.push_back(std::async(std::launch::async, [=, &base] {
                ExperimentConfig cfg = base;
                cfg.method = method;
                cfg.noise = grid_noise(p2);
                cfg.sweep.reset();
                double total = 0.0;
                for (unsigned r = 0; r < runs_per_cell; ++r) {
                    cfg.seed = base.seed + r;
                    total += run_experiment(cfg).success_probability.value_or(0.0);
                }
                return ComparisonRow{method, p2, total / runs_per_cell,
                                     gate_counts(representative_circuit(cfg)).two_qubit};
            }));
        }
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(cells.size());
    for (auto& f : cells) rows.push_back(f.get());
    return rows;
}

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "method,p2,mean_success,two_qubit_gates\n";
    char buf[64];
    for (const ComparisonRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%g,%.6f,", r.p2, r.mean_success);
        out << to_string(r.method) << ',' << buf << r.two_qubit_gates << '\n';
    }
    return out.str();
}

}  // namespace qpe
