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

// qpe: command-line front end for the phase-estimation experiments.
//
//   qpe run --config exp.json [--method M] [--n-bits N] [--phase-bits B | --phase T] [--shots S]
//           [--seed K] [--p1 F] [--p2 F] [--p-readout F] [--out report.json]
//   qpe compare --config exp.json --p2-grid 0,0.01,0.02,0.05 --runs 20 --out table.csv
//   qpe export-qasm --method M --n-bits N --phase-bits B --out circuit.qasm
//
// Exit codes: 0 success, 2 configuration error, 3 parse error, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpe/errors.hpp"
#include "qpe/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;

struct Overrides {
    std::string config_path;
    std::optional<std::string> method;
    std::optional<unsigned> n_bits;
    std::optional<std::string> phase_bits;
    std::optional<double> phase_turns;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::optional<double> p1, p2, p_readout;
    std::optional<std::string> decoder;
    std::string out;
};

void add_experiment_flags(CLI::App* cmd, Overrides& o, bool with_config) {
    if (with_config) cmd->add_option("--config", o.config_path, "JSON experiment config");
    cmd->add_option("--method", o.method, "kitaev | iterative | qft | modified | semiclassical");
    cmd->add_option("--n-bits", o.n_bits, "phase register size");
    auto* bits = cmd->add_option("--phase-bits", o.phase_bits, "phase as binary digits x1..xn");
    auto* turns = cmd->add_option("--phase", o.phase_turns, "phase in turns, [0, 1)");
    bits->excludes(turns);
    cmd->add_option("--shots", o.shots, "shots (per circuit for kitaev, per bit for iterative)");
    cmd->add_option("--seed", o.seed, "base random seed");
    cmd->add_option("--p1", o.p1, "depolarizing rate after one-qubit gates");
    cmd->add_option("--p2", o.p2, "depolarizing rate after two-qubit gates");
    cmd->add_option("--p-readout", o.p_readout, "readout flip rate");
    cmd->add_option("--kitaev-decoder", o.decoder, "backsub | round");
    cmd->add_option("--out", o.out, "output file (stdout when omitted)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qpe::ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qpe::ExperimentConfig resolve(const Overrides& o) {
    qpe::ExperimentConfig cfg;
    if (!o.config_path.empty()) cfg = qpe::config_from_json(nlohmann::json::parse(read_file(o.config_path)));
    if (o.method) cfg.method = qpe::parse_method(*o.method);
    if (o.n_bits) cfg.n_bits = *o.n_bits;
    if (o.phase_bits) {
        cfg.phase_bits = o.phase_bits;
        cfg.phase_turns.reset();
    }
    if (o.phase_turns) {
        cfg.phase_turns = o.phase_turns;
        cfg.phase_bits.reset();
    }
    if (o.shots) cfg.shots = *o.shots;
    if (o.seed) cfg.seed = *o.seed;
    if (o.p1 || o.p2 || o.p_readout) {
        qpe::NoiseModel model = cfg.noise.value_or(qpe::NoiseModel::defaults());
        if (o.p1) model.p1 = *o.p1;
        if (o.p2) model.p2 = *o.p2;
        if (o.p_readout) model.p_readout = *o.p_readout;
        cfg.noise = model;
    }
    if (o.decoder) {
        nlohmann::json d = {{"kitaev_decoder", *o.decoder}};
        cfg.kitaev_decoder = qpe::config_from_json(d).kitaev_decoder;
    }
    cfg.validate();
    return cfg;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qpe::ConfigError("out: cannot write '" + path + "'");
    out << text;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            grid.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw qpe::ConfigError("p2-grid: bad value '" + item + "'");
        }
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum phase estimation laboratory"};
    app.require_subcommand(1);

    Overrides run_opts;
    auto* run = app.add_subcommand("run", "run one experiment and write a JSON report");
    add_experiment_flags(run, run_opts, true);

    Overrides cmp_opts;
    std::string grid_text;
    std::optional<unsigned> runs;
    std::string methods_text = "qft,modified";
    auto* compare = app.add_subcommand("compare", "sweep p2 for several methods and write a CSV table");
    add_experiment_flags(compare, cmp_opts, true);
    compare->add_option("--p2-grid", grid_text, "comma-separated two-qubit error rates");
    compare->add_option("--runs", runs, "seeded runs per cell");
    compare->add_option("--methods", methods_text, "comma-separated methods")->capture_default_str();

    Overrides qasm_opts;
    auto* export_qasm = app.add_subcommand("export-qasm", "write the method's circuit as OpenQASM 2.0");
    add_experiment_flags(export_qasm, qasm_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            const qpe::Report report = qpe::run_experiment(resolve(run_opts));
            emit(run_opts.out, qpe::report_to_string(report));
        } else if (*compare) {
            const qpe::ExperimentConfig base = resolve(cmp_opts);
            std::vector<double> grid = base.sweep ? base.sweep->p2_grid : std::vector<double>{};
            if (!grid_text.empty()) grid = parse_grid(grid_text);
            const unsigned cell_runs = runs.value_or(base.sweep ? base.sweep->runs : 20);
            std::vector<qpe::Method> methods;
            std::stringstream ss(methods_text);
            std::string name;
            while (std::getline(ss, name, ',')) methods.push_back(qpe::parse_method(name));
            emit(cmp_opts.out, qpe::comparison_to_csv(qpe::compare_methods(base, methods, grid, cell_runs)));
        } else if (*export_qasm) {
            emit(qasm_opts.out, qpe::to_qasm(qpe::representative_circuit(resolve(qasm_opts))));
        }
    } catch (const qpe::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qpe::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
