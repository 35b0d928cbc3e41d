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

#include "qpe/qasm_reader.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "qpe/errors.hpp"

namespace qpe {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

unsigned to_index(const std::string& s, std::size_t line) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "bad index '" + s + "'");
    return value;
}

double to_angle(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty()) throw ParseError(line, "bad angle '" + s + "'");
    return value;
}

const std::regex kQreg(R"(qreg\s+q\[(\d+)\];)");
const std::regex kCreg(R"(creg\s+c(\d*)\[(\d+)\];)");
const std::regex kOneQubit(R"((h|x|s)\s+q\[(\d+)\];)");
const std::regex kU1(R"(u1\(([^)]*)\)\s+q\[(\d+)\];)");
const std::regex kCu1(R"(cu1\(([^)]*)\)\s+q\[(\d+)\]\s*,\s*q\[(\d+)\];)");
const std::regex kMeasure(R"(measure\s+q\[(\d+)\]\s*->\s*c(\d*)\[(\d+)\];)");
const std::regex kIf(R"(if\s*\(\s*c(\d+)\s*==\s*(\d+)\s*\)\s*u1\(([^)]*)\)\s+q\[(\d+)\];)");

/// Register layout seen so far.
struct Declarations {
    std::optional<unsigned> qubits;
    std::optional<unsigned> single_register;  // `creg c[m];`
    unsigned split_registers = 0;             // `creg cK[1];` count
};

}  // namespace

Circuit read_qasm(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }

    if (lines.empty() || trim(lines[0]) != "OPENQASM 2.0;") throw ParseError(1, "expected 'OPENQASM 2.0;' header");
    if (lines.size() < 2 || trim(lines[1]) != "include \"qelib1.inc\";") {
        throw ParseError(2, "expected 'include \"qelib1.inc\";'");
    }

    Declarations decl;
    std::optional<Circuit> circuit;
    std::smatch m;

    auto ensure_circuit = [&](std::size_t line) -> Circuit& {
        if (!circuit) {
            if (!decl.qubits) throw ParseError(line, "instruction before qreg declaration");
            if (decl.single_register && decl.split_registers > 0) {
                throw ParseError(line, "mixed classical register styles");
            }
            const unsigned clbits = decl.single_register.value_or(decl.split_registers);
            try {
                circuit.emplace(*decl.qubits, clbits);
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
        }
        return *circuit;
    };

    auto clbit_for = [&](const std::string& suffix, const std::string& idx, std::size_t line) -> unsigned {
        const unsigned bit = to_index(idx, line);
        if (decl.split_registers > 0) {
            if (suffix.empty() || bit != 0) throw ParseError(line, "expected cK[0] for single-bit registers");
            return to_index(suffix, line);
        }
        if (!suffix.empty()) throw ParseError(line, "unknown classical register c" + suffix);
        return bit;
    };

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        const std::string s = trim(lines[i]);
        if (s.empty() || s.starts_with("//")) continue;

        try {
            if (std::regex_match(s, m, kQreg)) {
                if (decl.qubits || circuit) throw ParseError(line, "unexpected qreg declaration");
                decl.qubits = to_index(m[1], line);
            } else if (std::regex_match(s, m, kCreg)) {
                if (circuit) throw ParseError(line, "creg after instructions");
                const std::string suffix = m[1];
                const unsigned size = to_index(m[2], line);
                if (suffix.empty()) {
                    if (decl.single_register || decl.split_registers) throw ParseError(line, "duplicate creg");
                    decl.single_register = size;
                } else {
                    if (size != 1 || to_index(suffix, line) != decl.split_registers) {
                        throw ParseError(line, "expected creg c" + std::to_string(decl.split_registers) + "[1]");
                    }
                    ++decl.split_registers;
                }
            } else if (std::regex_match(s, m, kOneQubit)) {
                const unsigned q = to_index(m[2], line);
                const std::string g = m[1];
                Circuit& c = ensure_circuit(line);
                if (g == "h") c.h(q);
                else if (g == "x") c.x(q);
                else c.s(q);
            } else if (std::regex_match(s, m, kU1)) {
                ensure_circuit(line).phase(to_angle(m[1], line), to_index(m[2], line));
            } else if (std::regex_match(s, m, kCu1)) {
                ensure_circuit(line).controlled_phase(to_angle(m[1], line), to_index(m[2], line),
                                                      to_index(m[3], line));
            } else if (std::regex_match(s, m, kMeasure)) {
                Circuit& c = ensure_circuit(line);
                c.measure(to_index(m[1], line), clbit_for(m[2], m[3], line));
            } else if (std::regex_match(s, m, kIf)) {
                Circuit& c = ensure_circuit(line);
                if (decl.split_registers == 0) throw ParseError(line, "conditions need single-bit registers");
                const unsigned value = to_index(m[2], line);
                if (value > 1) throw ParseError(line, "condition value must be 0 or 1");
                c.conditional_phase(to_angle(m[3], line), to_index(m[4], line), to_index(m[1], line),
                                    static_cast<int>(value));
            } else {
                throw ParseError(line, "unrecognized statement '" + s + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }
    return ensure_circuit(lines.size());
}

}  // namespace qpe
