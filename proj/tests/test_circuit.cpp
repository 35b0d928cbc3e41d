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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qpe/builders.hpp"
#include "qpe/circuit.hpp"
#include "qpe/errors.hpp"
#include "qpe/executor.hpp"

using namespace qpe;

namespace {

using Matrix = std::vector<std::vector<Complex>>;

// Dense-unitary oracle, written independently of the statevector kernels.
Matrix identity_matrix(std::size_t dim) {
    Matrix m(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t d = a.size();
    Matrix out(d, std::vector<Complex>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Matrix embed(const Instruction& ins, unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix m(dim, std::vector<Complex>(dim));
    if (ins.kind == GateKind::ControlledPhase) {
        for (std::size_t i = 0; i < dim; ++i) {
            const bool both = ((i >> ins.qubits[0]) & 1) && ((i >> ins.qubits[1]) & 1);
            m[i][i] = both ? std::polar(1.0, ins.theta) : Complex(1.0);
        }
        return m;
    }
    const double r = 1.0 / std::sqrt(2.0);
    Complex g[2][2];
    switch (ins.kind) {
        case GateKind::H: g[0][0] = r; g[0][1] = r; g[1][0] = r; g[1][1] = -r; break;
        case GateKind::X: g[0][0] = 0; g[0][1] = 1; g[1][0] = 1; g[1][1] = 0; break;
        case GateKind::S: g[0][0] = 1; g[0][1] = 0; g[1][0] = 0; g[1][1] = Complex(0, 1); break;
        default: g[0][0] = 1; g[0][1] = 0; g[1][0] = 0; g[1][1] = std::polar(1.0, ins.theta); break;
    }
    const unsigned t = ins.qubits[0];
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if ((i & ~(std::size_t{1} << t)) == (j & ~(std::size_t{1} << t))) m[i][j] = g[(i >> t) & 1][(j >> t) & 1];
    return m;
}

Instruction random_gate(std::mt19937_64& gen, unsigned n) {
    std::uniform_real_distribution<double> angle(-6.3, 6.3);
    const auto q = static_cast<QubitIndex>(gen() % n);
    switch (gen() % 5) {
        case 0: return Instruction::h(q);
        case 1: return Instruction::x(q);
        case 2: return Instruction::s(q);
        case 3: return Instruction::phase(angle(gen), q);
        default: {
            const auto t = static_cast<QubitIndex>((q + 1 + gen() % (n - 1)) % n);
            return Instruction::controlled_phase(angle(gen), q, t);
        }
    }
}

}  // namespace

TEST_CASE("append") {
    Circuit c(1, 0);
    auto grown = append(c, Instruction::h(0));
    CHECK(grown.size() == 1);
    CHECK(c.empty());

    Circuit two(2, 2);
    CHECK_THROWS_AS(two.controlled_phase(0.3, 0, 0), ConstructionError);
    CHECK_THROWS_AS(two.measure(1, 5), ConstructionError);
    CHECK_THROWS_AS(two.h(2), ConstructionError);
    CHECK_THROWS_AS(two.phase(INFINITY, 0), ConstructionError);
    CHECK_THROWS_AS(two.append(Instruction{GateKind::ControlledPhase, {0}, 0.1, std::nullopt}), ConstructionError);
    CHECK_THROWS_AS(two.append(Instruction{GateKind::Measure, {0}, 0.0, std::nullopt}), ConstructionError);
    CHECK_THROWS_AS(two.append(Instruction{GateKind::H, {0}, 0.0, 1u}), ConstructionError);
    CHECK_THROWS_AS(two.conditional_phase(0.1, 0, 1, 2), ConstructionError);

    two.h(0).controlled_phase(0.5, 0, 1).measure(1, 1);
    REQUIRE(two.size() == 3);
    CHECK(two.instructions()[0] == Instruction::h(0));
    CHECK(two.instructions()[1] == Instruction::controlled_phase(0.5, 0, 1));
}

TEST_CASE("gate_counts") {
    const auto phi = PhasePoint::from_bits("1011");
    const auto qft = gate_counts(build_qft_qpe(4, phi));
    // Hand count: controlled-U^(2^j) repetitions 1+2+4+8 plus n(n-1)/2 inverse-QFT rotations.
    CHECK(qft.two_qubit == 15 + 6);
    CHECK(qft.one_qubit == 1 + 4 + 4);
    CHECK(qft.measurements == 4);
    CHECK(qft.conditioned == 0);

    const auto modified = gate_counts(build_modified_lloyd(4, phi));
    CHECK(modified.two_qubit == 6);
    CHECK(modified.one_qubit == 12);

    CHECK(gate_counts(Circuit(3, 3)) == GateCounts{});

    const auto c = build_semiclassical_iqft_qpe(4, phi);
    CHECK(gate_counts(c).total() == c.size());
}

TEST_CASE("property: gate_counts is invariant under classical-bit relabeling") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 4;
        const Circuit c = build_semiclassical_iqft_qpe(n, PhasePoint::from_turns(0.1 * (trial % 10)));
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), gen);
        Circuit relabeled(c.num_qubits(), c.num_clbits());
        for (Instruction ins : c.instructions()) {
            if (ins.clbit) ins.clbit = perm[*ins.clbit];
            relabeled.append(ins);
        }
        CHECK(gate_counts(relabeled) == gate_counts(c));
    }
}

TEST_CASE("depth") {
    Circuit parallel(2, 0);
    parallel.h(0).h(1);
    CHECK(depth(parallel) == 1);

    Circuit chained(2, 0);
    chained.h(0).controlled_phase(0.2, 0, 1).h(1);
    CHECK(depth(chained) == 3);

    CHECK(depth(Circuit(4, 4)) == 0);

    // Classical bits create dependencies too.
    Circuit classical(2, 1);
    classical.measure(0, 0).conditional_phase(0.1, 1, 0);
    CHECK(depth(classical) == 2);
}

TEST_CASE("property: depth is subadditive under concatenation") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(gen() % 4);
        Circuit a(n, 0), b(n, 0);
        for (int i = 0, len = static_cast<int>(gen() % 10); i < len; ++i) a.append(random_gate(gen, n));
        for (int i = 0, len = static_cast<int>(gen() % 10); i < len; ++i) b.append(random_gate(gen, n));
        Circuit ab = a;
        ab.extend(b);
        CHECK(depth(ab) <= depth(a) + depth(b));
        CHECK(depth(ab) >= std::max(depth(a), depth(b)));
    }
}

TEST_CASE("to_qasm") {
    Circuit c(1, 1);
    c.h(0).measure(0, 0);
    const std::string text = to_qasm(c);
    CHECK(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n", 0) == 0);
    CHECK(text.find("qreg q[1];") != std::string::npos);
    CHECK(text.find("creg c[1];") != std::string::npos);
    CHECK(text.find("h q[0];") != std::string::npos);
    CHECK(text.find("measure q[0] -> c[0];") != std::string::npos);

    Circuit p(1, 0);
    p.phase(kPi / 4, 0);
    CHECK(to_qasm(p).find("u1(0.785398163397448") != std::string::npos);

    Circuit cp(2, 0);
    cp.controlled_phase(-kPi / 2, 1, 0);
    CHECK(to_qasm(cp).find("cu1(-1.5707963267948966) q[1],q[0];") != std::string::npos);

    const std::string semi = to_qasm(build_semiclassical_iqft_qpe(2, PhasePoint::from_bits("01")));
    CHECK(semi.find("creg c0[1];\ncreg c1[1];\n") != std::string::npos);
    CHECK(semi.find("if(c0==1) u1(-1.5707963267948966) q[0];") != std::string::npos);
    CHECK(semi.find("measure q[1] -> c0[0];") != std::string::npos);
}

TEST_CASE("property: execution equals the composed unitary on 3-qubit circuits") {
    std::mt19937_64 gen(314);
    const unsigned n = 3;
    for (int trial = 0; trial < 500; ++trial) {
        Circuit c(n, 0);
        const int len = static_cast<int>(gen() % 7);
        for (int i = 0; i < len; ++i) c.append(random_gate(gen, n));

        Matrix u = identity_matrix(8);
        for (const Instruction& ins : c.instructions()) u = multiply(embed(ins, n), u);

        // Column b of the unitary: prepare |b> with X gates, then run the circuit.
        for (std::size_t b = 0; b < 8; ++b) {
            Circuit prepared(n, 0);
            for (unsigned q = 0; q < n; ++q)
                if ((b >> q) & 1) prepared.x(q);
            prepared.extend(c);
            const StateVector s = final_state(prepared);
            double worst = 0.0;
            for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(s.amplitude(i) - u[i][b]));
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("final_state refuses measured circuits") {
    Circuit c(1, 1);
    c.h(0).measure(0, 0);
    CHECK_THROWS_AS(final_state(c), ConfigError);
}
