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

#include "qpe/gates.hpp"

#include <cmath>

#include "qpe/errors.hpp"

namespace qpe {

namespace {
constexpr double kUnitaryTol = 1e-10;
}

GateMatrix2::GateMatrix2(const Entries& entries) : entries_(entries) {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidGateError("gate matrix has a non-finite entry");
        }
    }
    // (G G^dagger)_{rc} = sum_j G_{rj} conj(G_{cj})
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex acc = (*this)(r, 0) * std::conj((*this)(c, 0)) + (*this)(r, 1) * std::conj((*this)(c, 1));
            const Complex expected = r == c ? Complex{1.0} : Complex{};
            if (std::abs(acc - expected) > kUnitaryTol) {
                throw InvalidGateError("gate matrix is not unitary");
            }
        }
    }
}

GateMatrix2 GateMatrix2::adjoint() const {
    return GateMatrix2(std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
                       std::conj(entries_[3]));
}

GateMatrix2 GateMatrix2::operator*(const GateMatrix2& rhs) const {
    Entries out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[static_cast<std::size_t>(2 * r + c)] = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return GateMatrix2(out);
}

bool approx_equal(const GateMatrix2& a, const GateMatrix2& b, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(a.entries()[i] - b.entries()[i]) > tol) return false;
    }
    return true;
}

namespace gates {

GateMatrix2 identity() { return GateMatrix2(1.0, 0.0, 0.0, 1.0); }

GateMatrix2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return GateMatrix2(h, h, h, -h);
}

GateMatrix2 pauli_x() { return GateMatrix2(0.0, 1.0, 1.0, 0.0); }
GateMatrix2 pauli_y() { return GateMatrix2(0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0); }
GateMatrix2 pauli_z() { return GateMatrix2(1.0, 0.0, 0.0, -1.0); }
GateMatrix2 s() { return GateMatrix2(1.0, 0.0, 0.0, Complex(0.0, 1.0)); }
GateMatrix2 s_dagger() { return GateMatrix2(1.0, 0.0, 0.0, Complex(0.0, -1.0)); }

GateMatrix2 phase(double theta) { return GateMatrix2(1.0, 0.0, 0.0, std::polar(1.0, theta)); }

GateMatrix2 rotation_k(int k) {
    if (k < 0 || k > 62) throw InvalidGateError("rotation order out of range");
    return phase(kTwoPi / std::ldexp(1.0, k));
}

}  // namespace gates

}  // namespace qpe
