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

#include <array>
#include <complex>

namespace qpe {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A unitary 2x2 matrix, row-major. Construction rejects non-unitary input.
class GateMatrix2 {
   public:
    using Entries = std::array<Complex, 4>;

    /// Throws InvalidGateError unless G*G^dagger = I within 1e-10 entrywise.
    explicit GateMatrix2(const Entries& entries);
    GateMatrix2(Complex m00, Complex m01, Complex m10, Complex m11)
        : GateMatrix2(Entries{m00, m01, m10, m11}) {}

    Complex operator()(int row, int col) const { return entries_[static_cast<std::size_t>(2 * row + col)]; }
    const Entries& entries() const { return entries_; }

    GateMatrix2 adjoint() const;
    GateMatrix2 operator*(const GateMatrix2& rhs) const;

    /// True when both off-diagonal entries are exactly zero.
    bool is_diagonal() const { return entries_[1] == Complex{} && entries_[2] == Complex{}; }

   private:
    Entries entries_;
};

bool approx_equal(const GateMatrix2& a, const GateMatrix2& b, double tol);

namespace gates {

GateMatrix2 identity();
GateMatrix2 hadamard();
GateMatrix2 pauli_x();
GateMatrix2 pauli_y();
GateMatrix2 pauli_z();
/// diag(1, i).
GateMatrix2 s();
GateMatrix2 s_dagger();
/// diag(1, e^{i theta}).
GateMatrix2 phase(double theta);
/// diag(1, e^{2 pi i / 2^k}).
GateMatrix2 rotation_k(int k);

}  // namespace gates

}  // namespace qpe
