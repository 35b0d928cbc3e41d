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

#include "qpe/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpe/builders.hpp"
#include "qpe/errors.hpp"
#include "qpe/executor.hpp"
#include "qpe/gates.hpp"

namespace qpe {

namespace {

void check_bits(unsigned n_bits) {
    if (n_bits < 1 || n_bits > kMaxHadamardRound) {
        throw ConfigError("n_bits must be in [1, " + std::to_string(kMaxHadamardRound) + "]");
    }
}

void check_shots(std::uint64_t shots) {
    if (shots == 0) throw ConfigError("shots must be at least 1");
}

/// 0.x_k x_{k+1} ... x_n given the tail already fixed in `bits`.
double tail_turns(const Bits& bits, unsigned k) {
    double acc = 0.0;
    for (unsigned l = k + 1; l <= bits.size(); ++l) {
        if (bits[l - 1]) acc += std::ldexp(1.0, -static_cast<int>(l - k + 1));
    }
    return acc;
}

}  // namespace

Bits sharpen_bits(const std::vector<KitaevRound>& rounds, unsigned n_bits) {
    std::vector<const KitaevRound*> by_k(n_bits + 1, nullptr);
    for (const KitaevRound& r : rounds) {
        if (r.k >= 1 && static_cast<unsigned>(r.k) <= n_bits) by_k[static_cast<std::size_t>(r.k)] = &r;
    }
    Bits bits(n_bits, 0);
    for (unsigned k = n_bits; k >= 1; --k) {
        if (!by_k[k]) throw ConfigError("sharpen_bits: missing round k=" + std::to_string(k));
        const double tail = tail_turns(bits, k);
        const double d0 = circular_distance(by_k[k]->phi_k_hat, tail);
        const double d1 = circular_distance(by_k[k]->phi_k_hat, 0.5 + tail);
        bits[k - 1] = d1 < d0 ? 1 : 0;
    }
    return bits;
}

Bits round_to_bits(double turns, unsigned n_bits) {
    const double scale = std::ldexp(1.0, static_cast<int>(n_bits));
    auto m = static_cast<std::uint64_t>(std::llround(wrap_turns(turns) * scale));
    m &= (std::uint64_t{1} << n_bits) - 1;
    Bits bits(n_bits);
    for (unsigned j = 1; j <= n_bits; ++j) bits[j - 1] = static_cast<std::uint8_t>((m >> (n_bits - j)) & 1U);
    return bits;
}

PhaseEstimate kitaev_estimate(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_circuit,
                              const std::optional<NoiseModel>& noise, std::uint64_t seed, BitDecoder decoder) {
    check_bits(n_bits);
    check_shots(shots_per_circuit);
    PhaseEstimate est;
    const auto shots = static_cast<double>(shots_per_circuit);
    for (unsigned k = 1; k <= n_bits; ++k) {
        double frac_one[2];
        for (int use_s = 0; use_s < 2; ++use_s) {
            const Circuit c = build_hadamard_test(k, use_s == 1, phi);
            const auto outcomes = sample_outcomes(c, shots_per_circuit, noise, stream_seed(seed, 2 * (k - 1) + use_s));
            const auto ones = std::count(outcomes.begin(), outcomes.end(), std::uint64_t{1});
            frac_one[use_s] = static_cast<double>(ones) / shots;
        }
        // C_k = P(0|I) - P(1|I), S_k = P(1|S) - P(0|S).
        const double c_k = 1.0 - 2.0 * frac_one[0];
        const double s_k = 2.0 * frac_one[1] - 1.0;
        est.rounds.push_back(make_kitaev_round(static_cast<int>(k), c_k, s_k));
    }
    est.bits = decoder == BitDecoder::Rounding ? round_to_bits(est.rounds.front().phi_k_hat, n_bits)
                                               : sharpen_bits(est.rounds, n_bits);
    est.phi_hat_turns = bits_to_turns(est.bits);
    est.shots_used = 2 * n_bits * shots_per_circuit;
    return est;
}

double iterative_feedback_angle(unsigned j, const Bits& bits) { return -kTwoPi * tail_turns(bits, j); }

IterativeResult iterative_run(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_bit,
                              const std::optional<NoiseModel>& noise, std::uint64_t seed) {
    check_bits(n_bits);
    check_shots(shots_per_bit);
    IterativeResult result;
    PhaseEstimate& est = result.estimate;
    est.bits.assign(n_bits, 0);
    std::vector<std::string> transcript(shots_per_bit, std::string(n_bits, '0'));

    for (unsigned j = n_bits; j >= 1; --j) {
        const Circuit c = build_iterative_step(j, phi, iterative_feedback_angle(j, est.bits));
        const auto outcomes = sample_outcomes(c, shots_per_bit, noise, stream_seed(seed, j));
        std::uint64_t ones = 0;
        for (std::uint64_t s = 0; s < shots_per_bit; ++s) {
            if (outcomes[s]) {
                ++ones;
                transcript[s][j - 1] = '1';
            }
        }
        if (2 * ones == shots_per_bit) est.tied_bits.push_back(static_cast<int>(j));
        est.bits[j - 1] = 2 * ones > shots_per_bit ? 1 : 0;
    }
    std::sort(est.tied_bits.begin(), est.tied_bits.end());
    est.phi_hat_turns = bits_to_turns(est.bits);
    est.shots_used = n_bits * shots_per_bit;
    for (const std::string& row : transcript) result.transcript.add(row);
    return result;
}

PhaseEstimate iterative_estimate(unsigned n_bits, const PhasePoint& phi, std::uint64_t shots_per_bit,
                                 const std::optional<NoiseModel>& noise, std::uint64_t seed) {
    return iterative_run(n_bits, phi, shots_per_bit, noise, seed).estimate;
}

std::uint64_t required_samples(double epsilon, double delta) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
    const double n = std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

}  // namespace qpe
