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

#include <cmath>
#include <random>

#include "doctest.h"
#include "qpe/builders.hpp"
#include "qpe/errors.hpp"
#include "qpe/estimators.hpp"
#include "qpe/executor.hpp"

using namespace qpe;

namespace {

/// Round k built from exact circuit probabilities (the infinite-shot limit).
KitaevRound exact_round(unsigned k, const PhasePoint& phi) {
    const auto dist_i = outcome_distribution(build_hadamard_test(k, false, phi));
    const auto dist_s = outcome_distribution(build_hadamard_test(k, true, phi));
    return make_kitaev_round(static_cast<int>(k), dist_i[0] - dist_i[1], dist_s[1] - dist_s[0]);
}

std::vector<KitaevRound> rounds_from_phases(const std::vector<double>& phases) {
    std::vector<KitaevRound> rounds;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const double a = kTwoPi * phases[i];
        rounds.push_back(make_kitaev_round(static_cast<int>(i + 1), std::cos(a), std::sin(a)));
    }
    return rounds;
}

const Bits k1011{1, 0, 1, 1};

}  // namespace

TEST_CASE("kitaev_estimate recovers 0.1011 without noise") {
    const auto phi = PhasePoint::from_bits("1011");
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 12345ULL}) {
        const PhaseEstimate est = kitaev_estimate(4, phi, 4096, std::nullopt, seed);
        CHECK(est.bits == k1011);
        CHECK(est.phi_hat_turns == 0.6875);
        CHECK(est.rounds.size() == 4);
        CHECK(est.shots_used == 2 * 4 * 4096);
        for (const KitaevRound& r : est.rounds) {
            CHECK(r.phi_k_hat == doctest::Approx(std::atan2(r.s_k, r.c_k) / kTwoPi + (r.s_k < 0 ? 1 : 0)));
        }
    }
}

TEST_CASE("kitaev_estimate at phi = 0") {
    const PhaseEstimate est = kitaev_estimate(4, PhasePoint::from_turns(0.0), 100, std::nullopt, 3);
    CHECK(est.rounds[0].c_k == 1.0);
    // the sine circuit is a fair coin at phi = 0, so s_k is only near zero
    CHECK(std::abs(est.rounds[0].s_k) <= 0.3);
    CHECK(circular_distance(est.rounds[0].phi_k_hat, 0.0) <= 0.05);
    CHECK(est.bits == Bits{0, 0, 0, 0});
}

TEST_CASE("infinite-shot Kitaev round at phi = 1/4") {
    const KitaevRound r = exact_round(1, PhasePoint::from_turns(0.25));
    CHECK(std::abs(r.c_k) <= 1e-12);
    CHECK(std::abs(r.s_k - 1.0) <= 1e-12);
    CHECK(std::abs(r.phi_k_hat - 0.25) <= 1e-12);
}

TEST_CASE("property: infinite-shot rounds recover 2^(k-1) phi") {
    std::mt19937_64 gen(50);
    std::uniform_real_distribution<double> turns(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const auto phi = PhasePoint::from_turns(turns(gen));
        for (unsigned k = 1; k <= 6; ++k) {
            const double expected = wrap_turns(std::ldexp(phi.turns(), static_cast<int>(k - 1)));
            CHECK(circular_distance(exact_round(k, phi).phi_k_hat, expected) <= 1e-10);
        }
    }
}

TEST_CASE("degenerate Kitaev statistics name the round") {
    try {
        make_kitaev_round(3, 0.0, 0.0);
        FAIL("expected EstimationError");
    } catch (const EstimationError& e) {
        CHECK(e.round() == 3);
        CHECK(std::string(e.what()).find("k=3") != std::string::npos);
    }
}

TEST_CASE("kitaev_estimate rejects bad sizes") {
    const auto phi = PhasePoint::from_bits("1");
    CHECK_THROWS_AS(kitaev_estimate(0, phi, 10, std::nullopt, 0), ConfigError);
    CHECK_THROWS_AS(kitaev_estimate(2, phi, 0, std::nullopt, 0), ConfigError);
}

TEST_CASE("sharpen_bits") {
    CHECK(sharpen_bits(rounds_from_phases({0.6875, 0.375, 0.75, 0.5}), 4) == k1011);
    CHECK(sharpen_bits(rounds_from_phases({0.0, 0.0, 0.0, 0.0}), 4) == Bits{0, 0, 0, 0});

    // Every corner of the +-0.05 perturbation cube.
    const std::vector<double> exact{0.6875, 0.375, 0.75, 0.5};
    for (int corner = 0; corner < 16; ++corner) {
        std::vector<double> perturbed = exact;
        for (int i = 0; i < 4; ++i) perturbed[static_cast<std::size_t>(i)] += ((corner >> i) & 1) ? 0.05 : -0.05;
        for (double& p : perturbed) p = wrap_turns(p);
        CHECK(sharpen_bits(rounds_from_phases(perturbed), 4) == k1011);
    }

    // Exactly between the two candidates: ties go to 0.
    CHECK(sharpen_bits(rounds_from_phases({0.25}), 1) == Bits{0});
    CHECK(sharpen_bits(rounds_from_phases({0.75}), 1) == Bits{0});

    CHECK_THROWS_AS(sharpen_bits(rounds_from_phases({0.5}), 2), ConfigError);
}

TEST_CASE("round_to_bits") {
    CHECK(round_to_bits(0.6875, 4) == k1011);
    CHECK(round_to_bits(0.69, 4) == k1011);
    CHECK(round_to_bits(0.99, 4) == Bits{0, 0, 0, 0});
    const PhaseEstimate est =
        kitaev_estimate(4, PhasePoint::from_bits("1011"), 4096, std::nullopt, 1, BitDecoder::Rounding);
    CHECK(est.bits == k1011);
}

TEST_CASE("iterative_estimate without noise") {
    const auto phi = PhasePoint::from_bits("1011");
    for (std::uint64_t shots : {1ULL, 3ULL, 101ULL}) {
        const IterativeResult r = iterative_run(4, phi, shots, std::nullopt, 5);
        CHECK(r.estimate.bits == k1011);
        CHECK(r.estimate.phi_hat_turns == 0.6875);
        CHECK(r.estimate.tied_bits.empty());
        // Every step is deterministic, so every shot's transcript is the answer.
        CHECK(r.transcript.count("1011") == shots);
        CHECK(r.transcript.shots == shots);
    }

    CHECK(iterative_estimate(1, PhasePoint::from_bits("1"), 7, std::nullopt, 0).bits == Bits{1});
}

TEST_CASE("iterative feedback cancels already-known bits") {
    // phi = 1/4 = 0.01: step 2 sees 2 phi = 1/2 and reads x_2 = 1; step 1 needs omega_1 = -2 pi / 4.
    CHECK(iterative_feedback_angle(1, Bits{0, 1}) == doctest::Approx(-kTwoPi / 4));
    CHECK(iterative_feedback_angle(2, Bits{0, 1}) == 0.0);
    CHECK(iterative_feedback_angle(1, Bits{0, 1, 1}) == doctest::Approx(-kTwoPi * (0.25 + 0.125)));
    const PhaseEstimate est = iterative_estimate(2, PhasePoint::from_turns(0.25), 9, std::nullopt, 0);
    CHECK(est.bits == Bits{0, 1});

    const auto step = build_iterative_step(1, PhasePoint::from_turns(0.25), -kTwoPi / 4);
    CHECK(std::abs(outcome_distribution(step)[0] - 1.0) <= 1e-12);
}

TEST_CASE("iterative vote ties default to 0 and are flagged") {
    // phi = 1/4 with one bit: P(1) = 1/2, so two shots split evenly for some seed.
    bool found = false;
    for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
        const IterativeResult r = iterative_run(1, PhasePoint::from_turns(0.25), 2, std::nullopt, seed);
        if (r.transcript.count("0") == 1) {
            found = true;
            CHECK(r.estimate.bits == Bits{0});
            CHECK(r.estimate.tied_bits == std::vector<int>{1});
        }
    }
    CHECK(found);
}

TEST_CASE("required_samples") {
    CHECK(required_samples(0.1, 0.05) == 185);
    for (double eps : {0.01, 0.05, 0.1, 0.2}) {
        const auto a = static_cast<double>(required_samples(eps, 0.05));
        const auto b = static_cast<double>(required_samples(2 * eps, 0.05));
        CHECK(std::abs(a / 4 - b) <= 1.0);
    }
    CHECK(required_samples(0.1, 0.999999) == 35);
    CHECK(required_samples(0.05, 0.05) == 738);
    CHECK(required_samples(0.1, 0.01) > required_samples(0.1, 0.05));

    CHECK_THROWS_AS(required_samples(0.0, 0.05), ConfigError);
    CHECK_THROWS_AS(required_samples(-1.0, 0.05), ConfigError);
    CHECK_THROWS_AS(required_samples(0.1, 0.0), ConfigError);
    CHECK_THROWS_AS(required_samples(0.1, 1.0), ConfigError);
}

TEST_CASE("phase points") {
    const auto p = PhasePoint::from_bits("1011");
    CHECK(p.turns() == 0.6875);
    REQUIRE(p.bits().has_value());
    CHECK(*p.bits() == k1011);
    CHECK(p.exact_numerator(4) == 11u);
    CHECK(p.exact_numerator(6) == 44u);
    CHECK_FALSE(p.exact_numerator(3).has_value());
    CHECK(p.scaled_turns(3) == 0.5);

    CHECK_THROWS_AS(PhasePoint::from_turns(1.0), ConfigError);
    CHECK_THROWS_AS(PhasePoint::from_turns(-0.1), ConfigError);
    CHECK_THROWS_AS(PhasePoint::from_bits("10a1"), ConfigError);
    CHECK_THROWS_AS(PhasePoint::from_bits(""), ConfigError);

    CHECK(circular_distance(0.95, 0.05) == doctest::Approx(0.1));
    CHECK(circular_distance(0.25, 0.75) == doctest::Approx(0.5));
}
