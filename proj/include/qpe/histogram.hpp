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
#include <map>
#include <string>
#include <vector>

namespace qpe {

/// Shot counts keyed by bitstring. Keys are written most-significant bit first
/// and all have the same width.
struct ShotHistogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;

    void add(const std::string& key, std::uint64_t n = 1) {
        counts[key] += n;
        shots += n;
    }

    std::uint64_t count(const std::string& key) const {
        auto it = counts.find(key);
        return it == counts.end() ? 0 : it->second;
    }

    double frequency(const std::string& key) const {
        return shots == 0 ? 0.0 : static_cast<double>(count(key)) / static_cast<double>(shots);
    }

    /// Most frequent key; ties resolve to the lexicographically smallest key. Empty if no shots.
    std::string mode() const;

    bool operator==(const ShotHistogram&) const = default;
};

/// `width`-bit string of `value`, most significant bit first.
std::string to_bitstring(std::uint64_t value, unsigned width);

ShotHistogram histogram_from_outcomes(const std::vector<std::uint64_t>& outcomes, unsigned width);

}  // namespace qpe
