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

#include "qpe/histogram.hpp"

namespace qpe {

std::string ShotHistogram::mode() const {
    std::string best;
    std::uint64_t best_count = 0;
    for (const auto& [key, n] : counts) {
        if (n > best_count) {
            best = key;
            best_count = n;
        }
    }
    return best;
}

std::string to_bitstring(std::uint64_t value, unsigned width) {
    std::string out(width, '0');
    for (unsigned b = 0; b < width; ++b) {
        if ((value >> b) & 1U) out[width - 1 - b] = '1';
    }
    return out;
}

ShotHistogram histogram_from_outcomes(const std::vector<std::uint64_t>& outcomes, unsigned width) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for (std::uint64_t v : outcomes) ++tally[v];
    ShotHistogram h;
    for (const auto& [v, n] : tally) h.add(to_bitstring(v, width), n);
    return h;
}

}  // namespace qpe
