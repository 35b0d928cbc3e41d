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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration (qubit counts, shot counts, probabilities, ...).
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Qubit or classical-bit index out of range, or coinciding control/target.
class IndexError : public Error {
   public:
    using Error::Error;
};

class InvalidGateError : public Error {
   public:
    using Error::Error;
};

/// Malformed circuit instruction (wrong arity, bad index, non-finite angle).
class ConstructionError : public Error {
   public:
    using Error::Error;
};

class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Phase-estimation statistics carry no usable information.
class EstimationError : public Error {
   public:
    EstimationError(const std::string& what, int round) : Error(what), round_(round) {}
    int round() const noexcept { return round_; }

   private:
    int round_;
};

/// QASM text that does not belong to the exported dialect. Line numbers are 1-based.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace qpe
