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

#include <string_view>

#include "qpe/circuit.hpp"

namespace qpe {

/// Reads back the OpenQASM 2.0 dialect written by to_qasm(). Throws ParseError carrying the
/// 1-based line number for anything else.
Circuit read_qasm(std::string_view text);

}  // namespace qpe
