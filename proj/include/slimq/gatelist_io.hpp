// Copyright 2026 The slimq Authors.
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

#include <stdexcept>
#include <string>

#include "slimq/circuit.hpp"

namespace slimq::ir {

// Gate-list text format: line 1 `qubits N`; body lines `X t`, `CX c t`,
// `CCX c1 c2 t`, `SWAP a b`; `#` starts a comment; LF endings; decimal
// wire indices.

struct ParseError : std::runtime_error {
    ParseError(long line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line(line) {}
    long line;
};

std::string emit_gatelist(const Circuit& c);
Circuit parse_gatelist(std::string_view text);  // throws ParseError

/// OpenQASM 2.0 export using x, cx, ccx and swap on one quantum register.
std::string emit_openqasm2(const Circuit& c);

}  // namespace slimq::ir
