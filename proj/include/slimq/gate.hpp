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

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace slimq::ir {

enum class GateKind : std::uint8_t { X, CX, CCX, Swap };

std::string_view kind_name(GateKind k);

/// One reversible gate on named wires. Every kind is an involution.
/// CCX controls and SWAP operands are stored in ascending order, so two
/// gates are structurally equal iff they act identically.
struct Gate {
    GateKind kind = GateKind::X;
    std::array<std::uint16_t, 3> w{};  // meaning depends on kind

    static Gate x(int target);
    static Gate cx(int control, int target);
    static Gate ccx(int control1, int control2, int target);
    static Gate swap(int a, int b);

    int operand_count() const;
    std::span<const std::uint16_t> operands() const;
    /// Wire whose value the gate may change; SWAP has none (both move).
    bool has_target() const { return kind != GateKind::Swap; }
    std::uint16_t target() const { return w[operand_count() - 1]; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

}  // namespace slimq::ir
