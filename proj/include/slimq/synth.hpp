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
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "slimq/circuit.hpp"
#include "slimq/resources.hpp"

// Cost-bounded bidirectional search for in-place NCT circuits realizing
// 4-bit bijections: a forward frontier grows from the identity, a
// backward frontier from the target, and the two meet in a hashed
// permutation store.

namespace slimq::synth {

/// A 4-bit bijection given by the images of 0..15.
using Perm16 = std::array<std::uint8_t, 16>;

bool is_bijective(const Perm16& p);
Perm16 inverse_of(const Perm16& p);
Perm16 perm_from_hex(std::string_view hex16);  // 16 hex digits, image of 0 first
std::string perm_to_hex(const Perm16& p);

struct GateMultiset {
    int x = 0;
    int cx = 0;
    int ccx = 0;
    int total() const { return x + cx + ccx; }
    long cost(const ir::CostModel& m = {}) const {
        return x * m.x + cx * m.cx + ccx * m.ccx;
    }
    friend bool operator==(const GateMultiset&, const GateMultiset&) = default;
};

struct SearchBudget {
    long max_cost = 64;
    int max_gates = 12;
    /// When set, only circuits with exactly this gate multiset are
    /// accepted (the gate count is then forced to its total).
    std::optional<GateMultiset> multiset;
    std::chrono::duration<double> time_limit = std::chrono::minutes(10);
};

enum class SynthStatus {
    found,          // circuit meeting every budget constraint
    budget_not_met  // budget or time exhausted; `circuit` holds the best
                    // in-budget fallback found, if any
};

struct SearchStats {
    std::uint64_t forward_nodes = 0;
    std::uint64_t backward_nodes = 0;
    std::uint64_t store_entries = 0;
    std::uint64_t meet_candidates = 0;
    double seconds = 0.0;
    bool timed_out = false;
};

struct SynthResult {
    SynthStatus status = SynthStatus::budget_not_met;
    std::optional<ir::Circuit> circuit;
    GateMultiset multiset;  // of `circuit` when present
    long cost = 0;          // of `circuit` when present
    SearchStats stats;
};

/// All distinct NCT gates on `wires` wires (3 <= wires <= 5), ordered
/// X < CX < CCX and then by operand tuple; CCX control pairs are
/// unordered. SWAP is absent: wire permutations are free relabelings.
std::vector<ir::Gate> gate_alphabet(int wires);

/// Deterministic: among all solutions at the minimal in-budget gate
/// count, returns the cheapest, tie-broken by lexicographically smallest
/// gate sequence under the alphabet order. Throws on a non-bijective
/// target.
SynthResult synthesize(const Perm16& target, const SearchBudget& budget);

/// Exhaustive 16-input comparison via the basis-state simulator.
bool verify(const ir::Circuit& c, const Perm16& target);

}  // namespace slimq::synth
