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

#include "slimq/circuit.hpp"

namespace slimq::ir {

/// Weighted gate metrics: NOT and CNOT cost 1 unit, Toffoli costs 5,
/// SWAP is free.
struct CostModel {
    long x = 1;
    long cx = 1;
    long ccx = 5;
    long swap = 0;
    long weight(GateKind k) const;
};

/// Layer weights for depth: a Toffoli decomposes to seven layers; SWAP
/// adds none but still orders its wires.
struct DepthModel {
    long x = 1;
    long cx = 1;
    long ccx = 7;
    long swap = 0;
    long weight(GateKind k) const;
};

struct GateCounts {
    long x = 0;
    long cx = 0;
    long ccx = 0;
    long swap = 0;

    long total() const { return x + cx + ccx + swap; }
    GateCounts& operator+=(const GateCounts& o);
    friend GateCounts operator+(GateCounts a, const GateCounts& b) {
        return a += b;
    }
    friend GateCounts operator*(long k, GateCounts c) {
        return {k * c.x, k * c.cx, k * c.ccx, k * c.swap};
    }
    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct ResourceReport {
    GateCounts counts;
    long total = 0;
    long cost = 0;
    long depth = 0;
    int qubits = 0;
};

GateCounts count_gates(const Circuit& c);
long cost(const Circuit& c, const CostModel& m = {});
long cost(const GateCounts& counts, const CostModel& m = {});

/// As-soon-as-possible layering: each gate starts at the latest finish
/// time among its operand wires and occupies them for its weight.
long depth(const Circuit& c, const DepthModel& m = {});

ResourceReport report(const Circuit& c, const CostModel& cm = {},
                      const DepthModel& dm = {});

}  // namespace slimq::ir
