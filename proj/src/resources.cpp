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

#include "slimq/resources.hpp"

#include <algorithm>
#include <vector>

namespace slimq::ir {

long CostModel::weight(GateKind k) const {
    switch (k) {
        case GateKind::X:
            return x;
        case GateKind::CX:
            return cx;
        case GateKind::CCX:
            return ccx;
        case GateKind::Swap:
            return swap;
    }
    return 0;
}

long DepthModel::weight(GateKind k) const {
    switch (k) {
        case GateKind::X:
            return x;
        case GateKind::CX:
            return cx;
        case GateKind::CCX:
            return ccx;
        case GateKind::Swap:
            return swap;
    }
    return 0;
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
    x += o.x;
    cx += o.cx;
    ccx += o.ccx;
    swap += o.swap;
    return *this;
}

GateCounts count_gates(const Circuit& c) {
    GateCounts n;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
                ++n.x;
                break;
            case GateKind::CX:
                ++n.cx;
                break;
            case GateKind::CCX:
                ++n.ccx;
                break;
            case GateKind::Swap:
                ++n.swap;
                break;
        }
    }
    return n;
}

long cost(const GateCounts& n, const CostModel& m) {
    return n.x * m.x + n.cx * m.cx + n.ccx * m.ccx + n.swap * m.swap;
}

long cost(const Circuit& c, const CostModel& m) {
    return cost(count_gates(c), m);
}

long depth(const Circuit& c, const DepthModel& m) {
    std::vector<long> busy_until(static_cast<std::size_t>(c.wires()), 0);
    long result = 0;
    for (const Gate& g : c.gates()) {
        long start = 0;
        for (std::uint16_t w : g.operands()) {
            start = std::max(start, busy_until[w]);
        }
        const long finish = start + m.weight(g.kind);
        for (std::uint16_t w : g.operands()) busy_until[w] = finish;
        result = std::max(result, finish);
    }
    return result;
}

ResourceReport report(const Circuit& c, const CostModel& cm,
                      const DepthModel& dm) {
    ResourceReport r;
    r.counts = count_gates(c);
    r.total = r.counts.total();
    r.cost = cost(r.counts, cm);
    r.depth = depth(c, dm);
    r.qubits = c.wires();
    return r;
}

}  // namespace slimq::ir
