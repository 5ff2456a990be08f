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

#include "slimq/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slimq::ir {

namespace {

void require_wire(int w, const char* role) {
    if (w < 0 || w > 0xFFFF) {
        throw std::invalid_argument(std::string("gate ") + role +
                                    " wire out of range: " +
                                    std::to_string(w));
    }
}

}  // namespace

std::string_view kind_name(GateKind k) {
    switch (k) {
        case GateKind::X:
            return "X";
        case GateKind::CX:
            return "CX";
        case GateKind::CCX:
            return "CCX";
        case GateKind::Swap:
            return "SWAP";
    }
    return "?";
}

Gate Gate::x(int target) {
    require_wire(target, "target");
    return {GateKind::X, {static_cast<std::uint16_t>(target), 0, 0}};
}

Gate Gate::cx(int control, int target) {
    require_wire(control, "control");
    require_wire(target, "target");
    if (control == target) {
        throw std::invalid_argument("CX control and target must differ");
    }
    return {GateKind::CX,
            {static_cast<std::uint16_t>(control),
             static_cast<std::uint16_t>(target), 0}};
}

Gate Gate::ccx(int control1, int control2, int target) {
    require_wire(control1, "control");
    require_wire(control2, "control");
    require_wire(target, "target");
    if (control1 == control2 || control1 == target || control2 == target) {
        throw std::invalid_argument("CCX operand wires must be distinct");
    }
    if (control1 > control2) std::swap(control1, control2);
    return {GateKind::CCX,
            {static_cast<std::uint16_t>(control1),
             static_cast<std::uint16_t>(control2),
             static_cast<std::uint16_t>(target)}};
}

Gate Gate::swap(int a, int b) {
    require_wire(a, "operand");
    require_wire(b, "operand");
    if (a == b) throw std::invalid_argument("SWAP operands must differ");
    if (a > b) std::swap(a, b);
    return {GateKind::Swap,
            {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), 0}};
}

int Gate::operand_count() const {
    switch (kind) {
        case GateKind::X:
            return 1;
        case GateKind::CX:
        case GateKind::Swap:
            return 2;
        case GateKind::CCX:
            return 3;
    }
    return 0;
}

std::span<const std::uint16_t> Gate::operands() const {
    return {w.data(), static_cast<std::size_t>(operand_count())};
}

Circuit::Circuit(int wires) : wires_(wires) {
    if (wires < 1) {
        throw std::invalid_argument("circuit needs a positive wire count");
    }
}

void Circuit::add(const Gate& g) {
    for (std::uint16_t w : g.operands()) {
        if (w >= wires_) {
            throw std::invalid_argument(
                "gate wire " + std::to_string(w) + " out of range for " +
                std::to_string(wires_) + "-wire circuit");
        }
    }
    gates_.push_back(g);
}

void Circuit::set_label(int wire, std::string name) {
    if (wire < 0 || wire >= wires_) {
        throw std::invalid_argument("label wire out of range");
    }
    labels_[wire] = std::move(name);
}

Circuit append(Circuit c, const Gate& g) {
    c.add(g);
    return c;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.wires() != b.wires()) {
        throw std::invalid_argument(
            "compose: wire counts differ (" + std::to_string(a.wires()) +
            " vs " + std::to_string(b.wires()) + ")");
    }
    Circuit out = a;
    for (const Gate& g : b.gates()) out.add(g);
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out(c.wires());
    for (const auto& [wire, name] : c.labels()) out.set_label(wire, name);
    const auto& gs = c.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.add(*it);
    return out;
}

namespace {

void require_bijection(std::span<const int> perm, int wires) {
    if (static_cast<int>(perm.size()) != wires) {
        throw std::invalid_argument("wire permutation size mismatch");
    }
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= wires || seen[p]) {
            throw std::invalid_argument("wire map is not a bijection");
        }
        seen[p] = true;
    }
}

Gate map_gate(const Gate& g, std::span<const int> map) {
    switch (g.kind) {
        case GateKind::X:
            return Gate::x(map[g.w[0]]);
        case GateKind::CX:
            return Gate::cx(map[g.w[0]], map[g.w[1]]);
        case GateKind::CCX:
            return Gate::ccx(map[g.w[0]], map[g.w[1]], map[g.w[2]]);
        case GateKind::Swap:
            return Gate::swap(map[g.w[0]], map[g.w[1]]);
    }
    throw std::invalid_argument("unknown gate kind");
}

}  // namespace

Circuit relabel(const Circuit& c, std::span<const int> perm) {
    require_bijection(perm, c.wires());
    Circuit out(c.wires());
    for (const auto& [wire, name] : c.labels()) out.set_label(perm[wire], name);
    for (const Gate& g : c.gates()) out.add(map_gate(g, perm));
    return out;
}

Circuit instantiate(const Circuit& sub, std::span<const int> wire_map,
                    int total_wires) {
    if (static_cast<int>(wire_map.size()) != sub.wires()) {
        throw std::invalid_argument("instantiate: wire map size mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(total_wires), false);
    for (int w : wire_map) {
        if (w < 0 || w >= total_wires || seen[w]) {
            throw std::invalid_argument(
                "instantiate: wire map entries must be distinct and in "
                "range");
        }
        seen[w] = true;
    }
    Circuit out(total_wires);
    for (const Gate& g : sub.gates()) out.add(map_gate(g, wire_map));
    return out;
}

}  // namespace slimq::ir
