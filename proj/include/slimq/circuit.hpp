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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "slimq/gate.hpp"

namespace slimq::ir {

/// An ordered gate list over a fixed wire count. Circuits are plain
/// values; all free functions below return new circuits. Equality
/// compares wires and gates (labels are advisory metadata).
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int wires);

    int wires() const { return wires_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Validating push; throws std::invalid_argument on out-of-range or
    /// duplicate operand wires.
    void add(const Gate& g);

    void set_label(int wire, std::string name);
    const std::map<int, std::string>& labels() const { return labels_; }

    friend bool operator==(const Circuit& a, const Circuit& b) {
        return a.wires_ == b.wires_ && a.gates_ == b.gates_;
    }

  private:
    int wires_ = 0;
    std::vector<Gate> gates_;
    std::map<int, std::string> labels_;
};

Circuit append(Circuit c, const Gate& g);

/// Gate list of `a` followed by `b`; semantics: apply `a` first.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reversed gate order. NCT and SWAP gates are self-inverse, so the
/// gates themselves are unchanged.
Circuit inverse(const Circuit& c);

/// Replaces every operand wire w by perm[w]; perm must be a bijection
/// on {0..wires-1}.
Circuit relabel(const Circuit& c, std::span<const int> perm);

/// Embeds `sub` into a `total_wires`-wide circuit, mapping sub wire i
/// onto wire_map[i]. Entries must be distinct and in range.
Circuit instantiate(const Circuit& sub, std::span<const int> wire_map,
                    int total_wires);

}  // namespace slimq::ir
