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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slimq/circuit.hpp"

// Exact classical simulation of NCT+SWAP circuits on computational basis
// states. Every gate maps basis states to basis states, so a run is
// O(gates) bit operations regardless of width.

namespace slimq::sim {

class BasisState {
  public:
    BasisState() = default;
    explicit BasisState(int bits);
    static BasisState from_value(int bits, std::uint64_t value);

    int size() const { return bits_; }
    bool bit(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }
    void set_bit(int i, bool v);
    void flip(int i) {
        words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1}
                                                    << (i & 63);
    }

    /// Low 64 bits as an integer; requires size() <= 64.
    std::uint64_t to_value() const;

    friend bool operator==(const BasisState&, const BasisState&) = default;

  private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

std::string to_bitstring(const BasisState& s);  // bit 0 first

/// In-place single-gate application (X flips the target, CX/CCX flip it
/// under their controls, SWAP exchanges two bits).
void apply_gate(const ir::Gate& g, BasisState& state);

/// Applies the gates in order; throws on state/circuit width mismatch.
BasisState run(const ir::Circuit& c, BasisState state);

inline constexpr int kMaxExhaustiveWires = 20;

/// Full truth table: entry i = output state for input i (bit j of the
/// integer = wire j). Requires wires <= kMaxExhaustiveWires.
std::vector<std::uint32_t> permutation_of(const ir::Circuit& c);

/// Name of the pseudorandom generator used for sampling, recorded in
/// reports so equivalence runs are reproducible across implementations.
inline constexpr std::string_view kSampleGenerator = "mt19937_64";

BasisState random_state(int bits, std::mt19937_64& rng);

struct Mismatch {
    long sample_index = 0;
    BasisState input;
    BasisState expected;
    BasisState got;
};

struct EquivalenceVerdict {
    long samples_run = 0;
    std::optional<Mismatch> mismatch;  // first (lowest-index) mismatch
    std::string generator{kSampleGenerator};
    bool ok() const { return !mismatch.has_value(); }
};

/// Runs `samples` deterministic pseudorandom basis states through both
/// the circuit and the oracle and compares the outputs.
EquivalenceVerdict check_equivalence(
    const ir::Circuit& c,
    const std::function<BasisState(const BasisState&)>& oracle, long samples,
    std::uint64_t seed);

}  // namespace slimq::sim
