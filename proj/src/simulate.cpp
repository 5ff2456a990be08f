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

#include "slimq/simulate.hpp"

#include <stdexcept>

namespace slimq::sim {

BasisState::BasisState(int bits)
    : bits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {
    if (bits < 1) {
        throw std::invalid_argument("basis state needs a positive bit count");
    }
}

BasisState BasisState::from_value(int bits, std::uint64_t value) {
    BasisState s(bits);
    s.words_[0] = bits >= 64 ? value
                             : value & ((std::uint64_t{1} << bits) - 1);
    return s;
}

void BasisState::set_bit(int i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    auto& word = words_[static_cast<std::size_t>(i) >> 6];
    word = v ? (word | mask) : (word & ~mask);
}

std::uint64_t BasisState::to_value() const {
    if (bits_ > 64) {
        throw std::logic_error("state wider than 64 bits");
    }
    return words_[0];
}

std::string to_bitstring(const BasisState& s) {
    std::string out(static_cast<std::size_t>(s.size()), '0');
    for (int i = 0; i < s.size(); ++i) {
        if (s.bit(i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

void apply_gate(const ir::Gate& g, BasisState& state) {
    switch (g.kind) {
        case ir::GateKind::X:
            state.flip(g.w[0]);
            break;
        case ir::GateKind::CX:
            if (state.bit(g.w[0])) state.flip(g.w[1]);
            break;
        case ir::GateKind::CCX:
            if (state.bit(g.w[0]) && state.bit(g.w[1])) {
                state.flip(g.w[2]);
            }
            break;
        case ir::GateKind::Swap: {
            const bool a = state.bit(g.w[0]);
            const bool b = state.bit(g.w[1]);
            state.set_bit(g.w[0], b);
            state.set_bit(g.w[1], a);
            break;
        }
    }
}

BasisState run(const ir::Circuit& c, BasisState state) {
    if (state.size() != c.wires()) {
        throw std::invalid_argument("state width does not match circuit");
    }
    for (const ir::Gate& g : c.gates()) apply_gate(g, state);
    return state;
}

std::vector<std::uint32_t> permutation_of(const ir::Circuit& c) {
    if (c.wires() > kMaxExhaustiveWires) {
        throw std::invalid_argument(
            "permutation extraction is capped at " +
            std::to_string(kMaxExhaustiveWires) + " wires");
    }
    const std::uint32_t n = std::uint32_t{1} << c.wires();
    std::vector<std::uint32_t> table(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const BasisState out = run(c, BasisState::from_value(c.wires(), i));
        table[i] = static_cast<std::uint32_t>(out.to_value());
    }
    return table;
}

BasisState random_state(int bits, std::mt19937_64& rng) {
    BasisState s(bits);
    for (int i = 0; i < bits; i += 64) {
        std::uint64_t word = rng();
        for (int j = 0; j < 64 && i + j < bits; ++j) {
            s.set_bit(i + j, (word >> j) & 1);
        }
    }
    return s;
}

EquivalenceVerdict check_equivalence(
    const ir::Circuit& c,
    const std::function<BasisState(const BasisState&)>& oracle, long samples,
    std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("equivalence check needs samples >= 1");
    }
    EquivalenceVerdict verdict;
    std::mt19937_64 rng(seed);
    for (long i = 0; i < samples; ++i) {
        const BasisState input = random_state(c.wires(), rng);
        const BasisState expected = oracle(input);
        const BasisState got = run(c, input);
        ++verdict.samples_run;
        if (!(expected == got)) {
            verdict.mismatch = Mismatch{i, input, expected, got};
            return verdict;
        }
    }
    return verdict;
}

}  // namespace slimq::sim
