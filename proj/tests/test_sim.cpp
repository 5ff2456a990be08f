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

#include <doctest.h>

#include <random>
#include <set>

#include "slimq/simulate.hpp"
#include "slimq/slim.hpp"

using namespace slimq;
using ir::Circuit;
using ir::Gate;
using sim::BasisState;

TEST_CASE("gate semantics on basis states") {
    SUBCASE("CCX flips the target iff both controls are set") {
        Circuit c(3);
        c.add(Gate::ccx(0, 1, 2));
        CHECK(sim::run(c, BasisState::from_value(3, 0b011)).to_value() ==
              0b111);
        CHECK(sim::run(c, BasisState::from_value(3, 0b001)).to_value() ==
              0b001);
        CHECK(sim::run(c, BasisState::from_value(3, 0b111)).to_value() ==
              0b011);
    }
    SUBCASE("CX leaves the target alone when the control is clear") {
        Circuit c(2);
        c.add(Gate::cx(0, 1));
        CHECK(sim::run(c, BasisState::from_value(2, 0b00)).to_value() == 0b00);
        CHECK(sim::run(c, BasisState::from_value(2, 0b01)).to_value() == 0b11);
    }
    SUBCASE("X and SWAP") {
        Circuit c(3);
        c.add(Gate::x(1));
        c.add(Gate::swap(0, 2));
        CHECK(sim::run(c, BasisState::from_value(3, 0b100)).to_value() ==
              0b011);
    }
    SUBCASE("every gate kind is an involution") {
        for (const Gate& g : {Gate::x(0), Gate::cx(0, 1), Gate::ccx(0, 1, 2),
                              Gate::swap(1, 3)}) {
            Circuit twice(4);
            twice.add(g);
            twice.add(g);
            for (std::uint64_t v = 0; v < 16; ++v) {
                REQUIRE(sim::run(twice, BasisState::from_value(4, v))
                            .to_value() == v);
            }
        }
    }
}

TEST_CASE("apply_gate matches run for single gates") {
    std::mt19937_64 rng(5);
    for (const Gate& g : {Gate::x(2), Gate::cx(3, 1), Gate::ccx(0, 2, 3),
                          Gate::swap(0, 3)}) {
        Circuit c(4);
        c.add(g);
        for (int i = 0; i < 16; ++i) {
            BasisState s = sim::random_state(4, rng);
            BasisState via_run = sim::run(c, s);
            sim::apply_gate(g, s);
            REQUIRE(s == via_run);
        }
    }
}

TEST_CASE("permutation extraction") {
    SUBCASE("empty circuit is the identity") {
        const auto table = sim::permutation_of(Circuit(4));
        for (std::uint32_t i = 0; i < 16; ++i) CHECK(table[i] == i);
    }
    SUBCASE("simulation of any circuit is a bijection") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            Circuit c(6);
            for (int i = 0; i < 20; ++i) {
                const int a = static_cast<int>(rng() % 6);
                const int b = (a + 1 + static_cast<int>(rng() % 5)) % 6;
                c.add(rng() % 2 ? Gate::cx(a, b) : Gate::swap(a, b));
            }
            const auto table = sim::permutation_of(c);
            CHECK(std::set<std::uint32_t>(table.begin(), table.end()).size() ==
                  table.size());
        }
    }
    SUBCASE("wire bound enforced") {
        CHECK_THROWS_AS((void)sim::permutation_of(Circuit(21)),
                        std::invalid_argument);
    }
}

TEST_CASE("state width must match the circuit") {
    Circuit c(4);
    c.add(Gate::x(0));
    CHECK_THROWS_AS((void)sim::run(c, BasisState(5)), std::invalid_argument);
}

TEST_CASE("check_equivalence") {
    // A 4-wire circuit computing sbox16 nibble 0 = the S-box on wires 0..3
    // makes a convenient self-check against the classical table.
    Circuit c(4);
    c.add(Gate::x(1));
    c.add(Gate::cx(1, 2));
    c.add(Gate::ccx(0, 2, 3));

    const auto oracle = [&](const BasisState& in) {
        return sim::run(c, in);  // trivially equivalent
    };
    SUBCASE("agreement") {
        const auto verdict = sim::check_equivalence(c, oracle, 64, 1);
        CHECK(verdict.ok());
        CHECK(verdict.samples_run == 64);
        CHECK(verdict.generator == "mt19937_64");
    }
    SUBCASE("a corrupted circuit is caught with the first mismatch") {
        Circuit corrupted(4);
        corrupted.add(Gate::x(1));
        corrupted.add(Gate::cx(1, 2));  // final CCX dropped
        const auto verdict = sim::check_equivalence(
            corrupted, oracle, 256, 1);
        REQUIRE_FALSE(verdict.ok());
        const auto& mm = *verdict.mismatch;
        // the verdict is the lowest-index mismatch, reproducibly
        const auto verdict2 = sim::check_equivalence(corrupted, oracle, 256, 1);
        CHECK(verdict2.mismatch->sample_index == mm.sample_index);
        CHECK_FALSE(mm.expected == mm.got);
    }
    SUBCASE("deterministic sampling given a seed") {
        const auto v1 = sim::check_equivalence(c, oracle, 16, 42);
        const auto v2 = sim::check_equivalence(c, oracle, 16, 42);
        CHECK(v1.samples_run == v2.samples_run);
        std::mt19937_64 a(42), b(42);
        CHECK(sim::random_state(112, a) == sim::random_state(112, b));
    }
}

TEST_CASE("run round-trips with composed inverses") {
    std::mt19937_64 rng(13);
    Circuit c(8);
    for (int i = 0; i < 30; ++i) {
        const int a = static_cast<int>(rng() % 8);
        const int b = (a + 1 + static_cast<int>(rng() % 7)) % 8;
        switch (rng() % 3) {
            case 0:
                c.add(Gate::x(a));
                break;
            case 1:
                c.add(Gate::cx(a, b));
                break;
            default: {
                int t = (b + 1) % 8;
                while (t == a || t == b) t = (t + 1) % 8;
                c.add(Gate::ccx(a, b, t));
                break;
            }
        }
    }
    const Circuit round_trip = ir::compose(c, ir::inverse(c));
    for (int i = 0; i < 50; ++i) {
        const BasisState s = sim::random_state(8, rng);
        REQUIRE(sim::run(round_trip, s) == s);
    }
}
