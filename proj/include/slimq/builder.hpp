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
#include <optional>
#include <string>
#include <vector>

#include "slimq/circuit.hpp"
#include "slimq/simulate.hpp"
#include "slimq/slim.hpp"

// Assembles full SLIM circuits: plaintext on wires 0..31 (D half first),
// key on wires 32..111, ancillas above. Wire permutations (P layer, key
// rotations, U/D role swap) are free relabelings by default, tracked in
// the layout maps; opt-in materialization turns them into SWAP gates.

namespace slimq::build {

inline constexpr int kBaseWires = 112;

enum class BuilderMode { functional, mirrored, ancilla };

std::string_view mode_name(BuilderMode m);
BuilderMode mode_from_name(std::string_view name);

/// The synthesized 4-wire S and S^-1 circuits every layer instantiates.
/// Loaders validate both against the classical tables.
struct SboxCircuits {
    ir::Circuit forward;
    ir::Circuit inverse;
};

/// Parses and validates a pair of gate-list texts.
SboxCircuits load_sbox_circuits(std::string_view forward_text,
                                std::string_view inverse_text);

/// The circuits shipped with the tool (regenerable via the synthesizer).
const SboxCircuits& builtin_sbox_circuits();
std::string_view builtin_sbox_text(bool inverse);

struct RoundMark {
    int round = 0;
    std::size_t gates_begin = 0;
    /// One past the key-un-add gate closing this round's inverse layer;
    /// the D wires are back to their pre-round values here. Zero for
    /// ancilla-mode rounds, which have no inverse layer.
    std::size_t gates_after_unadd = 0;
    std::array<int, 16> d_wires{};  // positions at round entry
};

struct CircuitLayout {
    std::array<int, 16> d_in{}, u_in{};
    std::array<int, 40> key_lsb_in{}, key_msb_in{};
    std::vector<int> ancilla;
    std::array<int, 16> d_out{}, u_out{};
    std::array<int, 40> key_lsb_out{}, key_msb_out{};
    std::vector<RoundMark> rounds;
};

struct SlimCircuit {
    ir::Circuit circuit;
    CircuitLayout layout;
    BuilderMode mode = BuilderMode::functional;
    bool materialized = false;
};

struct BuildOptions {
    BuilderMode mode = BuilderMode::functional;
    /// Emit SWAP gates for every wire permutation instead of relabeling;
    /// input and output maps then coincide.
    bool materialize_perms = false;
};

// Standalone layer builders, mainly for verification. Wire conventions:
// 16-wire layers put word bit k on wire k; the 80-wire schedule circuit
// puts schedule LSB bit k on wire k and MSB bit k on wire 40+k.

/// Four parallel S (or S^-1) boxes on nibbles, lowest nibble first.
ir::Circuit build_sbox_layer(const SboxCircuits& sbox, bool inverse);

struct PboxLayer {
    ir::Circuit circuit;             // empty unless materialized
    std::array<int, 16> out_map{};   // wire holding output bit k
};
PboxLayer build_pbox_layer(bool inverse, bool materialize);

struct ScheduleCircuit {
    ir::Circuit circuit;
    std::array<int, 40> lsb_out{}, msb_out{};
    std::array<int, 16> subkey_wires{};  // low 16 bits of the new MSB half
};
/// One in-place schedule advance: exactly 20 NOT, 130 CNOT, 40 CCNOT.
ScheduleCircuit build_schedule_advance(const SboxCircuits& sbox);

/// A single round as a standalone circuit (identity input maps). Rounds
/// above 5 advance whatever schedule state is on the key wires.
SlimCircuit build_round(const SboxCircuits& sbox, int round,
                        const BuildOptions& options);

/// All 32 rounds.
SlimCircuit build_cipher(const SboxCircuits& sbox, const BuildOptions& options);

/// Gate-reversed circuit; input and output maps swap roles.
SlimCircuit decrypt_circuit(const SlimCircuit& sc);

// State plumbing between the classical reference and circuit wires.
sim::BasisState input_state(const SlimCircuit& sc, const slim::MasterKey80& key,
                            slim::Block32 pt);
slim::Block32 read_output_block(const SlimCircuit& sc,
                                const sim::BasisState& state);
slim::KeyState80 read_output_key_state(const SlimCircuit& sc,
                                       const sim::BasisState& state);

/// Block expected on the output data wires: slim encryption for
/// functional and ancilla modes, the advance-then-invert schedule variant
/// for mirrored mode.
slim::Block32 reference_block(BuilderMode mode, const slim::MasterKey80& key,
                              slim::Block32 pt);

/// Full expected output state (data and key registers); functional and
/// mirrored modes only — ancilla-mode garbage wires are not modeled.
sim::BasisState reference_output(const SlimCircuit& sc,
                                 const slim::MasterKey80& key,
                                 slim::Block32 pt);

}  // namespace slimq::build
