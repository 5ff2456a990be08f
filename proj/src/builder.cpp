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

#include "slimq/builder.hpp"

#include <stdexcept>

#include "slimq/gatelist_io.hpp"
#include "slimq/sbox_data.hpp"

namespace slimq::build {

namespace {

using ir::Circuit;
using ir::Gate;
using ir::GateKind;

// Gate emission, wire-position tracking and permutation handling for one
// circuit under construction. Register arrays map logical bit -> wire.
struct Assembler {
    Circuit c;
    const SboxCircuits& sbox;
    Circuit sbox_fwd_reversed;
    bool mat;

    std::array<int, 16> d{}, u{};
    std::array<int, 40> lsb{}, msb{};
    int next_ancilla = kBaseWires;
    std::vector<int> ancilla_all;
    std::vector<RoundMark> marks;

    Assembler(int wires, const SboxCircuits& sb, bool materialize)
        : c(wires),
          sbox(sb),
          sbox_fwd_reversed(ir::inverse(sb.forward)),
          mat(materialize) {}

    void init_base_layout() {
        for (int k = 0; k < 16; ++k) {
            d[k] = k;
            u[k] = 16 + k;
        }
        for (int k = 0; k < 40; ++k) {
            lsb[k] = 32 + k;
            msb[k] = 72 + k;
        }
        for (int k = 0; k < 16; ++k) {
            c.set_label(d[k], "d" + std::to_string(k));
            c.set_label(u[k], "u" + std::to_string(k));
        }
        for (int k = 0; k < 40; ++k) {
            c.set_label(lsb[k], "klsb" + std::to_string(k));
            c.set_label(msb[k], "kmsb" + std::to_string(k));
        }
    }

    void emit_box(const Circuit& box, const std::array<int, 4>& w) {
        for (const Gate& g : box.gates()) {
            switch (g.kind) {
                case GateKind::X:
                    c.add(Gate::x(w[g.w[0]]));
                    break;
                case GateKind::CX:
                    c.add(Gate::cx(w[g.w[0]], w[g.w[1]]));
                    break;
                case GateKind::CCX:
                    c.add(Gate::ccx(w[g.w[0]], w[g.w[1]], w[g.w[2]]));
                    break;
                case GateKind::Swap:
                    c.add(Gate::swap(w[g.w[0]], w[g.w[1]]));
                    break;
            }
        }
    }

    template <std::size_t N>
    void cx_fan(const std::array<int, N>& ctrl, const std::array<int, N>& tgt,
                bool descending = false) {
        if (!descending) {
            for (std::size_t k = 0; k < N; ++k) {
                c.add(Gate::cx(ctrl[k], tgt[k]));
            }
        } else {
            for (std::size_t k = N; k-- > 0;) {
                c.add(Gate::cx(ctrl[k], tgt[k]));
            }
        }
    }

    // Moves the value in logical slot j to slot slot_map[j]: a free
    // relabeling by default, a SWAP network when materializing.
    template <std::size_t N>
    void permute(std::array<int, N>& reg, const std::array<int, N>& slot_map) {
        if (!mat) {
            std::array<int, N> next{};
            for (std::size_t j = 0; j < N; ++j) next[slot_map[j]] = reg[j];
            reg = next;
            return;
        }
        std::array<bool, N> visited{};
        for (std::size_t j0 = 0; j0 < N; ++j0) {
            if (visited[j0] ||
                slot_map[j0] == static_cast<int>(j0)) {
                visited[j0] = true;
                continue;
            }
            visited[j0] = true;
            for (std::size_t j = static_cast<std::size_t>(slot_map[j0]);
                 j != j0; j = static_cast<std::size_t>(slot_map[j])) {
                visited[j] = true;
                c.add(Gate::swap(reg[j0], reg[j]));
            }
        }
    }

    template <std::size_t N>
    void rotate_left(std::array<int, N>& reg, int amount) {
        const int n = static_cast<int>(N);
        std::array<int, N> slot_map{};
        for (int j = 0; j < n; ++j) {
            slot_map[static_cast<std::size_t>(j)] = ((j + amount) % n + n) % n;
        }
        permute(reg, slot_map);
    }

    std::array<int, 16> word_map(const std::array<std::uint8_t, 16>& m) const {
        std::array<int, 16> out{};
        for (int j = 0; j < 16; ++j) out[j] = m[j];
        return out;
    }

    void s_layer(bool inverse) {
        const Circuit& box = inverse ? sbox.inverse : sbox.forward;
        for (int j = 0; j < 4; ++j) {
            emit_box(box, {d[4 * j], d[4 * j + 1], d[4 * j + 2], d[4 * j + 3]});
        }
    }

    std::array<int, 16> subkey_wires(int round) const {
        std::array<int, 16> out{};
        if (round <= 5) {
            for (int k = 0; k < 16; ++k) {
                const int bit = 16 * (round - 1) + k;
                out[k] = bit < 40 ? lsb[bit] : msb[bit - 40];
            }
        } else {
            for (int k = 0; k < 16; ++k) out[k] = msb[k];
        }
        return out;
    }

    // In-place advance: rotl2 the LSB half, fold in the MSB half, S-box
    // the LSB half, rotl3 the MSB half, fold the LSB half back in. Gate
    // counts: 20 NOT, 130 CNOT, 40 CCNOT.
    void schedule_advance() {
        rotate_left(lsb, 2);
        cx_fan(msb, lsb);
        for (int j = 0; j < 10; ++j) {
            emit_box(sbox.forward,
                     {lsb[4 * j], lsb[4 * j + 1], lsb[4 * j + 2],
                      lsb[4 * j + 3]});
        }
        rotate_left(msb, 3);
        cx_fan(lsb, msb);
    }

    void schedule_advance_inverse() {
        cx_fan(lsb, msb, /*descending=*/true);
        rotate_left(msb, -3);
        for (int j = 9; j >= 0; --j) {
            emit_box(sbox_fwd_reversed,
                     {lsb[4 * j], lsb[4 * j + 1], lsb[4 * j + 2],
                      lsb[4 * j + 3]});
        }
        cx_fan(msb, lsb, /*descending=*/true);
        rotate_left(lsb, -2);
    }

    void role_swap() {
        if (mat) {
            for (int k = 0; k < 16; ++k) c.add(Gate::swap(d[k], u[k]));
        } else {
            std::swap(d, u);
        }
    }

    std::array<int, 16> allocate_ancillas() {
        std::array<int, 16> anc{};
        for (int k = 0; k < 16; ++k) {
            anc[k] = next_ancilla++;
            ancilla_all.push_back(anc[k]);
            c.set_label(anc[k], "anc" + std::to_string(anc[k] - kBaseWires));
        }
        return anc;
    }

    void round(int i, BuilderMode mode) {
        RoundMark mark;
        mark.round = i;
        mark.gates_begin = c.size();
        mark.d_wires = d;

        if (i > 5) schedule_advance();
        const std::array<int, 16> key_w = subkey_wires(i);

        if (mode == BuilderMode::ancilla) {
            const std::array<int, 16> anc = allocate_ancillas();
            cx_fan(d, anc);  // keep D_{i-1}; round 32 needs it as U_32 too
            cx_fan(key_w, d);
            s_layer(false);
            permute(d, word_map(slim::pbox_map()));
            cx_fan(d, u);
            if (mat) {
                for (int k = 0; k < 16; ++k) c.add(Gate::swap(d[k], anc[k]));
                for (int k = 0; k < 16; ++k) c.add(Gate::swap(d[k], u[k]));
            } else {
                const std::array<int, 16> garbage = d;
                (void)garbage;  // retired wires keep the KSP image
                d = u;
                u = anc;
            }
            marks.push_back(mark);
            return;
        }

        cx_fan(key_w, d);
        s_layer(false);
        permute(d, word_map(slim::pbox_map()));
        cx_fan(d, u);
        permute(d, word_map(slim::pbox_inv_map()));
        s_layer(true);
        cx_fan(key_w, d);
        mark.gates_after_unadd = c.size();
        if (mode == BuilderMode::mirrored && i > 5) schedule_advance_inverse();
        role_swap();
        marks.push_back(mark);
    }
};

SlimCircuit finish(Assembler&& a, BuilderMode mode, bool materialized,
                   const CircuitLayout& base_in) {
    SlimCircuit sc;
    sc.mode = mode;
    sc.materialized = materialized;
    sc.layout = base_in;
    sc.layout.d_out = a.d;
    sc.layout.u_out = a.u;
    sc.layout.key_lsb_out = a.lsb;
    sc.layout.key_msb_out = a.msb;
    sc.layout.ancilla = std::move(a.ancilla_all);
    sc.layout.rounds = std::move(a.marks);
    sc.circuit = std::move(a.c);
    return sc;
}

CircuitLayout base_layout(const Assembler& a) {
    CircuitLayout l;
    l.d_in = a.d;
    l.u_in = a.u;
    l.key_lsb_in = a.lsb;
    l.key_msb_in = a.msb;
    return l;
}

void validate_box(const Circuit& c, const std::array<std::uint8_t, 16>& table,
                  const char* what) {
    if (c.wires() != 4) {
        throw std::invalid_argument(std::string(what) +
                                    " circuit must have 4 wires");
    }
    const auto perm = sim::permutation_of(c);
    for (int i = 0; i < 16; ++i) {
        if (perm[static_cast<std::size_t>(i)] != table[i]) {
            throw std::invalid_argument(
                std::string(what) +
                " circuit does not realize the expected table (input " +
                std::to_string(i) + ")");
        }
    }
}

}  // namespace

std::string_view mode_name(BuilderMode m) {
    switch (m) {
        case BuilderMode::functional:
            return "functional";
        case BuilderMode::mirrored:
            return "mirrored";
        case BuilderMode::ancilla:
            return "ancilla";
    }
    return "?";
}

BuilderMode mode_from_name(std::string_view name) {
    if (name == "functional") return BuilderMode::functional;
    if (name == "mirrored") return BuilderMode::mirrored;
    if (name == "ancilla") return BuilderMode::ancilla;
    throw std::invalid_argument("unknown mode '" + std::string(name) +
                                "' (functional|mirrored|ancilla)");
}

SboxCircuits load_sbox_circuits(std::string_view forward_text,
                                std::string_view inverse_text) {
    SboxCircuits sbox{ir::parse_gatelist(forward_text),
                      ir::parse_gatelist(inverse_text)};
    validate_box(sbox.forward, slim::sbox_table(), "S-box");
    validate_box(sbox.inverse, slim::sbox_inv_table(), "inverse S-box");
    return sbox;
}

std::string_view builtin_sbox_text(bool inverse) {
    return inverse ? kBuiltinSboxInvGatelist : kBuiltinSboxGatelist;
}

const SboxCircuits& builtin_sbox_circuits() {
    static const SboxCircuits sbox =
        load_sbox_circuits(builtin_sbox_text(false), builtin_sbox_text(true));
    return sbox;
}

ir::Circuit build_sbox_layer(const SboxCircuits& sbox, bool inverse) {
    const Circuit& box = inverse ? sbox.inverse : sbox.forward;
    Circuit out(16);
    for (int j = 0; j < 4; ++j) {
        const std::array<int, 4> map = {4 * j, 4 * j + 1, 4 * j + 2,
                                        4 * j + 3};
        for (const Gate& g : ir::instantiate(box, map, 16).gates()) {
            out.add(g);
        }
    }
    return out;
}

PboxLayer build_pbox_layer(bool inverse, bool materialize) {
    const auto& map = inverse ? slim::pbox_inv_map() : slim::pbox_map();
    PboxLayer layer;
    layer.circuit = Circuit(16);
    if (materialize) {
        // Reuse the assembler's cycle decomposition on an identity register.
        SboxCircuits dummy{Circuit(4), Circuit(4)};
        Assembler a(16, dummy, true);
        std::array<int, 16> reg{};
        std::array<int, 16> slot_map{};
        for (int k = 0; k < 16; ++k) {
            reg[k] = k;
            slot_map[k] = map[k];
        }
        a.c = Circuit(16);
        a.permute(reg, slot_map);
        layer.circuit = std::move(a.c);
        for (int k = 0; k < 16; ++k) layer.out_map[k] = k;
    } else {
        for (int k = 0; k < 16; ++k) layer.out_map[map[k]] = k;
    }
    return layer;
}

ScheduleCircuit build_schedule_advance(const SboxCircuits& sbox) {
    Assembler a(80, sbox, false);
    for (int k = 0; k < 40; ++k) {
        a.lsb[k] = k;
        a.msb[k] = 40 + k;
    }
    a.schedule_advance();
    ScheduleCircuit out{std::move(a.c), a.lsb, a.msb, {}};
    for (int k = 0; k < 16; ++k) out.subkey_wires[k] = a.msb[k];
    return out;
}

SlimCircuit build_round(const SboxCircuits& sbox, int round,
                        const BuildOptions& options) {
    if (round < 1 || round > slim::kRounds) {
        throw std::invalid_argument("round index must be in 1..32");
    }
    const int wires = options.mode == BuilderMode::ancilla ? kBaseWires + 16
                                                           : kBaseWires;
    Assembler a(wires, sbox, options.materialize_perms);
    a.init_base_layout();
    const CircuitLayout base = base_layout(a);
    a.round(round, options.mode);
    return finish(std::move(a), options.mode, options.materialize_perms, base);
}

SlimCircuit build_cipher(const SboxCircuits& sbox,
                         const BuildOptions& options) {
    const int wires = options.mode == BuilderMode::ancilla
                          ? kBaseWires + 16 * slim::kRounds
                          : kBaseWires;
    Assembler a(wires, sbox, options.materialize_perms);
    a.init_base_layout();
    const CircuitLayout base = base_layout(a);
    for (int i = 1; i <= slim::kRounds; ++i) a.round(i, options.mode);
    return finish(std::move(a), options.mode, options.materialize_perms, base);
}

SlimCircuit decrypt_circuit(const SlimCircuit& sc) {
    SlimCircuit out;
    out.circuit = ir::inverse(sc.circuit);
    out.mode = sc.mode;
    out.materialized = sc.materialized;
    out.layout.d_in = sc.layout.d_out;
    out.layout.u_in = sc.layout.u_out;
    out.layout.key_lsb_in = sc.layout.key_lsb_out;
    out.layout.key_msb_in = sc.layout.key_msb_out;
    out.layout.d_out = sc.layout.d_in;
    out.layout.u_out = sc.layout.u_in;
    out.layout.key_lsb_out = sc.layout.key_lsb_in;
    out.layout.key_msb_out = sc.layout.key_msb_in;
    out.layout.ancilla = sc.layout.ancilla;
    return out;
}

sim::BasisState input_state(const SlimCircuit& sc, const slim::MasterKey80& key,
                            slim::Block32 pt) {
    sim::BasisState s(sc.circuit.wires());
    for (int k = 0; k < 16; ++k) {
        s.set_bit(sc.layout.d_in[k], (pt.down >> k) & 1);
        s.set_bit(sc.layout.u_in[k], (pt.up >> k) & 1);
    }
    for (int k = 0; k < 40; ++k) {
        s.set_bit(sc.layout.key_lsb_in[k], key.bit(k));
        s.set_bit(sc.layout.key_msb_in[k], key.bit(40 + k));
    }
    return s;
}

slim::Block32 read_output_block(const SlimCircuit& sc,
                                const sim::BasisState& state) {
    slim::Block32 b;
    for (int k = 0; k < 16; ++k) {
        if (state.bit(sc.layout.d_out[k])) b.down |= slim::Word16(1u << k);
        if (state.bit(sc.layout.u_out[k])) b.up |= slim::Word16(1u << k);
    }
    return b;
}

slim::KeyState80 read_output_key_state(const SlimCircuit& sc,
                                       const sim::BasisState& state) {
    slim::KeyState80 ks;
    for (int k = 0; k < 40; ++k) {
        if (state.bit(sc.layout.key_lsb_out[k])) {
            ks.lsb_half |= std::uint64_t{1} << k;
        }
        if (state.bit(sc.layout.key_msb_out[k])) {
            ks.msb_half |= std::uint64_t{1} << k;
        }
    }
    return ks;
}

slim::Block32 reference_block(BuilderMode mode, const slim::MasterKey80& key,
                              slim::Block32 pt) {
    if (mode == BuilderMode::mirrored) {
        return slim::encrypt_with_subkeys(pt, slim::mirrored_subkeys(key));
    }
    return slim::encrypt(pt, key);
}

sim::BasisState reference_output(const SlimCircuit& sc,
                                 const slim::MasterKey80& key,
                                 slim::Block32 pt) {
    if (sc.mode == BuilderMode::ancilla) {
        throw std::invalid_argument(
            "full-state reference is defined for functional and mirrored "
            "modes only");
    }
    const slim::Block32 block = reference_block(sc.mode, key, pt);
    const slim::KeyState80 ks =
        sc.mode == BuilderMode::functional
            ? slim::schedule_state_after(key, slim::kRounds - 5)
            : slim::initial_schedule_state(key);
    sim::BasisState s(sc.circuit.wires());
    for (int k = 0; k < 16; ++k) {
        s.set_bit(sc.layout.d_out[k], (block.down >> k) & 1);
        s.set_bit(sc.layout.u_out[k], (block.up >> k) & 1);
    }
    for (int k = 0; k < 40; ++k) {
        s.set_bit(sc.layout.key_lsb_out[k], (ks.lsb_half >> k) & 1);
        s.set_bit(sc.layout.key_msb_out[k], (ks.msb_half >> k) & 1);
    }
    return s;
}

}  // namespace slimq::build
