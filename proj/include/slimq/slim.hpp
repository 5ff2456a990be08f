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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Classical reference implementation of the SLIM block cipher: 32-bit
// blocks, 80-bit keys, 32 Feistel rounds. Bit index 0 is always the least
// significant bit. This is the oracle every circuit is checked against.

namespace slimq::slim {

inline constexpr int kRounds = 32;

using Word16 = std::uint16_t;

struct Block32 {
    Word16 up = 0;    // U half, block bits 16..31
    Word16 down = 0;  // D half, block bits 0..15
    friend bool operator==(const Block32&, const Block32&) = default;
};

constexpr std::uint32_t to_u32(Block32 b) {
    return (static_cast<std::uint32_t>(b.up) << 16) | b.down;
}
constexpr Block32 block_from_u32(std::uint32_t v) {
    return {static_cast<Word16>(v >> 16), static_cast<Word16>(v & 0xFFFF)};
}

/// 80-bit master key; bit 0 = L_0, bit 79 = M_0 of the key notation.
struct MasterKey80 {
    std::uint64_t lo = 0;  // key bits 0..63
    std::uint16_t hi = 0;  // key bits 64..79

    bool bit(int i) const;
    /// 16-bit slice j (j = 0..4), least significant slice first.
    Word16 slice16(int j) const;
    friend bool operator==(const MasterKey80&, const MasterKey80&) = default;
};

/// Key-schedule state: the 80-bit key split into two 40-bit halves.
struct KeyState80 {
    std::uint64_t msb_half = 0;  // key bits 40..79 initially
    std::uint64_t lsb_half = 0;  // key bits 0..39 initially
    friend bool operator==(const KeyState80&, const KeyState80&) = default;
};

struct AdvanceResult {
    KeyState80 state;
    Word16 subkey = 0;
};

struct SubkeySchedule {
    std::array<Word16, kRounds> subkeys{};  // subkeys[i] = K_{i+1}
};

// 4-bit S-box (the PRESENT table), its inverse, and the 16-bit P-box.
unsigned sbox(unsigned nibble);
unsigned sbox_inv(unsigned nibble);
const std::array<std::uint8_t, 16>& sbox_table();
const std::array<std::uint8_t, 16>& sbox_inv_table();

Word16 sbox16(Word16 w);
Word16 sbox16_inv(Word16 w);

/// Bit permutation: output bit pbox_map()[i] = input bit i.
const std::array<std::uint8_t, 16>& pbox_map();
const std::array<std::uint8_t, 16>& pbox_inv_map();
Word16 pbox(Word16 w);
Word16 pbox_inv(Word16 w);

KeyState80 initial_schedule_state(const MasterKey80& key);
AdvanceResult schedule_advance(const KeyState80& state);
KeyState80 schedule_state_after(const MasterKey80& key, int advances);
SubkeySchedule derive_subkeys(const MasterKey80& key);

/// Subkey sequence realized by the mirrored circuit mode, where the
/// schedule is advanced and then inverted inside every round: K_1..K_5
/// are the key slices and every later round reuses K_6.
SubkeySchedule mirrored_subkeys(const MasterKey80& key);

Block32 encrypt_with_subkeys(Block32 pt, const SubkeySchedule& ks);
Block32 decrypt_with_subkeys(Block32 ct, const SubkeySchedule& ks);
Block32 encrypt(Block32 pt, const MasterKey80& key);
Block32 decrypt(Block32 ct, const MasterKey80& key);

// Hex I/O: blocks as 8 hex digits, keys as 20, most significant digit
// first. Parsers throw std::invalid_argument on malformed input.
std::string to_hex(Block32 b);
std::string to_hex(const MasterKey80& k);
Block32 block_from_hex(std::string_view s);
MasterKey80 key_from_hex(std::string_view s);

// Known-answer tests. File format: one `<key-hex20> <pt-hex8> <ct-hex8>`
// record per line, `#` comments, LF endings.
struct KatRecord {
    MasterKey80 key;
    Block32 pt;
    Block32 ct;
};

/// Deterministic pseudorandom vectors (mt19937_64 from `seed`); count >= 1.
std::vector<KatRecord> kat_generate(long count, std::uint64_t seed);

void write_kat(std::ostream& os, const std::vector<KatRecord>& records,
               std::uint64_t seed);

struct KatFailure {
    long line = 0;
    std::string reason;
};
struct KatVerifyResult {
    long checked = 0;
    std::vector<KatFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Replays every record through encrypt(); malformed lines and mismatched
/// ciphertexts are reported with their line numbers.
KatVerifyResult verify_kat(std::istream& is);

}  // namespace slimq::slim
