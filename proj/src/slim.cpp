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

#include "slimq/slim.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace slimq::slim {

namespace {

constexpr std::array<std::uint8_t, 16> kSbox = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0,
                                                0xA, 0xD, 0x3, 0xE, 0xF, 0x8,
                                                0x4, 0x7, 0x1, 0x2};
constexpr std::array<std::uint8_t, 16> kSboxInv = {0x5, 0xE, 0xF, 0x8, 0xC, 0x1,
                                                   0x2, 0xD, 0xB, 0x4, 0x6, 0x3,
                                                   0x0, 0x7, 0x9, 0xA};

// Cycle product (0 7 5 14 9 10 15 12 3 8 4 11)(1 13 6 2): bit i moves to
// position kPbox[i].
constexpr std::array<std::uint8_t, 16> kPbox = {7, 13, 1, 8, 11, 14, 2, 5,
                                                4, 10, 15, 0, 3, 6, 9, 12};
constexpr std::array<std::uint8_t, 16> kPboxInv = {11, 2, 6, 12, 8, 7, 13, 0,
                                                   3, 14, 9, 4, 15, 1, 5, 10};

constexpr std::uint64_t kMask40 = (std::uint64_t{1} << 40) - 1;

std::uint64_t rotl40(std::uint64_t v, int k) {
    return ((v << k) | (v >> (40 - k))) & kMask40;
}

std::uint64_t sbox40(std::uint64_t v) {
    std::uint64_t out = 0;
    for (int j = 0; j < 10; ++j) {
        out |= std::uint64_t{kSbox[(v >> (4 * j)) & 0xF]} << (4 * j);
    }
    return out;
}

Word16 permute16(Word16 w, const std::array<std::uint8_t, 16>& map) {
    Word16 out = 0;
    for (int i = 0; i < 16; ++i) {
        if (w & (Word16{1} << i)) out |= Word16(1u << map[i]);
    }
    return out;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::uint64_t parse_hex(std::string_view s, std::size_t digits,
                        std::string_view what) {
    if (s.size() != digits) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(digits) +
                                    " hex digits, got " +
                                    std::to_string(s.size()));
    }
    std::uint64_t v = 0;
    for (char c : s) {
        int d = hex_digit(c);
        if (d < 0) {
            throw std::invalid_argument(std::string(what) +
                                        ": invalid hex digit '" + c + "'");
        }
        v = (v << 4) | static_cast<unsigned>(d);
    }
    return v;
}

constexpr char kHexDigits[] = "0123456789ABCDEF";

}  // namespace

bool MasterKey80::bit(int i) const {
    if (i < 64) return (lo >> i) & 1;
    return (hi >> (i - 64)) & 1;
}

Word16 MasterKey80::slice16(int j) const {
    if (j < 4) return static_cast<Word16>(lo >> (16 * j));
    return hi;
}

unsigned sbox(unsigned nibble) { return kSbox[nibble & 0xF]; }
unsigned sbox_inv(unsigned nibble) { return kSboxInv[nibble & 0xF]; }
const std::array<std::uint8_t, 16>& sbox_table() { return kSbox; }
const std::array<std::uint8_t, 16>& sbox_inv_table() { return kSboxInv; }
const std::array<std::uint8_t, 16>& pbox_map() { return kPbox; }
const std::array<std::uint8_t, 16>& pbox_inv_map() { return kPboxInv; }

Word16 sbox16(Word16 w) {
    Word16 out = 0;
    for (int j = 0; j < 4; ++j) {
        out |= Word16(kSbox[(w >> (4 * j)) & 0xF] << (4 * j));
    }
    return out;
}

Word16 sbox16_inv(Word16 w) {
    Word16 out = 0;
    for (int j = 0; j < 4; ++j) {
        out |= Word16(kSboxInv[(w >> (4 * j)) & 0xF] << (4 * j));
    }
    return out;
}

Word16 pbox(Word16 w) { return permute16(w, kPbox); }
Word16 pbox_inv(Word16 w) { return permute16(w, kPboxInv); }

KeyState80 initial_schedule_state(const MasterKey80& key) {
    KeyState80 s;
    s.lsb_half = key.lo & kMask40;
    s.msb_half = (key.lo >> 40) | (std::uint64_t{key.hi} << 24);
    return s;
}

AdvanceResult schedule_advance(const KeyState80& state) {
    const std::uint64_t t = rotl40(state.lsb_half, 2) ^ state.msb_half;
    const std::uint64_t s = sbox40(t);
    const std::uint64_t msb = rotl40(state.msb_half, 3) ^ s;
    AdvanceResult r;
    r.state.msb_half = msb;
    r.state.lsb_half = s;
    r.subkey = static_cast<Word16>(msb & 0xFFFF);
    return r;
}

KeyState80 schedule_state_after(const MasterKey80& key, int advances) {
    KeyState80 s = initial_schedule_state(key);
    for (int i = 0; i < advances; ++i) s = schedule_advance(s).state;
    return s;
}

SubkeySchedule derive_subkeys(const MasterKey80& key) {
    SubkeySchedule ks;
    for (int i = 0; i < 5; ++i) ks.subkeys[i] = key.slice16(i);
    KeyState80 state = initial_schedule_state(key);
    for (int i = 5; i < kRounds; ++i) {
        AdvanceResult r = schedule_advance(state);
        state = r.state;
        ks.subkeys[i] = r.subkey;
    }
    return ks;
}

SubkeySchedule mirrored_subkeys(const MasterKey80& key) {
    SubkeySchedule ks;
    for (int i = 0; i < 5; ++i) ks.subkeys[i] = key.slice16(i);
    const Word16 k6 = schedule_advance(initial_schedule_state(key)).subkey;
    for (int i = 5; i < kRounds; ++i) ks.subkeys[i] = k6;
    return ks;
}

Block32 encrypt_with_subkeys(Block32 pt, const SubkeySchedule& ks) {
    Word16 u = pt.up;
    Word16 d = pt.down;
    for (int i = 0; i < kRounds; ++i) {
        const Word16 f = pbox(sbox16(static_cast<Word16>(ks.subkeys[i] ^ d)));
        const Word16 nd = static_cast<Word16>(u ^ f);
        u = d;
        d = nd;
    }
    return {u, d};
}

Block32 decrypt_with_subkeys(Block32 ct, const SubkeySchedule& ks) {
    Word16 u = ct.up;
    Word16 d = ct.down;
    for (int i = kRounds - 1; i >= 0; --i) {
        const Word16 pd = u;
        const Word16 f = pbox(sbox16(static_cast<Word16>(ks.subkeys[i] ^ pd)));
        u = static_cast<Word16>(d ^ f);
        d = pd;
    }
    return {u, d};
}

Block32 encrypt(Block32 pt, const MasterKey80& key) {
    return encrypt_with_subkeys(pt, derive_subkeys(key));
}

Block32 decrypt(Block32 ct, const MasterKey80& key) {
    return decrypt_with_subkeys(ct, derive_subkeys(key));
}

std::string to_hex(Block32 b) {
    const std::uint32_t v = to_u32(b);
    std::string s(8, '0');
    for (int i = 0; i < 8; ++i) s[i] = kHexDigits[(v >> (28 - 4 * i)) & 0xF];
    return s;
}

std::string to_hex(const MasterKey80& k) {
    std::string s(20, '0');
    for (int i = 0; i < 4; ++i) s[i] = kHexDigits[(k.hi >> (12 - 4 * i)) & 0xF];
    for (int i = 0; i < 16; ++i) {
        s[4 + i] = kHexDigits[(k.lo >> (60 - 4 * i)) & 0xF];
    }
    return s;
}

Block32 block_from_hex(std::string_view s) {
    return block_from_u32(static_cast<std::uint32_t>(parse_hex(s, 8, "block")));
}

MasterKey80 key_from_hex(std::string_view s) {
    if (s.size() != 20) {
        throw std::invalid_argument("key: expected 20 hex digits, got " +
                                    std::to_string(s.size()));
    }
    MasterKey80 k;
    k.hi = static_cast<std::uint16_t>(parse_hex(s.substr(0, 4), 4, "key"));
    k.lo = parse_hex(s.substr(4), 16, "key");
    return k;
}

std::vector<KatRecord> kat_generate(long count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("kat count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<KatRecord> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        KatRecord r;
        r.key.lo = rng();
        r.key.hi = static_cast<std::uint16_t>(rng() & 0xFFFF);
        r.pt = block_from_u32(static_cast<std::uint32_t>(rng()));
        r.ct = encrypt(r.pt, r.key);
        out.push_back(r);
    }
    return out;
}

void write_kat(std::ostream& os, const std::vector<KatRecord>& records,
               std::uint64_t seed) {
    os << "# slim kat v1 generator=mt19937_64 seed=" << seed
       << " count=" << records.size() << "\n";
    os << "# <key-hex20> <pt-hex8> <ct-hex8>\n";
    for (const KatRecord& r : records) {
        os << to_hex(r.key) << ' ' << to_hex(r.pt) << ' ' << to_hex(r.ct)
           << "\n";
    }
}

KatVerifyResult verify_kat(std::istream& is) {
    KatVerifyResult result;
    std::string line;
    long line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key_s, pt_s, ct_s, extra;
        if (!(ls >> key_s)) continue;  // blank or comment-only line
        if (!(ls >> pt_s >> ct_s) || (ls >> extra)) {
            result.failures.push_back(
                {line_no, "expected `<key> <pt> <ct>` fields"});
            continue;
        }
        try {
            const MasterKey80 key = key_from_hex(key_s);
            const Block32 pt = block_from_hex(pt_s);
            const Block32 ct = block_from_hex(ct_s);
            ++result.checked;
            const Block32 got = encrypt(pt, key);
            if (!(got == ct)) {
                result.failures.push_back(
                    {line_no, "ciphertext mismatch: expected " + to_hex(ct) +
                                  ", computed " + to_hex(got)});
            }
        } catch (const std::invalid_argument& e) {
            result.failures.push_back({line_no, e.what()});
        }
    }
    return result;
}

}  // namespace slimq::slim
