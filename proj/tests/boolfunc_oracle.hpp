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

// Test-only oracle: the S-box and inverse S-box coordinate functions as
// sums of products over the input bits, evaluated independently of the
// lookup tables they are checked against. The product terms overlap on
// some inputs, so the sum is an OR (a literal XOR of the terms would not
// produce a bijection).

#pragma once

#include <array>
#include <cstdint>

namespace slimq_test {

struct Bits4 {
    int b0, b1, b2, b3;
};

inline Bits4 bits_of(unsigned v) {
    return {static_cast<int>(v & 1), static_cast<int>((v >> 1) & 1),
            static_cast<int>((v >> 2) & 1), static_cast<int>((v >> 3) & 1)};
}

/// Forward S-box coordinates evaluated term by term.
inline unsigned sbox_boolfunc(unsigned v) {
    const auto [x0, x1, x2, x3] = bits_of(v);
    const int n0 = !x0, n1 = !x1, n2 = !x2, n3 = !x3;
    const int y0 = (n3 & n2 & x0) | (n3 & x1 & x0) | (x3 & n2 & n0) |
                   (x3 & x1 & n0) | (x3 & x2 & n1 & x0) | (n3 & x2 & n1 & n0);
    const int y1 = (n3 & n2 & x1) | (x3 & x2 & x0) | (n3 & x1 & n0) |
                   (x3 & n2 & n1) | (x3 & n2 & n0);
    const int y2 = (x3 & x2 & n1) | (n2 & x1 & n0) | (n3 & x2 & x1 & x0) |
                   (n3 & n2 & n1) | (n2 & n1 & x0);
    const int y3 = (x3 & n2 & x1) | (x3 & n2 & x0) | (n3 & n1 & n0) |
                   (n3 & x2 & x1) | (n3 & x1 & x0);
    return static_cast<unsigned>(y0 | (y1 << 1) | (y2 << 2) | (y3 << 3));
}

/// Inverse S-box coordinates; inputs are the S-box output bits.
inline unsigned sbox_inv_boolfunc(unsigned v) {
    const auto [s0, s1, s2, s3] = bits_of(v);
    const int n0 = !s0, n1 = !s1, n2 = !s2, n3 = !s3;
    const int x0 = (n3 & n2 & n0) | (n2 & n1 & n0) | (s2 & n1 & s0) |
                   (n3 & s2 & s0) | (s3 & s2 & s1 & n0) | (s3 & n2 & s1 & s0);
    const int x1 = (n3 & n2 & n1 & s0) | (n3 & s1 & n0) | (s3 & s2 & s0) |
                   (s3 & s1 & s0) | (s3 & n2 & n0);
    const int x2 = (n3 & n2 & n1) | (n3 & n1 & n0) | (s3 & n1 & s0) |
                   (n2 & s1 & n0) | (n3 & s2 & s1 & s0);
    const int x3 = (n3 & n2 & s0) | (n3 & n2 & s1) | (s2 & s1 & s0) |
                   (s3 & s2 & s1) | (s3 & n2 & n1 & n0) | (n3 & s2 & n1 & n0);
    return static_cast<unsigned>(x0 | (x1 << 1) | (x2 << 2) | (x3 << 3));
}

/// The published PRESENT S-box table, for the cross-check.
inline constexpr std::array<std::uint8_t, 16> kPresentSbox = {
    0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
    0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

}  // namespace slimq_test
