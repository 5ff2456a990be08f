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

#include "slimq/util.hpp"

namespace slimq {

std::string fnv1a64_hex(std::string_view data) {
    const std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) {
        out[i] = "0123456789abcdef"[(h >> (60 - 4 * i)) & 0xF];
    }
    return out;
}

}  // namespace slimq
