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

#include "slimq/gatelist_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace slimq::ir {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

int parse_wire(std::string_view tok, long line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(),
                                     value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
        throw ParseError(line_no, "expected a wire index, got '" +
                                      std::string(tok) + "'");
    }
    return value;
}

}  // namespace

std::string emit_gatelist(const Circuit& c) {
    std::ostringstream os;
    os << "qubits " << c.wires() << "\n";
    for (const Gate& g : c.gates()) {
        os << kind_name(g.kind);
        for (std::uint16_t w : g.operands()) os << ' ' << w;
        os << "\n";
    }
    return os.str();
}

Circuit parse_gatelist(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string raw;
    long line_no = 0;
    bool header_seen = false;
    Circuit circuit;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto toks = split_tokens(line);
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks[0] != "qubits" || toks.size() != 2) {
                throw ParseError(line_no, "expected `qubits N` header");
            }
            const int n = parse_wire(toks[1], line_no);
            if (n < 1) throw ParseError(line_no, "qubit count must be >= 1");
            circuit = Circuit(n);
            header_seen = true;
            continue;
        }
        try {
            if (toks[0] == "X" && toks.size() == 2) {
                circuit.add(Gate::x(parse_wire(toks[1], line_no)));
            } else if (toks[0] == "CX" && toks.size() == 3) {
                circuit.add(Gate::cx(parse_wire(toks[1], line_no),
                                     parse_wire(toks[2], line_no)));
            } else if (toks[0] == "CCX" && toks.size() == 4) {
                circuit.add(Gate::ccx(parse_wire(toks[1], line_no),
                                      parse_wire(toks[2], line_no),
                                      parse_wire(toks[3], line_no)));
            } else if (toks[0] == "SWAP" && toks.size() == 3) {
                circuit.add(Gate::swap(parse_wire(toks[1], line_no),
                                       parse_wire(toks[2], line_no)));
            } else {
                throw ParseError(line_no, "unknown gate line '" +
                                              std::string(toks[0]) + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!header_seen) throw ParseError(line_no, "missing `qubits N` header");
    return circuit;
}

std::string emit_openqasm2(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.wires() << "];\n";
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
                os << "x q[" << g.w[0] << "];\n";
                break;
            case GateKind::CX:
                os << "cx q[" << g.w[0] << "], q[" << g.w[1] << "];\n";
                break;
            case GateKind::CCX:
                os << "ccx q[" << g.w[0] << "], q[" << g.w[1] << "], q["
                   << g.w[2] << "];\n";
                break;
            case GateKind::Swap:
                os << "swap q[" << g.w[0] << "], q[" << g.w[1] << "];\n";
                break;
        }
    }
    return os.str();
}

}  // namespace slimq::ir
