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

#include "slimq/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "slimq/simulate.hpp"

namespace slimq::synth {

namespace {

// Permutations of {0..15} packed as 16 nibbles: nibble i = image of i.
using PackedPerm = std::uint64_t;
constexpr PackedPerm kPackedIdentity = 0xFEDCBA9876543210ull;

PackedPerm pack(const Perm16& p) {
    PackedPerm out = 0;
    for (int i = 0; i < 16; ++i) out |= PackedPerm(p[i]) << (4 * i);
    return out;
}

struct AlphaGate {
    ir::Gate gate;
    std::array<std::uint8_t, 16> map;  // action on 4-bit values
    std::uint8_t kind = 0;             // 0 = X, 1 = CX, 2 = CCX
    std::uint8_t cost = 1;
};

std::uint8_t apply_value(const ir::Gate& g, std::uint8_t v) {
    switch (g.kind) {
        case ir::GateKind::X:
            return v ^ (1u << g.w[0]);
        case ir::GateKind::CX:
            return v ^ (((v >> g.w[0]) & 1u) << g.w[1]);
        case ir::GateKind::CCX:
            return v ^ ((((v >> g.w[0]) & (v >> g.w[1])) & 1u) << g.w[2]);
        default:
            return v;
    }
}

std::vector<AlphaGate> make_alpha4() {
    std::vector<AlphaGate> out;
    for (const ir::Gate& g : gate_alphabet(4)) {
        AlphaGate ag;
        ag.gate = g;
        for (int v = 0; v < 16; ++v) {
            ag.map[v] = apply_value(g, static_cast<std::uint8_t>(v));
        }
        switch (g.kind) {
            case ir::GateKind::X:
                ag.kind = 0;
                ag.cost = 1;
                break;
            case ir::GateKind::CX:
                ag.kind = 1;
                ag.cost = 1;
                break;
            default:
                ag.kind = 2;
                ag.cost = 5;
                break;
        }
        out.push_back(ag);
    }
    return out;
}

PackedPerm apply(PackedPerm p, const std::array<std::uint8_t, 16>& m) {
    PackedPerm out = 0;
    for (int i = 0; i < 16; ++i) {
        out |= PackedPerm(m[(p >> (4 * i)) & 0xF]) << (4 * i);
    }
    return out;
}

// Two gates commute iff they share a target or neither gate's target is
// read by the other. Used to prune all but one ordering of adjacent
// commuting pairs; the lexicographically smallest solution is always in
// canonical order, so it survives.
bool gates_commute(const ir::Gate& a, const ir::Gate& b) {
    const int ta = a.target();
    const int tb = b.target();
    if (ta == tb) return true;
    const auto controls_contain = [](const ir::Gate& g, int wire) {
        const int n = g.operand_count() - 1;
        for (int i = 0; i < n; ++i) {
            if (g.w[i] == wire) return true;
        }
        return false;
    };
    return !controls_contain(b, ta) && !controls_contain(a, tb);
}

std::uint16_t code_of(const GateMultiset& m) {
    return static_cast<std::uint16_t>(m.x | (m.cx << 4) | (m.ccx << 8));
}

GateMultiset multiset_from_code(std::uint16_t code) {
    return {code & 0xF, (code >> 4) & 0xF, (code >> 8) & 0xF};
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct StoreEntry {
    PackedPerm key;
    std::uint32_t seq;     // gate ids, 5 bits each, first gate in high bits
    std::uint16_t mcode;
};

constexpr int kBloomBits = 26;  // 8 MiB bitset prefilter

class Searcher {
  public:
    Searcher(PackedPerm target, const SearchBudget& budget,
             std::chrono::steady_clock::time_point deadline)
        : alpha_(make_alpha4()),
          target_(target),
          budget_(budget),
          deadline_(deadline) {
        const int n = static_cast<int>(alpha_.size());
        commute_.assign(static_cast<std::size_t>(n * n), false);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                commute_[static_cast<std::size_t>(i * n + j)] =
                    gates_commute(alpha_[i].gate, alpha_[j].gate);
            }
        }
    }

    SearchStats& stats() { return stats_; }
    bool timed_out() const { return timed_out_; }

    struct Found {
        std::vector<std::uint8_t> seq;
        GateMultiset multiset;
        long cost = 0;
    };

    // One meet-in-the-middle iteration at total gate count g. Returns the
    // best in-budget solution of exactly that many gates, if any.
    std::optional<Found> run(int g) {
        fwd_len_ = (g + 1) / 2;
        back_len_ = g / 2;
        best_.reset();
        build_store();
        if (timed_out_) return std::nullopt;
        probe();
        if (timed_out_) return std::nullopt;
        return best_;
    }

  private:
    bool within_cap(const GateMultiset& used, int kind) const {
        if (!budget_.multiset) return true;
        const GateMultiset& cap = *budget_.multiset;
        switch (kind) {
            case 0:
                return used.x < cap.x;
            case 1:
                return used.cx < cap.cx;
            default:
                return used.ccx < cap.ccx;
        }
    }

    bool clock_expired() {
        if (++tick_ % 65536 != 0) return false;
        if (std::chrono::steady_clock::now() >= deadline_) {
            timed_out_ = true;
            stats_.timed_out = true;
        }
        return timed_out_;
    }

    bool skip_adjacent(int id, int neighbor) const {
        if (neighbor < 0) return false;
        if (id == neighbor) return true;  // adjacent involutions cancel
        const int n = static_cast<int>(alpha_.size());
        return id > neighbor &&
               commute_[static_cast<std::size_t>(id * n + neighbor)];
    }

    // Backward store: for every gate tail t of length back_len_,
    // key(t) = perm(t)^-1 ∘ target, built by choosing the tail from its
    // last gate toward its first.
    template <bool CountOnly>
    void back_dfs(PackedPerm p, int chosen, int next_id, GateMultiset used,
                  std::uint32_t seq_bits) {
        if (timed_out_ || clock_expired()) return;
        ++stats_.backward_nodes;
        if (chosen == back_len_) {
            if constexpr (CountOnly) {
                ++store_count_;
            } else {
                store_.push_back({p, seq_bits, code_of(used)});
                bloom_set(p);
            }
            return;
        }
        for (int id = 0; id < static_cast<int>(alpha_.size()); ++id) {
            if (skip_adjacent(id, next_id)) continue;
            const AlphaGate& ag = alpha_[id];
            if (!within_cap(used, ag.kind)) continue;
            GateMultiset next = used;
            (ag.kind == 0 ? next.x : ag.kind == 1 ? next.cx : next.ccx) += 1;
            if (!budget_.multiset &&
                next.cost() + (total_len() - chosen - 1) > budget_.max_cost) {
                continue;
            }
            back_dfs<CountOnly>(apply(p, ag.map), chosen + 1, id, next,
                                seq_bits |
                                    (std::uint32_t(id) << (5 * chosen)));
            if (timed_out_) return;
        }
    }

    void build_store() {
        store_.clear();
        store_count_ = 0;
        bloom_.assign((std::size_t{1} << kBloomBits) / 64, 0);
        if (back_len_ == 0) {
            store_.push_back({target_, 0, 0});
            bloom_set(target_);
            stats_.store_entries = 1;
            return;
        }
        back_dfs<true>(target_, 0, -1, {}, 0);
        if (timed_out_) return;
        store_.reserve(store_count_);
        const auto counting_nodes = stats_.backward_nodes;
        back_dfs<false>(target_, 0, -1, {}, 0);
        stats_.backward_nodes = counting_nodes;  // count one pass only
        if (timed_out_) return;
        std::sort(store_.begin(), store_.end(),
                  [](const StoreEntry& a, const StoreEntry& b) {
                      if (a.key != b.key) return a.key < b.key;
                      if (a.mcode != b.mcode) return a.mcode < b.mcode;
                      return a.seq < b.seq;
                  });
        store_.erase(std::unique(store_.begin(), store_.end(),
                                 [](const StoreEntry& a, const StoreEntry& b) {
                                     return a.key == b.key &&
                                            a.mcode == b.mcode;
                                 }),
                     store_.end());
        stats_.store_entries = store_.size();
    }

    void bloom_set(PackedPerm key) {
        const std::uint64_t h = mix64(key) >> (64 - kBloomBits);
        bloom_[h >> 6] |= std::uint64_t{1} << (h & 63);
    }
    bool bloom_test(PackedPerm key) const {
        const std::uint64_t h = mix64(key) >> (64 - kBloomBits);
        return (bloom_[h >> 6] >> (h & 63)) & 1;
    }

    int total_len() const { return fwd_len_ + back_len_; }

    void consider(PackedPerm p, const GateMultiset& fwd_used) {
        if (!bloom_test(p)) return;
        const auto lo = std::lower_bound(
            store_.begin(), store_.end(), p,
            [](const StoreEntry& e, PackedPerm k) { return e.key < k; });
        for (auto it = lo; it != store_.end() && it->key == p; ++it) {
            const GateMultiset back = multiset_from_code(it->mcode);
            const GateMultiset whole{fwd_used.x + back.x,
                                     fwd_used.cx + back.cx,
                                     fwd_used.ccx + back.ccx};
            if (budget_.multiset && !(whole == *budget_.multiset)) continue;
            const long c = whole.cost();
            if (c > budget_.max_cost) continue;
            ++stats_.meet_candidates;
            std::vector<std::uint8_t> seq(fwd_ids_.begin(),
                                          fwd_ids_.begin() + fwd_len_);
            for (int i = 0; i < back_len_; ++i) {
                seq.push_back(static_cast<std::uint8_t>(
                    (it->seq >> (5 * (back_len_ - 1 - i))) & 31));
            }
            if (!best_ || c < best_->cost ||
                (c == best_->cost &&
                 std::lexicographical_compare(seq.begin(), seq.end(),
                                              best_->seq.begin(),
                                              best_->seq.end()))) {
                best_ = Found{std::move(seq), whole, c};
            }
        }
    }

    void fwd_dfs(PackedPerm p, int chosen, int prev_id, GateMultiset used) {
        if (timed_out_ || clock_expired()) return;
        ++stats_.forward_nodes;
        if (chosen == fwd_len_) {
            consider(p, used);
            return;
        }
        for (int id = 0; id < static_cast<int>(alpha_.size()); ++id) {
            if (skip_adjacent(id, prev_id)) continue;
            const AlphaGate& ag = alpha_[id];
            if (!within_cap(used, ag.kind)) continue;
            GateMultiset next = used;
            (ag.kind == 0 ? next.x : ag.kind == 1 ? next.cx : next.ccx) += 1;
            if (!budget_.multiset &&
                next.cost() + (total_len() - chosen - 1) > budget_.max_cost) {
                continue;
            }
            fwd_ids_[chosen] = static_cast<std::uint8_t>(id);
            fwd_dfs(apply(p, ag.map), chosen + 1, id, next);
            if (timed_out_) return;
        }
    }

    void probe() { fwd_dfs(kPackedIdentity, 0, -1, {}); }

  public:
    const std::vector<AlphaGate>& alphabet() const { return alpha_; }

  private:
    std::vector<AlphaGate> alpha_;
    std::vector<char> commute_;
    PackedPerm target_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;

    int fwd_len_ = 0;
    int back_len_ = 0;
    std::vector<StoreEntry> store_;
    std::uint64_t store_count_ = 0;
    std::vector<std::uint64_t> bloom_;
    std::array<std::uint8_t, 16> fwd_ids_{};
    std::optional<Found> best_;
    SearchStats stats_;
    std::uint64_t tick_ = 0;
    bool timed_out_ = false;
};

ir::Circuit circuit_from_ids(const std::vector<std::uint8_t>& ids,
                             const std::vector<AlphaGate>& alpha) {
    ir::Circuit c(4);
    for (std::uint8_t id : ids) c.add(alpha[id].gate);
    return c;
}

}  // namespace

bool is_bijective(const Perm16& p) {
    std::array<bool, 16> seen{};
    for (std::uint8_t v : p) {
        if (v > 15 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm16 inverse_of(const Perm16& p) {
    Perm16 inv{};
    for (int i = 0; i < 16; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

Perm16 perm_from_hex(std::string_view hex16) {
    if (hex16.size() != 16) {
        throw std::invalid_argument("table: expected 16 hex digits, got " +
                                    std::to_string(hex16.size()));
    }
    Perm16 p{};
    for (int i = 0; i < 16; ++i) {
        const char c = hex16[static_cast<std::size_t>(i)];
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            d = c - 'A' + 10;
        } else {
            throw std::invalid_argument(std::string("table: invalid hex '") +
                                        c + "'");
        }
        p[i] = static_cast<std::uint8_t>(d);
    }
    return p;
}

std::string perm_to_hex(const Perm16& p) {
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i) s[i] = "0123456789ABCDEF"[p[i] & 0xF];
    return s;
}

std::vector<ir::Gate> gate_alphabet(int wires) {
    if (wires < 3 || wires > 5) {
        throw std::invalid_argument("gate alphabet supports 3 to 5 wires");
    }
    std::vector<ir::Gate> out;
    for (int t = 0; t < wires; ++t) out.push_back(ir::Gate::x(t));
    for (int c = 0; c < wires; ++c) {
        for (int t = 0; t < wires; ++t) {
            if (t != c) out.push_back(ir::Gate::cx(c, t));
        }
    }
    for (int c1 = 0; c1 < wires; ++c1) {
        for (int c2 = c1 + 1; c2 < wires; ++c2) {
            for (int t = 0; t < wires; ++t) {
                if (t != c1 && t != c2) out.push_back(ir::Gate::ccx(c1, c2, t));
            }
        }
    }
    return out;
}

bool verify(const ir::Circuit& c, const Perm16& target) {
    if (c.wires() != 4) return false;
    const auto table = sim::permutation_of(c);
    for (int i = 0; i < 16; ++i) {
        if (table[static_cast<std::size_t>(i)] != target[i]) return false;
    }
    return true;
}

SynthResult synthesize(const Perm16& target, const SearchBudget& budget) {
    if (!is_bijective(target)) {
        throw std::invalid_argument("synthesis target is not bijective");
    }
    if (budget.max_cost < 0 || budget.max_gates < 0) {
        throw std::invalid_argument("search budget must be non-negative");
    }
    if (budget.max_gates > 16) {
        throw std::invalid_argument("gate budgets above 16 are unsupported");
    }

    const auto start = std::chrono::steady_clock::now();
    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    budget.time_limit);
    const PackedPerm packed_target = pack(target);

    SynthResult result;
    Searcher searcher(packed_target, budget, deadline);

    const auto finish = [&](SynthStatus status,
                            std::optional<Searcher::Found> found) {
        result.status = status;
        result.stats = searcher.stats();
        result.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (found) {
            result.circuit = circuit_from_ids(found->seq, searcher.alphabet());
            result.multiset = found->multiset;
            result.cost = found->cost;
            if (!verify(*result.circuit, target)) {
                throw std::logic_error(
                    "internal error: search returned a wrong circuit");
            }
        }
        return result;
    };

    if (budget.multiset) {
        const int g = budget.multiset->total();
        if (g <= budget.max_gates &&
            budget.multiset->cost() <= budget.max_cost) {
            auto found = searcher.run(g);
            if (found) return finish(SynthStatus::found, std::move(found));
        }
        // Requested multiset unreachable: fall back to the smallest
        // in-budget circuit so the caller still gets something usable.
        SearchBudget fallback = budget;
        fallback.multiset.reset();
        Searcher fb(packed_target, fallback, deadline);
        for (int g = 0; g <= fallback.max_gates && !fb.timed_out(); ++g) {
            auto found = fb.run(g);
            if (found) {
                searcher.stats() = fb.stats();
                return finish(SynthStatus::budget_not_met, std::move(found));
            }
        }
        searcher.stats() = fb.stats();
        return finish(SynthStatus::budget_not_met, std::nullopt);
    }

    for (int g = 0; g <= budget.max_gates && !searcher.timed_out(); ++g) {
        auto found = searcher.run(g);
        if (found) return finish(SynthStatus::found, std::move(found));
    }
    return finish(SynthStatus::budget_not_met, std::nullopt);
}

}  // namespace slimq::synth
