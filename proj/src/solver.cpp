#include "liminal/solver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace liminal {

namespace {

struct BudgetExceeded {};

struct StateKey {
    Bits burned;
    Bits selectable;  // revealed \ burned; the revealed status of burned
                      // vertices never affects future play

    bool operator==(const StateKey& o) const {
        return burned == o.burned && selectable == o.selectable;
    }
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        return k.burned.hash() * 0x9e3779b97f4a7c15ull ^ k.selectable.hash();
    }
};

struct RoundKey {
    int round;
    StateKey state;
    bool operator==(const RoundKey& o) const { return round == o.round && state == o.state; }
};
struct RoundKeyHash {
    size_t operator()(const RoundKey& k) const {
        return StateKeyHash{}(k.state) + 0x51afd7ed * size_t(k.round);
    }
};

class Budget {
public:
    Budget(uint64_t node_cap, uint64_t memo_cap)
        : node_cap_(node_cap), memo_cap_(memo_cap) {}

    void tick() {
        if (++nodes_ > node_cap_) throw BudgetExceeded{};
    }
    void memo_grew(uint64_t total) const {
        if (total > memo_cap_) throw BudgetExceeded{};
    }
    uint64_t nodes() const { return nodes_.load(); }

private:
    std::atomic<uint64_t> nodes_{0};
    uint64_t node_cap_, memo_cap_;
};

// Enumerates all `required`-subsets of `pool`. With dominance on, doomed
// vertices are grouped into interchangeability classes and only canonical
// representatives are generated.
class RevealEnumerator {
public:
    RevealEnumerator(const Graph& g, const Bits& burned, const Bits& pool, int required,
                     bool dominance)
        : g_(g), n_(g.n()), required_(required) {
        if (!dominance) {
            groups_.push_back(pool.to_vector());
            return;
        }
        Bits front = g.expand(burned);           // burned ∪ N(burned)
        Bits doomed = pool & front;
        Bits live = minus(pool, front);
        groups_.push_back(live.to_vector());     // group 0: singleton-free choices
        // classes of doomed vertices keyed by N(v) \ front
        std::vector<std::pair<Bits, std::vector<int>>> classes;
        doomed.for_each([&](int v) {
            Bits sig = minus(g.neighbors(v), front);
            for (auto& [csig, members] : classes)
                if (csig == sig) {
                    members.push_back(v);
                    return;
                }
            classes.emplace_back(std::move(sig), std::vector<int>{v});
        });
        for (auto& [sig, members] : classes) groups_.push_back(std::move(members));
    }

    // f(const Bits& subset). Returns false if no legal subset exists
    // (required larger than the pool, which callers exclude).
    template <class F>
    void for_each_subset(F&& f) {
        Bits chosen(n_);
        descend(0, required_, chosen, f);
    }

private:
    template <class F>
    void descend(size_t gi, int remaining, Bits& chosen, F&& f) {
        if (remaining == 0) {
            f(const_cast<const Bits&>(chosen));
            return;
        }
        if (gi >= groups_.size()) return;
        int avail_here = (int)groups_[gi].size();
        int avail_later = 0;
        for (size_t j = gi + 1; j < groups_.size(); ++j) avail_later += (int)groups_[j].size();
        if (gi == 0) {
            // plain vertices: true combinations
            combos(0, remaining, avail_later, chosen, f);
        } else {
            // doomed class: taking c members means taking the first c
            int lo = std::max(0, remaining - avail_later);
            int hi = std::min(remaining, avail_here);
            for (int c = lo; c <= hi; ++c) {
                for (int i = 0; i < c; ++i) chosen.set(groups_[gi][i]);
                descend(gi + 1, remaining - c, chosen, f);
                for (int i = 0; i < c; ++i) chosen.reset(groups_[gi][i]);
            }
        }
    }

    template <class F>
    void combos(size_t idx, int remaining, int avail_later, Bits& chosen, F&& f) {
        const std::vector<int>& pool = groups_[0];
        if ((int)(pool.size() - idx) + avail_later < remaining) return;
        if (remaining == 0 || idx == pool.size()) {
            descend(1, remaining, chosen, f);
            return;
        }
        chosen.set(pool[idx]);
        combos(idx + 1, remaining - 1, avail_later, chosen, f);
        chosen.reset(pool[idx]);
        combos(idx + 1, remaining, avail_later, chosen, f);
    }

    const Graph& g_;
    int n_;
    int required_;
    std::vector<std::vector<int>> groups_;  // [0] = live vertices, rest = doomed classes
};

class LiminalSearch {
public:
    LiminalSearch(const Graph& g, int k, const SolveOptions& opts, Budget& budget)
        : g_(g), k_(k), opts_(opts), budget_(budget), full_(g.full_set()) {}

    // Post-propagation (or round-1) pre-reveal value: rounds remaining
    // including the current one. burned must not be full.
    int value(const Bits& burned, const Bits& revealed) {
        budget_.tick();
        StateKey key{burned, minus(revealed, burned)};
        if (opts_.use_memo) {
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        Bits unlit = (burned | revealed).complement();
        int required = std::min(k_, unlit.count());
        int best;
        if (required == 0) {
            // no reveal possible; the Arsonist burns from the leftovers
            best = burn_phase(burned, revealed, key.selectable);
        } else {
            best = -1;
            RevealEnumerator en(g_, burned, unlit, required, opts_.use_dominance);
            en.for_each_subset([&](const Bits& s) {
                Bits revealed2 = revealed | s;
                const Bits& pool =
                    opts_.strict_arsonist ? s : minus(revealed2, burned);
                int v = burn_phase(burned, revealed2, pool);
                if (v > best) best = v;
            });
        }

        if (opts_.use_memo) {
            memo_.emplace(std::move(key), best);
            budget_.memo_grew(memo_.size());
        }
        return best;
    }

    // min over burns in `pool` (nonempty) of the finished-round value.
    int burn_phase(const Bits& burned, const Bits& revealed, const Bits& pool) {
        int best = 1 << 30;
        Bits front = g_.expand(burned);
        pool.for_each([&](int v) {
            if (best == 1) return;
            Bits b1 = burned;
            b1.set(v);
            if (b1.full()) {
                best = 1;
                return;
            }
            Bits b2 = front | g_.neighbors(v);
            b2.set(v);
            if (b2.full()) {
                best = std::min(best, 2);
                return;
            }
            best = std::min(best, 1 + value(b2, revealed));
        });
        return best;
    }

    uint64_t memo_entries() const { return memo_.size(); }
    const std::unordered_map<StateKey, int, StateKeyHash>& memo() const { return memo_; }

private:
    const Graph& g_;
    int k_;
    const SolveOptions& opts_;
    Budget& budget_;
    Bits full_;
    std::unordered_map<StateKey, int, StateKeyHash> memo_;
};

// Reconstructs a principal variation from a completed memoized search:
// lexicographically smallest optimal reveal, then smallest optimal burn.
Transcript extract_pv(const Graph& g, int k, const SolveOptions& opts, LiminalSearch& search,
                      int game_value) {
    Transcript t;
    t.graph_spec = opts.graph_spec;
    t.k = k;
    t.strict_arsonist = opts.strict_arsonist;
    t.length = game_value;

    Bits burned = g.empty_set(), revealed = g.empty_set();
    int remaining = game_value;
    for (int round = 1; remaining > 0; ++round) {
        RoundRecord rec;
        if (round >= 2) {
            Bits before = burned;
            burned = g.expand(burned);
            minus(burned, before).for_each([&](int v) { rec.propagated.push_back(v); });
            if (burned.full()) {
                t.rounds.push_back(std::move(rec));
                break;
            }
        }
        Bits unlit = (burned | revealed).complement();
        int required = std::min(k, unlit.count());

        Bits best_reveal = g.empty_set();
        int best_burn = -1;
        bool found = false;
        auto consider = [&](const Bits& s) {
            if (found) return;
            Bits revealed2 = revealed | s;
            Bits pool = opts.strict_arsonist && s.any() ? s : minus(revealed2, burned);
            // Arsonist's optimal reply under this reveal
            int best = 1 << 30, arg = -1;
            pool.for_each([&](int v) {
                Bits b1 = burned;
                b1.set(v);
                int val;
                if (b1.full()) {
                    val = 1;
                } else {
                    Bits b2 = g.expand(b1);
                    val = b2.full() ? 2 : 1 + search.value(b2, revealed2);
                }
                if (val < best) {
                    best = val;
                    arg = v;
                }
            });
            if (best == remaining) {
                found = true;
                best_reveal = s;
                best_burn = arg;
            }
        };
        if (required == 0) {
            consider(g.empty_set());
        } else {
            RevealEnumerator en(g, burned, unlit, required, /*dominance=*/false);
            en.for_each_subset(consider);
        }
        if (!found) throw std::logic_error("pv extraction lost the optimal line");

        best_reveal.for_each([&](int v) { rec.revealed.push_back(v); });
        revealed |= best_reveal;
        rec.burned = best_burn;
        burned.set(best_burn);
        t.rounds.push_back(std::move(rec));
        remaining -= 1;
        if (burned.full()) break;
    }
    return t;
}

}  // namespace

SolveResult solve_liminal(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n() > opts.state_width_cap)
        throw std::invalid_argument("graph exceeds the configured state-width cap");
    SolveOptions o = opts;
    if (o.emit_pv) {
        o.threads = 1;
        o.use_memo = true;
    }

    Budget budget(o.node_budget, o.memo_budget);
    SolveResult res;
    try {
        Bits b0 = g.empty_set(), r0 = g.empty_set();
        Bits unlit = g.full_set();
        int required = std::min(k, g.n());

        if (o.threads <= 1) {
            LiminalSearch search(g, k, o, budget);
            res.value = search.value(b0, r0);
            res.memo_entries = search.memo_entries();
            res.complete = true;
            if (o.emit_pv) {
                try {
                    res.pv = extract_pv(g, k, o, search, res.value);
                } catch (BudgetExceeded&) {
                    // value stands; only the variation was lost to the budget
                }
            }
        } else {
            // Root-level Saboteur subsets in parallel, one memo shard per
            // worker. Values are exact either way; only speed differs.
            std::vector<Bits> roots;
            RevealEnumerator en(g, b0, unlit, required, o.use_dominance);
            en.for_each_subset([&](const Bits& s) { roots.push_back(s); });

            std::atomic<size_t> next{0};
            std::atomic<int> best{-1};
            std::atomic<uint64_t> memo_total{0};
            std::atomic<bool> blown{false};
            auto worker = [&] {
                LiminalSearch search(g, k, o, budget);
                try {
                    while (true) {
                        size_t i = next.fetch_add(1);
                        if (i >= roots.size()) break;
                        Bits revealed2 = r0 | roots[i];
                        const Bits& pool = o.strict_arsonist ? roots[i] : revealed2;
                        int v = search.burn_phase(b0, revealed2, pool);
                        int cur = best.load();
                        while (v > cur && !best.compare_exchange_weak(cur, v)) {
                        }
                    }
                } catch (BudgetExceeded&) {
                    blown = true;
                }
                memo_total += search.memo_entries();
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < o.threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            if (blown) throw BudgetExceeded{};
            res.value = best.load();
            res.memo_entries = memo_total.load();
            res.complete = true;
        }
    } catch (BudgetExceeded&) {
        res.complete = false;
    }
    res.nodes = budget.nodes();
    if (res.complete && (res.value < 1 || res.value > g.n()))
        throw std::logic_error("solver value out of range");
    return res;
}

// --- single-player processes ----------------------------------------------

namespace {

// maximize=false: burning; maximize=true: cooling.
class ProcessSearch {
public:
    ProcessSearch(const Graph& g, bool maximize, Budget& budget)
        : g_(g), maximize_(maximize), budget_(budget) {}

    int value(const Bits& burned) {
        budget_.tick();
        auto it = memo_.find(burned);
        if (it != memo_.end()) return it->second;
        int best = maximize_ ? -1 : (1 << 30);
        Bits front = g_.expand(burned);
        burned.complement().for_each([&](int v) {
            Bits b1 = burned;
            b1.set(v);
            int val;
            if (b1.full()) {
                val = 1;
            } else {
                Bits b2 = front | g_.neighbors(v);
                b2.set(v);
                val = b2.full() ? 2 : 1 + value(b2);
            }
            best = maximize_ ? std::max(best, val) : std::min(best, val);
        });
        memo_.emplace(burned, best);
        budget_.memo_grew(memo_.size());
        return best;
    }

    uint64_t memo_entries() const { return memo_.size(); }

private:
    const Graph& g_;
    bool maximize_;
    Budget& budget_;
    std::unordered_map<Bits, int, BitsHash> memo_;
};

SolveResult solve_process(const Graph& g, bool maximize, const SolveOptions& opts) {
    Budget budget(opts.node_budget, opts.memo_budget);
    SolveResult res;
    try {
        ProcessSearch search(g, maximize, budget);
        res.value = search.value(g.empty_set());
        res.memo_entries = search.memo_entries();
        res.complete = true;
    } catch (BudgetExceeded&) {
        res.complete = false;
    }
    res.nodes = budget.nodes();
    return res;
}

}  // namespace

SolveResult solve_burning(const Graph& g, const SolveOptions& opts) {
    return solve_process(g, /*maximize=*/false, opts);
}

SolveResult solve_cooling(const Graph& g, const SolveOptions& opts) {
    return solve_process(g, /*maximize=*/true, opts);
}

// --- fixed-strategy evaluation ---------------------------------------------

namespace {

class FixedSaboteurSearch {
public:
    FixedSaboteurSearch(const Graph& g, int k, const SaboteurStrategy& sab,
                        const SolveOptions& opts, Budget& budget)
        : g_(g), k_(k), sab_(sab), opts_(opts), budget_(budget) {}

    int value(int round, const Bits& burned, const Bits& revealed) {
        budget_.tick();
        RoundKey key{round, {burned, minus(revealed, burned)}};
        if (opts_.use_memo) {
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        GameState s{burned, revealed, round, Phase::PreReveal};
        RevealOptions ro = reveal_options(g_, s, k_);
        Bits reveal = g_.empty_set();
        if (ro.required > 0) {
            reveal = sab_.reveal(g_, s, k_, ro);
            if (!reveal.is_subset_of(ro.pool) || reveal.count() != ro.required)
                throw IllegalMove("fixed saboteur returned an illegal reveal at round " +
                                  std::to_string(round));
        }
        Bits revealed2 = revealed | reveal;
        Bits pool = opts_.strict_arsonist && reveal.any() ? reveal : minus(revealed2, burned);

        int best = 1 << 30;
        pool.for_each([&](int v) {
            if (best == 1) return;
            Bits b1 = burned;
            b1.set(v);
            if (b1.full()) {
                best = 1;
                return;
            }
            Bits r2 = revealed2;
            if (round == 1 && sab_.relabel_after_round1) {
                GameState after{b1, r2, 2, Phase::PrePropagation};
                if (auto perm = sab_.relabel_after_round1(g_, after)) {
                    b1 = apply_permutation(b1, *perm);
                    r2 = apply_permutation(r2, *perm);
                }
            }
            Bits b2 = g_.expand(b1);
            int val = b2.full() ? 2 : 1 + value(round + 1, b2, r2);
            best = std::min(best, val);
        });

        if (opts_.use_memo) {
            memo_.emplace(std::move(key), best);
            budget_.memo_grew(memo_.size());
        }
        return best;
    }

    uint64_t memo_entries() const { return memo_.size(); }

private:
    const Graph& g_;
    int k_;
    const SaboteurStrategy& sab_;
    const SolveOptions& opts_;
    Budget& budget_;
    std::unordered_map<RoundKey, int, RoundKeyHash> memo_;
};

class FixedArsonistSearch {
public:
    FixedArsonistSearch(const Graph& g, int k, const ArsonistStrategy& ars,
                        const SolveOptions& opts, const std::optional<Bits>& pool_limit,
                        Budget& budget)
        : g_(g), k_(k), ars_(ars), opts_(opts), pool_limit_(pool_limit), budget_(budget) {}

    int value(int round, const Bits& burned, const Bits& revealed) {
        budget_.tick();
        RoundKey key{round, {burned, minus(revealed, burned)}};
        if (opts_.use_memo) {
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        Bits unlit = (burned | revealed).complement();
        int required = std::min(k_, unlit.count());
        int best = -1;

        auto consider = [&](const Bits& s) {
            Bits revealed2 = revealed | s;
            Bits pool = opts_.strict_arsonist && s.any() ? s : minus(revealed2, burned);
            GameState st{burned, revealed2, round, Phase::PreBurn};
            std::optional<int> v = ars_.burn(g_, st, pool);
            if (!v || !pool.test(*v))
                throw IllegalMove("fixed arsonist returned an illegal move at round " +
                                  std::to_string(round));
            Bits b1 = burned;
            b1.set(*v);
            int val;
            if (b1.full()) {
                val = 1;
            } else {
                Bits b2 = g_.expand(b1);
                val = b2.full() ? 2 : 1 + value(round + 1, b2, revealed2);
            }
            best = std::max(best, val);
        };

        if (required == 0) {
            consider(g_.empty_set());
        } else if (!pool_limit_) {
            RevealEnumerator en(g_, burned, unlit, required, opts_.use_dominance);
            en.for_each_subset(consider);
        } else {
            Bits inside = unlit & *pool_limit_;
            int avail = inside.count();
            if (avail >= required) {
                RevealEnumerator en(g_, burned, inside, required, opts_.use_dominance);
                en.for_each_subset(consider);
            } else {
                // forced to pad with the smallest unlit vertices outside the pool
                Bits s = inside;
                Bits outside = minus(unlit, *pool_limit_);
                int need = required - avail;
                outside.for_each([&](int v) {
                    if (need > 0) {
                        s.set(v);
                        --need;
                    }
                });
                consider(s);
            }
        }

        if (opts_.use_memo) {
            memo_.emplace(std::move(key), best);
            budget_.memo_grew(memo_.size());
        }
        return best;
    }

    uint64_t memo_entries() const { return memo_.size(); }

private:
    const Graph& g_;
    int k_;
    const ArsonistStrategy& ars_;
    const SolveOptions& opts_;
    std::optional<Bits> pool_limit_;
    Budget& budget_;
    std::unordered_map<RoundKey, int, RoundKeyHash> memo_;
};

}  // namespace

SolveResult value_fixed_saboteur(const Graph& g, int k, const SaboteurStrategy& sab,
                                 const SolveOptions& opts) {
    Budget budget(opts.node_budget, opts.memo_budget);
    SolveResult res;
    try {
        FixedSaboteurSearch search(g, k, sab, opts, budget);
        res.value = search.value(1, g.empty_set(), g.empty_set());
        res.memo_entries = search.memo_entries();
        res.complete = true;
    } catch (BudgetExceeded&) {
        res.complete = false;
    }
    res.nodes = budget.nodes();
    return res;
}

FixedArsonistResult value_fixed_arsonist(const Graph& g, int k, const ArsonistStrategy& ars,
                                         const SolveOptions& opts,
                                         const std::optional<Bits>& saboteur_pool) {
    Budget budget(opts.node_budget, opts.memo_budget);
    FixedArsonistResult out;
    out.certificate = !saboteur_pool.has_value();
    try {
        FixedArsonistSearch search(g, k, ars, opts, saboteur_pool, budget);
        out.result.value = search.value(1, g.empty_set(), g.empty_set());
        out.result.memo_entries = search.memo_entries();
        out.result.complete = true;
    } catch (BudgetExceeded&) {
        out.result.complete = false;
    }
    out.result.nodes = budget.nodes();
    return out;
}

std::vector<int> optimal_cooling_sequence(const Graph& g) {
    Budget budget(SolveOptions{}.node_budget, SolveOptions{}.memo_budget);
    ProcessSearch search(g, /*maximize=*/true, budget);
    int remaining = search.value(g.empty_set());

    std::vector<int> seq;
    Bits b = g.empty_set();
    while (true) {
        int pick = -1;
        for (int v = 0; v < g.n() && pick < 0; ++v) {
            if (b.test(v)) continue;
            Bits b1 = b;
            b1.set(v);
            int val;
            if (b1.full()) {
                val = 1;
            } else {
                Bits b2 = g.expand(b1);
                val = b2.full() ? 2 : 1 + search.value(b2);
            }
            if (val == remaining) pick = v;
        }
        if (pick < 0) throw std::logic_error("cooling sequence extraction lost the line");
        seq.push_back(pick);
        Bits b1 = b;
        b1.set(pick);
        if (b1.full()) break;
        Bits b2 = g.expand(b1);
        if (b2.full()) break;
        b = b2;
        remaining -= 1;
    }
    return seq;
}

ArsonistStrategy solver_arsonist(const Graph& g, int k, const SolveOptions& opts) {
    // The graph must outlive the strategy.
    struct Bundle {
        SolveOptions opts;
        Budget budget;
        LiminalSearch search;
        Bundle(const Graph& g, int k, const SolveOptions& o)
            : opts(o), budget(o.node_budget, o.memo_budget), search(g, k, opts, budget) {}
    };
    auto bundle = std::make_shared<Bundle>(g, k, opts);

    ArsonistStrategy a;
    a.name = "solver";
    a.burn = [bundle](const Graph& g2, const GameState& st,
                      const Bits& selectable) -> std::optional<int> {
        if (selectable.none()) return std::nullopt;
        try {
            int best = 1 << 30, arg = -1;
            selectable.for_each([&](int v) {
                Bits b1 = st.burned;
                b1.set(v);
                int val;
                if (b1.full()) {
                    val = 1;
                } else {
                    Bits b2 = g2.expand(b1);
                    val = b2.full() ? 2 : 1 + bundle->search.value(b2, st.revealed);
                }
                if (val < best) {
                    best = val;
                    arg = v;
                }
            });
            return arg;
        } catch (BudgetExceeded&) {
            throw std::runtime_error("solver-opponent budget exceeded");
        }
    };
    return a;
}

int max_cooling_sequence(const Graph& g) {
    if (g.n() > 24) throw std::invalid_argument("max_cooling_sequence: graph too large");
    const auto& d = g.distances();
    std::vector<int> seq;
    int best = 0;
    auto extend = [&](auto&& self) -> void {
        best = std::max(best, (int)seq.size());
        int p = (int)seq.size() + 1;  // 1-based position of the next entry
        for (int v = 0; v < g.n(); ++v) {
            bool ok = true;
            for (int i = 0; i < (int)seq.size() && ok; ++i)
                ok = d[seq[i]][v] >= p - (i + 1) + 1;
            if (!ok) continue;
            seq.push_back(v);
            self(self);
            seq.pop_back();
        }
    };
    extend(extend);
    return best;
}

}  // namespace liminal
