#include "liminal/game.hpp"

#include <algorithm>

namespace liminal {

GameState propagate(const Graph& g, const GameState& s) {
    if (s.phase != Phase::PrePropagation) throw IllegalMove("propagate: wrong phase");
    GameState t = s;
    t.burned = g.expand(s.burned);
    t.phase = Phase::PreReveal;
    return t;
}

RevealOptions reveal_options(const Graph& g, const GameState& s, int k) {
    (void)g;
    if (s.phase != Phase::PreReveal) throw IllegalMove("reveal_options: wrong phase");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Bits pool = s.unlit();
    return RevealOptions{std::min(k, pool.count()), std::move(pool)};
}

GameState apply_reveal(const Graph& g, const GameState& s, int k, const Bits& r) {
    RevealOptions opts = reveal_options(g, s, k);
    if (!r.is_subset_of(opts.pool)) throw IllegalMove("reveal of a lit vertex");
    if (r.count() != opts.required) throw IllegalMove("reveal of wrong cardinality");
    GameState t = s;
    t.revealed |= r;
    t.phase = Phase::PreBurn;
    return t;
}

GameState apply_burn(const Graph& g, const GameState& s, std::optional<int> v,
                     const Bits& legal_pool) {
    (void)g;
    if (s.phase != Phase::PreBurn) throw IllegalMove("apply_burn: wrong phase");
    GameState t = s;
    if (v) {
        if (*v < 0 || *v >= s.burned.size() || !legal_pool.test(*v))
            throw IllegalMove("burn outside the legal pool");
        t.burned.set(*v);
    } else if (legal_pool.any()) {
        throw IllegalMove("pass while a burnable vertex is available");
    }
    t.round = s.round + 1;
    t.phase = Phase::PrePropagation;
    return t;
}

Bits apply_permutation(const Bits& s, const std::vector<int>& perm) {
    Bits r(s.size());
    s.for_each([&](int v) { r.set(perm[v]); });
    return r;
}

static void validate_permutation(const Graph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.n()) throw IllegalMove("relabel: wrong permutation size");
    std::vector<char> seen(g.n(), 0);
    for (int p : perm) {
        if (p < 0 || p >= g.n() || seen[p]) throw IllegalMove("relabel: not a permutation");
        seen[p] = 1;
    }
}

Transcript play(const Graph& g, int k, const SaboteurStrategy& sab, const ArsonistStrategy& ars,
                const PlayOptions& opts) {
    Transcript t;
    t.graph_spec = opts.graph_spec;
    t.k = k;
    t.strict_arsonist = opts.strict_arsonist;

    GameState s = GameState::initial(g);
    int max_rounds = 2 * g.n() + 2;
    while (true) {
        RoundRecord rec;
        if (s.round > max_rounds)
            throw std::runtime_error("game exceeded 2n rounds without finishing");

        if (s.round >= 2) {
            Bits before = s.burned;
            s = propagate(g, s);
            minus(s.burned, before).for_each([&](int v) { rec.propagated.push_back(v); });
            if (s.complete()) {
                t.rounds.push_back(std::move(rec));
                t.length = s.round;
                return t;
            }
        }

        RevealOptions ro = reveal_options(g, s, k);
        Bits reveal = ro.required > 0 ? sab.reveal(g, s, k, ro) : g.empty_set();
        s = apply_reveal(g, s, k, reveal);
        reveal.for_each([&](int v) { rec.revealed.push_back(v); });

        Bits pool = opts.strict_arsonist && reveal.any() ? reveal : s.selectable();
        std::optional<int> v;
        if (pool.any() || opts.allow_pass) v = ars.burn(g, s, pool);
        if (!v && pool.any() && !opts.allow_pass)
            throw IllegalMove("arsonist passed while a burnable vertex exists");
        int round_now = s.round;
        s = apply_burn(g, s, v, pool);
        rec.burned = v;

        if (s.round == 2 && sab.relabel_after_round1) {
            if (auto perm = sab.relabel_after_round1(g, s)) {
                validate_permutation(g, *perm);
                s.burned = apply_permutation(s.burned, *perm);
                s.revealed = apply_permutation(s.revealed, *perm);
                t.relabel = std::move(perm);
            }
        }

        t.rounds.push_back(std::move(rec));
        if (s.complete()) {
            t.length = round_now;
            return t;
        }
    }
}

GameState replay(const Graph& g, const Transcript& t) {
    GameState s = GameState::initial(g);
    int last_burn_round = 0;
    for (size_t i = 0; i < t.rounds.size(); ++i) {
        const RoundRecord& rec = t.rounds[i];
        if (s.round >= 2) {
            Bits before = s.burned;
            s = propagate(g, s);
            Bits prop = minus(s.burned, before);
            if (prop != Bits::of(g.n(), rec.propagated))
                throw std::runtime_error("replay: propagation mismatch");
            if (s.complete()) {
                last_burn_round = s.round;
                break;
            }
        } else if (!rec.propagated.empty()) {
            throw std::runtime_error("replay: propagation recorded in round 1");
        }
        Bits reveal = Bits::of(g.n(), rec.revealed);
        s = apply_reveal(g, s, t.k, reveal);
        Bits pool = t.strict_arsonist && reveal.any() ? reveal : s.selectable();
        if (!rec.burned) pool = g.empty_set();  // recorded pass (allow_pass playout)
        int round_now = s.round;
        s = apply_burn(g, s, rec.burned, pool);
        if (rec.burned) last_burn_round = round_now;
        if (s.round == 2 && t.relabel) {
            s.burned = apply_permutation(s.burned, *t.relabel);
            s.revealed = apply_permutation(s.revealed, *t.relabel);
        }
        if (s.complete()) {
            last_burn_round = round_now;
            break;
        }
    }
    if (!s.complete()) throw std::runtime_error("replay: transcript ends before the game");
    if (last_burn_round != t.length) throw std::runtime_error("replay: length mismatch");
    return s;
}

}  // namespace liminal
