#ifndef LIMINAL_SOLVER_HPP
#define LIMINAL_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "liminal/game.hpp"

namespace liminal {

struct SolveOptions {
    bool strict_arsonist = false;
    bool use_memo = true;
    // Reveal sets differing only in which members of an equivalence class of
    // doomed vertices they contain are solved once. A doomed vertex (unlit
    // but adjacent to a burned one) burns at the next propagation no matter
    // what; two such vertices are interchangeable when their neighborhoods
    // agree outside the next propagation front.
    bool use_dominance = true;
    int threads = 1;
    uint64_t node_budget = UINT64_C(400'000'000);
    uint64_t memo_budget = UINT64_C(60'000'000);
    bool emit_pv = false;       // forces serial, memoized search
    int state_width_cap = 128;  // solve_liminal refuses larger graphs
    std::string graph_spec;     // recorded in emitted transcripts
};

struct SolveResult {
    int value = -1;       // meaningful only when complete
    bool complete = false;
    uint64_t nodes = 0;
    uint64_t memo_entries = 0;
    std::optional<Transcript> pv;
};

// Exact b_k(G): max over Saboteur reveals of min over Arsonist burns, with
// propagation folded in. Budget overruns yield an incomplete result, never a
// wrong value.
SolveResult solve_liminal(const Graph& g, int k, const SolveOptions& opts = {});

// Single-player processes, solved on their own burned-set state space (the
// independent route for the b_n / b_1 endpoint identities).
SolveResult solve_burning(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_cooling(const Graph& g, const SolveOptions& opts = {});

// Game value with the Saboteur fixed and the Arsonist exhaustive: a
// certified lower bound on b_k(G). The strategy must be a deterministic
// function of the state (plus its frozen parameters).
SolveResult value_fixed_saboteur(const Graph& g, int k, const SaboteurStrategy& sab,
                                 const SolveOptions& opts = {});

struct FixedArsonistResult {
    SolveResult result;
    bool certificate = false;  // false when the Saboteur pool was restricted
};

// Dual certificate: max over Saboteur reveals with the Arsonist fixed is a
// certified upper bound when unrestricted. With `saboteur_pool` given,
// reveals are confined to the pool (padded only when forced) and the value
// is a heuristic, not a certificate.
FixedArsonistResult value_fixed_arsonist(const Graph& g, int k, const ArsonistStrategy& ars,
                                         const SolveOptions& opts = {},
                                         const std::optional<Bits>& saboteur_pool = {});

// Longest sequence v_1..v_m with d(v_i,v_j) >= j-i+1 for all i<j (the
// cooling-sequence condition). Exhaustive; small graphs only.
int max_cooling_sequence(const Graph& g);

// Sources of an optimal cooling game, smallest-index tie-breaks. The result
// satisfies the cooling-sequence distance condition.
std::vector<int> optimal_cooling_sequence(const Graph& g);

// Arsonist backed by the exact solver: burns a vertex minimizing the
// remaining game length (smallest among ties). Budget overruns surface as
// runtime errors during play.
ArsonistStrategy solver_arsonist(const Graph& g, int k, const SolveOptions& opts);

}  // namespace liminal

#endif
