#ifndef LIMINAL_GAME_HPP
#define LIMINAL_GAME_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liminal/graph.hpp"

namespace liminal {

enum class Phase { PrePropagation, PreReveal, PreBurn };

// Complete information needed to continue play. revealed is cumulative and
// may intersect burned.
struct GameState {
    Bits burned;
    Bits revealed;
    int round = 1;
    Phase phase = Phase::PreReveal;  // round 1 has no propagation step

    static GameState initial(const Graph& g) {
        return GameState{g.empty_set(), g.empty_set(), 1, Phase::PreReveal};
    }

    Bits selectable() const { return minus(revealed, burned); }
    Bits unlit() const { return (burned | revealed).complement(); }
    bool complete() const { return burned.full(); }
};

struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// burned' = burned ∪ N(burned); applied once per round, rounds >= 2.
GameState propagate(const Graph& g, const GameState& s);

struct RevealOptions {
    int required;  // min(k, |pool|)
    Bits pool;     // the unlit set
};
RevealOptions reveal_options(const Graph& g, const GameState& s, int k);

GameState apply_reveal(const Graph& g, const GameState& s, int k, const Bits& r);

// v = nullopt is a pass, legal only when the legal pool is empty (or when
// the playout explicitly allows passing). The legal pool is the cumulative
// selectable set, or the current round's reveal in strict mode.
GameState apply_burn(const Graph& g, const GameState& s, std::optional<int> v,
                     const Bits& legal_pool);

// One round of a recorded game.
struct RoundRecord {
    std::vector<int> propagated;
    std::vector<int> revealed;
    std::optional<int> burned;
};

struct Transcript {
    std::string graph_spec;
    int k = 0;
    bool strict_arsonist = false;
    std::vector<RoundRecord> rounds;
    int length = 0;
    // Vertex permutation applied after round 1 (hypercube relabeling hook);
    // perm[old] = new.
    std::optional<std::vector<int>> relabel;
};

// Saboteur strategies may install a relabel hook, invoked once after round
// 1's burn: the returned permutation must be a graph automorphism and is
// applied to the state in place.
struct SaboteurStrategy {
    std::string name;
    std::function<Bits(const Graph&, const GameState&, int k, const RevealOptions&)> reveal;
    std::function<std::optional<std::vector<int>>(const Graph&, const GameState&)>
        relabel_after_round1;
};

struct ArsonistStrategy {
    std::string name;
    // Must return a vertex in `selectable` whenever it is nonempty; nullopt
    // passes (accepted only under PlayOptions::allow_pass).
    std::function<std::optional<int>(const Graph&, const GameState&, const Bits& selectable)>
        burn;
};

struct PlayOptions {
    bool strict_arsonist = false;
    bool allow_pass = false;  // bound-illustration playouts only
    std::string graph_spec;
};

// Runs a full game. Game length is the round during which the last vertex
// became burned, whether by propagation or by the Arsonist. Throws
// IllegalMove if a strategy returns an illegal move.
Transcript play(const Graph& g, int k, const SaboteurStrategy& sab, const ArsonistStrategy& ars,
                const PlayOptions& opts = {});

// Replays a transcript, re-validating every move; returns the final state.
// The recorded length must match.
GameState replay(const Graph& g, const Transcript& t);

Bits apply_permutation(const Bits& s, const std::vector<int>& perm);

}  // namespace liminal

#endif
