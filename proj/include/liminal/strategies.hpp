#ifndef LIMINAL_STRATEGIES_HPP
#define LIMINAL_STRATEGIES_HPP

#include <vector>

#include "liminal/game.hpp"
#include "liminal/sperner.hpp"

namespace liminal {

enum class GreedyVariant { Smallest, Largest };

// Reveals the required number of smallest unlit vertices under `order`.
SaboteurStrategy basic_saboteur(const VertexOrder& order);

// Burns the minimal (or maximal) selectable vertex under `order`; passes
// when nothing is selectable.
ArsonistStrategy greedy_arsonist(const VertexOrder& order,
                                 GreedyVariant variant = GreedyVariant::Smallest);

// Reveals a validated cooling sequence in consecutive k-blocks, padding the
// final (and any post-sequence) reveal with smallest-index unlit vertices.
// Throws if the sequence violates d(v_i,v_j) >= j-i+1 up front, and raises a
// certified-strategy violation if a block vertex is lit when due.
SaboteurStrategy cooling_chunk_saboteur(const Graph& g, const std::vector<int>& seq, int k);

// Saboteur schedule behind b_k(Q_n) >= n - ceil(log2 k): round i reveals k
// unlit vertices of the coset {c_i ∪ A : A ⊆ K}, where K is the last
// ceil(log2 k) coordinates and (c_i) is the rainbow-Sperner cooling sequence
// of the subcube on the remaining coordinates.
SaboteurStrategy hypercube_log_saboteur(int n, int k);

// Scheduled reveal sets of hypercube_log_saboteur, for property checks:
// schedule()[i] lists round-(i+1) vertices (as bitmask vertex ids).
std::vector<std::vector<int>> hypercube_log_schedule(int n, int k);

// The b_4(Q_n) = n-1 reveal schedule for n >= 11, including the relabeling
// hook applied after round 1. Reveals are truncated to the required size, so
// the same schedule certifies b_3 when played at k = 3.
SaboteurStrategy hypercube_b4_saboteur(int n);

// Rounds 2..n-4 of the b4 schedule as set bitmasks over [n], for the
// 4-rainbow Sperner and forbidden-subset property checks.
std::vector<std::vector<uint64_t>> hypercube_b4_schedule(int n);

// Burns the endpoints of a maximum-distance revealed pair in rounds 1 and 2,
// then passes; for bound-illustration playouts only (requires allow_pass).
ArsonistStrategy eccentric_pair_arsonist();

// Burns a selectable vertex inside a part that has no source yet (smallest
// index), per the partition counting argument; falls back to the smallest
// selectable vertex when no sourceless part can be hit. The partition must
// cover V with parts of size <= k. Stateful: build one per playout.
ArsonistStrategy partition_arsonist(const Graph& g, std::vector<Bits> partition, int k);

// Parsed CLI descriptors (basic-sab[:grlex|:index], greedy-ars:smallest|largest,
// cooling-chunk, hc-log, hc-b4, eccentric-ars, partition-ars:FILE, solver).
SaboteurStrategy parse_saboteur(const std::string& desc, const Graph& g,
                                const std::string& graph_spec, int k);
ArsonistStrategy parse_arsonist(const std::string& desc, const Graph& g,
                                const std::string& graph_spec, int k);

}  // namespace liminal

#endif
