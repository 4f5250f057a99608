#ifndef LIMINAL_WITNESS_HPP
#define LIMINAL_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liminal/graph.hpp"

namespace liminal {

// A partition of V(G) into parts, used both as a (k,d)-special witness
// (sizes k with at most one exception) and as the looser partition-cover of
// the edge-cover bound (sizes <= k).
struct SpecialWitness {
    std::vector<Bits> parts;
    int k = 0;
    int d = 0;
};

struct WitnessReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Partition + diameter + size checks by independent recomputation of
// pairwise distances. strict_sizes demands |part| = k with at most one
// exception (the (k,d)-special shape); otherwise |part| <= k suffices.
WitnessReport validate_witness(const Graph& g, const SpecialWitness& w, bool strict_sizes);

// Consecutive k-blocks of a path: the (k, k-1)-special witness.
SpecialWitness path_partition(int n, int k);

// Leaf-pairing witness showing every tree is 2-special.
SpecialWitness tree_pairing(const Graph& g);

// Consecutive k-blocks of the spine-with-leaves ordering; caterpillars are
// k-special for every k.
SpecialWitness caterpillar_partition(const Graph& g, int k);

// KxK half-open blocks of the n x n grid with K = floor(sqrt(k)):
// ceil(n/K)^2 parts of size <= K^2 <= k and diameter <= 2K-2.
SpecialWitness grid_block_partition(int n, int k);

struct KdSpecialResult {
    enum class Outcome { Witness, Refuted, BudgetExceeded } outcome;
    std::optional<SpecialWitness> witness;
    uint64_t nodes = 0;
};

// Exact backtracking search for a (k,d)-special witness; parts are grown
// from the smallest uncovered vertex with incremental diameter pruning.
KdSpecialResult is_kd_special(const Graph& g, int k, int d, uint64_t budget = 10'000'000);

struct PartitionCover {
    std::vector<Bits> parts;
    int bound = 0;  // parts + d, an upper bound on b_k via the edge-cover bound
};

// Greedy cover by parts of size <= k and diameter <= d, de-overlapped into a
// partition. Valid upper bound, not necessarily the optimum cover.
PartitionCover greedy_partition_cover(const Graph& g, int k, int d);

// Spine of a caterpillar (path remaining after removing all leaves), or
// nullopt when the graph is not a caterpillar.
std::optional<std::vector<int>> caterpillar_spine(const Graph& g);

}  // namespace liminal

#endif
