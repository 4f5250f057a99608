#ifndef LIMINAL_REDUCTION_HPP
#define LIMINAL_REDUCTION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liminal/graph.hpp"
#include "liminal/qbf.hpp"

namespace liminal {

// The cooling-style base construction: spine a_0..a_n, variable vertex
// pairs, clause triangles, and occurrence paths with n+j-i-1 internal
// vertices.
Graph build_gphi(const QbfFormula& f);

// Triangular gadget forcing the opening cooling moves: column i holds i
// vertices; columns are cliques; a vertex of column i+1 with index < i+1 is
// adjacent to all of column i (the figure's edge rule; the printed index
// condition is inconsistent with the figure).
Graph make_ht(int t);

// H_t ⊠ K_k.
Graph build_ht(int t, int k);

// One occurrence-path or double-assignment connector, for verification.
struct Connector {
    int var = 0;       // 1-based
    bool negated = false;
    int clause = 0;    // 1-based
    int position = 0;  // 0..2 within the clause
    std::vector<int> internals;
};

struct ReductionGraph {
    Graph graph;
    QbfFormula formula;  // padded
    std::vector<int> padding_clauses;
    int k = 0;
    int T = 0;  // diam(G_phi)
    int n_vars = 0, m_clauses = 0;
    int threshold = 0;  // T + 2n + m + 1

    std::vector<int> spine;  // a_1..a_n
    // [var-1][0] positive, [1] negative literal clique
    std::vector<std::array<std::vector<int>, 2>> literal_cliques;
    // [clause-1][position] clause clique
    std::vector<std::array<std::vector<int>, 3>> clause_cliques;
    // [var-1][0]/[1] double-assignment cliques
    std::vector<std::array<std::vector<int>, 2>> double_cliques;
    std::vector<Connector> occurrence_paths;
    std::vector<Connector> double_paths;
    // hblocks[c-1][r-1] = the k vertices of the block for u^c_r
    std::vector<std::vector<std::vector<int>>> hblocks;
};

// Full G' builder: pads literals, replaces variable/clause vertices by
// cliques sized per the quantifier, attaches double-assignment gadgets and
// H_T ⊠ K_k, and asserts diam(G') = T + 2n + m.
ReductionGraph build_reduction(const QbfFormula& f, int k);

struct ReductionReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Structural checks: diameter identity, gadget cardinalities, connector
// lengths, clique joins, and the a_1 -- column-T edges.
ReductionReport verify_reduction(const ReductionGraph& rg);

struct CertificateResult {
    bool attempted = false;
    bool complete = false;   // search finished within budget
    int value = 0;           // min game length under the proof's schedule
    uint64_t nodes = 0;
};

// Optional certificate: replays the proof's Saboteur schedule against an
// exhaustive Arsonist. For true instances the resulting game length should
// reach the threshold. Exponential; tiny instances only.
CertificateResult certify_reduction(const ReductionGraph& rg, uint64_t node_budget);

// co-NP instance builder: from a Burning instance (G, c) and a positive t,
// emits (G ∪ K^{t-1}_n, (t-1)+(c-1)) with n = |V(G)|.
struct CoNpInstance {
    Graph graph;
    int threshold = 0;
    int k = 0;  // f(n) = n on the emitted instance
};
CoNpInstance build_conp_instance(const Graph& g, int c, int t);

}  // namespace liminal

#endif
