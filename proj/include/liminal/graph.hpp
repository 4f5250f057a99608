#ifndef LIMINAL_GRAPH_HPP
#define LIMINAL_GRAPH_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "liminal/bits.hpp"

namespace liminal {

// Strict total order on vertices, given as both rank->vertex and
// vertex->rank permutations.
struct VertexOrder {
    std::vector<int> by_rank;  // by_rank[r] = vertex with rank r
    std::vector<int> rank_of;  // rank_of[v] = rank of vertex v

    static VertexOrder identity(int n);
    static VertexOrder from_ranking(std::vector<int> by_rank);
};

// Graded-lexicographic order on an m x n grid: ascending by coordinate sum,
// ties by first coordinate. Vertex (x,y) has index x*n + y.
VertexOrder graded_lex_order(int rows, int cols);

// Immutable simple undirected graph over bit-vector adjacency rows.
// Distance matrix is computed lazily (thread-safe) with disconnected pairs
// encoded as n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    Graph(const Graph& o);
    Graph& operator=(const Graph& o);
    Graph(Graph&& o) noexcept;
    Graph& operator=(Graph&& o) noexcept;

    int n() const { return n_; }
    int edge_count() const;
    const Bits& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    void add_edge(int u, int v);

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    Bits empty_set() const { return Bits(n_); }
    Bits full_set() const { return Bits(n_).complement(); }

    // Closed-neighborhood expansion of a set: s together with all neighbors
    // of members of s.
    Bits expand(const Bits& s) const;

    // Shortest-path distances from src; unreachable = n.
    std::vector<int> bfs(int src) const;
    // Full distance matrix, cached after first call. Sentinel for
    // disconnected pairs is n (strictly larger than any finite distance).
    const std::vector<std::vector<int>>& distances() const;
    int distance(int u, int v) const { return distances()[u][v]; }
    int diameter() const;  // max finite distance; n if disconnected
    bool connected() const;
    int component_count() const;

    bool is_tree() const;

private:
    int n_ = 0;
    std::vector<Bits> adj_;
    std::vector<std::string> labels_;

    // Lazily computed and immutable afterwards; shared between copies.
    mutable std::mutex dist_mu_;
    mutable std::shared_ptr<const std::vector<std::vector<int>>> dist_;
};

// --- generators ---------------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
// Vertex i is the subset of [n] whose characteristic bit-vector is i, so
// d(u,v) = popcount(u ^ v). Labels carry the subset, e.g. "{1,3}".
Graph make_hypercube(int n);
// Vertex (x,y) has index x*cols + y; labels "(x,y)".
Graph make_grid(int rows, int cols);
// Head plus `legs` paths of `len` vertices each; legs >= 3.
Graph make_spider(int legs, int len);
// Spine v_1..v_r with leaf_counts[i] leaves on v_i.
Graph make_caterpillar(const std::vector<int>& leaf_counts);
// t disjoint copies of K_r.
Graph make_cliques(int copies, int r);

Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// --- family DSL and files ------------------------------------------------
//
// Family specs: path:N, cycle:N, complete:N, hypercube:N, grid:MxN,
// spider:L,P, caterpillar:[d1,...,dr], cliques:TxR, plus cart(A,B),
// strong(A,B), union(A,B) and file:PATH, nested recursively.
Graph build_family(const std::string& spec);

// Edge-list format: first non-comment line "n m", then m lines "u v";
// '#'-prefixed lines are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Grid dimensions of a spec, when the spec denotes a grid (used to pick the
// graded-lex order for grid strategies).
std::optional<std::pair<int, int>> grid_dims_of_spec(const std::string& spec);

}  // namespace liminal

#endif
