#include "liminal/strategies.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <memory>
#include <sstream>

#include "liminal/solver.hpp"

namespace liminal {

namespace {

Bits smallest_unlit(const RevealOptions& ro, const VertexOrder& order, int count) {
    Bits out(ro.pool.size());
    int taken = 0;
    for (int v : order.by_rank) {
        if (taken == count) break;
        if (ro.pool.test(v)) {
            out.set(v);
            ++taken;
        }
    }
    return out;
}

// Pads `chosen` up to `required` with the smallest-index unlit vertices.
void pad_with_unlit(Bits& chosen, const Bits& pool, int required) {
    int have = chosen.count();
    pool.for_each([&](int v) {
        if (have < required && !chosen.test(v)) {
            chosen.set(v);
            ++have;
        }
    });
}

}  // namespace

SaboteurStrategy basic_saboteur(const VertexOrder& order) {
    SaboteurStrategy s;
    s.name = "basic-sab";
    s.reveal = [order](const Graph&, const GameState&, int, const RevealOptions& ro) {
        return smallest_unlit(ro, order, ro.required);
    };
    return s;
}

ArsonistStrategy greedy_arsonist(const VertexOrder& order, GreedyVariant variant) {
    ArsonistStrategy a;
    a.name = variant == GreedyVariant::Smallest ? "greedy-ars:smallest" : "greedy-ars:largest";
    a.burn = [order, variant](const Graph&, const GameState&,
                              const Bits& selectable) -> std::optional<int> {
        int best = -1, best_rank = 0;
        selectable.for_each([&](int v) {
            int r = order.rank_of[v];
            if (best < 0 || (variant == GreedyVariant::Smallest ? r < best_rank : r > best_rank)) {
                best = v;
                best_rank = r;
            }
        });
        if (best < 0) return std::nullopt;
        return best;
    };
    return a;
}

SaboteurStrategy cooling_chunk_saboteur(const Graph& g, const std::vector<int>& seq, int k) {
    const auto& d = g.distances();
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (d[seq[i]][seq[j]] < (int)(j - i) + 1)
                throw std::invalid_argument("cooling sequence violates the distance condition");

    SaboteurStrategy s;
    s.name = "cooling-chunk";
    s.reveal = [seq, k](const Graph& g2, const GameState& st, int,
                        const RevealOptions& ro) -> Bits {
        Bits out(g2.n());
        size_t lo = size_t(st.round - 1) * k;
        for (size_t i = lo; i < std::min(lo + k, seq.size()); ++i) {
            if ((int)out.count() == ro.required) break;
            if (!ro.pool.test(seq[i]))
                throw IllegalMove("cooling-chunk: sequence vertex lit when due (round " +
                                  std::to_string(st.round) + ")");
            out.set(seq[i]);
        }
        pad_with_unlit(out, ro.pool, ro.required);
        return out;
    };
    return s;
}

// --- hypercube schedules ---------------------------------------------------

namespace {

// Subcube cooling sequence as vertex masks: (∅, S_2, ..., S_{m-1}) on the
// low m coordinates, with the m <= 2 degenerate cases handled directly.
std::vector<uint64_t> subcube_cooling_masks(int m) {
    if (m <= 0) throw std::invalid_argument("subcube dimension must be positive");
    if (m == 1) return {0};
    if (m == 2) return {0, 0b11};
    std::vector<uint64_t> c{0};
    SpernerFamily f = rainbow_sperner(m);
    for (uint64_t s : f.sets) c.push_back(s);  // ground [m] is bits 0..m-1
    return c;
}

int ceil_log2(int k) {
    int l = 0;
    while ((1 << l) < k) ++l;
    return l;
}

}  // namespace

std::vector<std::vector<int>> hypercube_log_schedule(int n, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int L = ceil_log2(k);
    if (L >= n) throw std::invalid_argument("k too large: schedule needs ceil(log2 k) < n");
    int m = n - L;
    std::vector<uint64_t> c = subcube_cooling_masks(m);
    std::vector<std::vector<int>> rounds;
    for (uint64_t ci : c) {
        std::vector<int> set;
        for (uint64_t a = 0; a < (uint64_t(1) << L) && (int)set.size() < k; ++a)
            set.push_back(int(ci | (a << m)));
        rounds.push_back(std::move(set));
    }
    return rounds;
}

SaboteurStrategy hypercube_log_saboteur(int n, int k) {
    auto sched = hypercube_log_schedule(n, k);
    int L = ceil_log2(k), m = n - L;
    std::vector<uint64_t> cseq = subcube_cooling_masks(m);

    SaboteurStrategy s;
    s.name = "hc-log";
    s.reveal = [cseq, L, m, k](const Graph& g, const GameState& st, int,
                               const RevealOptions& ro) -> Bits {
        Bits out(g.n());
        if (st.round <= (int)cseq.size()) {
            uint64_t ci = cseq[st.round - 1];
            int taken = 0;
            for (uint64_t a = 0; a < (uint64_t(1) << L) && taken < ro.required; ++a) {
                int v = int(ci | (a << m));
                if (ro.pool.test(v)) {
                    out.set(v);
                    ++taken;
                }
            }
            if (taken < std::min(k, ro.required))
                throw IllegalMove("hc-log: scheduled coset exhausted at round " +
                                  std::to_string(st.round));
        }
        pad_with_unlit(out, ro.pool, ro.required);
        return out;
    };
    return s;
}

std::vector<std::vector<uint64_t>> hypercube_b4_schedule(int n) {
    if (n < 11) throw std::invalid_argument("b4 schedule needs n >= 11");
    if (n > 30) throw std::invalid_argument("b4 schedule dimension too large");
    auto bit = [](int e) { return uint64_t(1) << (e - 1); };  // element -> mask bit
    auto mask = [&](std::initializer_list<int> es) {
        uint64_t m = 0;
        for (int e : es) m |= bit(e);
        return m;
    };

    std::vector<int> base;  // [n-4] = {1..n-4}
    for (int e = 1; e <= n - 4; ++e) base.push_back(e);
    auto ground_without = [&](int skip_a, int skip_b, int skip_c) {
        std::vector<int> g;
        for (int e : base)
            if (e != skip_a && e != skip_b && e != skip_c) g.push_back(e);
        return g;
    };
    auto family_masks = [&](const std::vector<int>& ground, int forced) {
        SpernerFamily f = rainbow_sperner_forced(ground, forced);
        std::vector<uint64_t> out;
        for (size_t i = 0; i < f.sets.size(); ++i) {
            uint64_t m = 0;
            for (int e : f.set_elements(i)) m |= bit(e);
            out.push_back(m);
        }
        return out;  // sizes 2..|ground|-1 = 2..n-8
    };
    auto X = family_masks(ground_without(1, 2, 3), 4);
    auto Y = family_masks(ground_without(1, 2, 4), 3);
    auto Z = family_masks(ground_without(1, 3, 4), 2);
    auto W = family_masks(ground_without(2, 3, 4), 1);

    uint64_t full = (uint64_t(1) << n) - 1;
    std::vector<std::vector<uint64_t>> rounds;  // rounds[i] is round i+2
    rounds.push_back({mask({1, 4}), mask({1, n - 3}), mask({2, 3}), mask({2, 4})});
    rounds.push_back({mask({2, n - 3, n - 2}), mask({2, n - 2, n - 1}), mask({2, n - 2, n}),
                      mask({3, n - 3, n - 1})});
    rounds.push_back({mask({3, n - 2, n - 1, n}), mask({4, n - 3, n - 2, n}),
                      mask({4, n - 3, n - 1, n}), mask({4, n - 2, n - 1, n})});
    for (int i = 5; i <= n - 5; ++i) {
        int idx = i - 3 - 2;  // X_{i-3} sits at position i-5 (families start at size 2)
        rounds.push_back({X[idx] | mask({n - 3, n - 2, n - 1}), Y[idx] | mask({n - 3, n - 2, n}),
                          Z[idx] | mask({n - 3, n - 1, n}), W[idx] | mask({n - 2, n - 1, n})});
    }
    rounds.push_back({full & ~mask({1, 2, n - 3, n - 2}), full & ~mask({1, 2, n - 3, n - 1}),
                      full & ~mask({1, 2, n - 3, n}), full & ~mask({1, 2, n - 2, n - 1})});
    return rounds;
}

SaboteurStrategy hypercube_b4_saboteur(int n) {
    auto sched = hypercube_b4_schedule(n);  // rounds 2..n-4

    SaboteurStrategy s;
    s.name = "hc-b4";
    s.reveal = [sched, n](const Graph& g, const GameState& st, int,
                          const RevealOptions& ro) -> Bits {
        Bits out(g.n());
        auto take_scheduled = [&](const std::vector<uint64_t>& sets) {
            for (uint64_t v : sets) {
                if (out.count() == ro.required) break;
                if (!ro.pool.test((int)v))
                    throw IllegalMove("hc-b4: scheduled vertex lit when due (round " +
                                      std::to_string(st.round) + ")");
                out.set((int)v);
            }
        };
        if (st.round == 1) {
            take_scheduled({0, 1, 2, 4});  // ∅, {1}, {2}, {3}
        } else if (st.round <= n - 4) {
            take_scheduled(sched[st.round - 2]);
        } else if (st.round == n - 3) {
            // any four unlit vertices of cardinality n-2
            int taken = 0;
            for (int v = 0; v < g.n() && taken < ro.required; ++v)
                if (std::popcount(unsigned(v)) == n - 2 && ro.pool.test(v)) {
                    out.set(v);
                    ++taken;
                }
        } else if (st.round == n - 2) {
            // an (n-1)-set containing none of the revealed (n-2)-sets, plus [n]
            uint64_t bad = 0;  // union of complements of revealed (n-2)-sets
            st.revealed.for_each([&](int w) {
                if (std::popcount(unsigned(w)) == n - 2) bad |= ~uint64_t(w);
            });
            uint64_t full = (uint64_t(1) << n) - 1;
            for (int j = 0; j < n; ++j) {
                int v = int(full & ~(uint64_t(1) << j));
                if ((bad >> j & 1) == 0 && ro.pool.test(v)) {
                    out.set(v);
                    break;
                }
            }
            if (ro.pool.test((int)full) && out.count() < ro.required) out.set((int)full);
        }
        pad_with_unlit(out, ro.pool, ro.required);
        return out;
    };
    s.relabel_after_round1 = [n](const Graph& g,
                                 const GameState& st) -> std::optional<std::vector<int>> {
        int a = st.burned.first_set();
        if (a <= 0) return std::nullopt;  // burned ∅ (or nothing): no relabel needed
        // XOR by the burned vertex, then swap coordinate 1 with the burned
        // coordinate, so the leftover reveals become {1},{1,2},{1,3}.
        int swap_with = -1;
        if (a == 2) swap_with = 1;  // {2}
        if (a == 4) swap_with = 2;  // {3}
        std::vector<int> perm(g.n());
        for (int v = 0; v < g.n(); ++v) {
            int u = v ^ a;
            if (swap_with >= 0) {
                int b0 = u & 1, b1 = (u >> swap_with) & 1;
                u &= ~(1 | (1 << swap_with));
                u |= b1 | (b0 << swap_with);
            }
            perm[v] = u;
        }
        return perm;
    };
    return s;
}

// --- arsonists --------------------------------------------------------------

ArsonistStrategy eccentric_pair_arsonist() {
    struct Memory {
        int second = -1;
    };
    auto mem = std::make_shared<Memory>();
    ArsonistStrategy a;
    a.name = "eccentric-ars";
    a.burn = [mem](const Graph& g, const GameState& st,
                   const Bits& selectable) -> std::optional<int> {
        if (st.round == 1) {
            auto sel = selectable.to_vector();
            int bu = -1, bv = -1, bd = -1;
            for (size_t i = 0; i < sel.size(); ++i)
                for (size_t j = i + 1; j < sel.size(); ++j) {
                    int dd = g.distance(sel[i], sel[j]);
                    if (dd > bd) {
                        bd = dd;
                        bu = sel[i];
                        bv = sel[j];
                    }
                }
            if (bu < 0) return selectable.any() ? std::optional<int>(selectable.first_set())
                                                : std::nullopt;
            mem->second = bv;
            return bu;
        }
        if (st.round == 2 && mem->second >= 0 && selectable.test(mem->second))
            return mem->second;
        return std::nullopt;  // passes from round 3 (and round 2 if preempted)
    };
    return a;
}

ArsonistStrategy partition_arsonist(const Graph& g, std::vector<Bits> partition, int k) {
    Bits covered(g.n());
    for (const Bits& part : partition) {
        if (part.count() > k) throw std::invalid_argument("partition part larger than k");
        if (part.intersects(covered)) throw std::invalid_argument("partition parts overlap");
        covered |= part;
    }
    if (!covered.full()) throw std::invalid_argument("partition does not cover V");

    struct Memory {
        Bits sources;
    };
    auto mem = std::make_shared<Memory>();
    mem->sources = Bits(g.n());

    ArsonistStrategy a;
    a.name = "partition-ars";
    a.burn = [mem, partition](const Graph&, const GameState&,
                              const Bits& selectable) -> std::optional<int> {
        if (selectable.none()) return std::nullopt;
        int best = -1;
        for (const Bits& part : partition) {
            if (part.intersects(mem->sources)) continue;
            Bits candidates = part & selectable;
            if (candidates.any()) {
                int v = candidates.first_set();
                if (best < 0 || v < best) best = v;
            }
        }
        if (best < 0) best = selectable.first_set();  // counting argument exhausted
        mem->sources.set(best);
        return best;
    };
    return a;
}

// --- descriptor parsing ------------------------------------------------------

namespace {

VertexOrder resolve_order(const Graph& g, const std::string& graph_spec,
                          const std::string& mode) {
    if (mode == "index") return VertexOrder::identity(g.n());
    auto dims = grid_dims_of_spec(graph_spec);
    if (mode == "grlex") {
        if (!dims) throw std::invalid_argument("grlex order requires a grid:MxN graph");
        return graded_lex_order(dims->first, dims->second);
    }
    // default: graded-lex on grids, index order elsewhere
    if (dims) return graded_lex_order(dims->first, dims->second);
    return VertexOrder::identity(g.n());
}

int hypercube_dim_of(const Graph& g) {
    int n = 0;
    while ((1 << n) < g.n()) ++n;
    if ((1 << n) != g.n()) throw std::invalid_argument("strategy requires a hypercube graph");
    for (int v = 0; v < g.n(); ++v)
        for (int b = 0; b < n; ++b)
            if (!g.adjacent(v, v ^ (1 << b)))
                throw std::invalid_argument("strategy requires a hypercube graph");
    return n;
}

std::vector<Bits> read_partition_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open partition file: " + path);
    std::vector<Bits> parts;
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        Bits part(g.n());
        int v;
        while (ls >> v) part.set(v);
        if (part.any()) parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace

SaboteurStrategy parse_saboteur(const std::string& desc, const Graph& g,
                                const std::string& graph_spec, int k) {
    std::string head = desc, arg;
    if (auto p = desc.find(':'); p != std::string::npos) {
        head = desc.substr(0, p);
        arg = desc.substr(p + 1);
    }
    if (head == "basic-sab") return basic_saboteur(resolve_order(g, graph_spec, arg));
    if (head == "cooling-chunk") {
        std::vector<int> seq = optimal_cooling_sequence(g);
        return cooling_chunk_saboteur(g, seq, k);
    }
    if (head == "hc-log") return hypercube_log_saboteur(hypercube_dim_of(g), k);
    if (head == "hc-b4") return hypercube_b4_saboteur(hypercube_dim_of(g));
    throw std::invalid_argument("unknown saboteur strategy: " + desc);
}

ArsonistStrategy parse_arsonist(const std::string& desc, const Graph& g,
                                const std::string& graph_spec, int k) {
    std::string head = desc, arg;
    if (auto p = desc.find(':'); p != std::string::npos) {
        head = desc.substr(0, p);
        arg = desc.substr(p + 1);
    }
    if (head == "greedy-ars") {
        GreedyVariant v = arg == "largest" ? GreedyVariant::Largest : GreedyVariant::Smallest;
        return greedy_arsonist(resolve_order(g, graph_spec, ""), v);
    }
    if (head == "eccentric-ars") return eccentric_pair_arsonist();
    if (head == "partition-ars") return partition_arsonist(g, read_partition_file(g, arg), k);
    if (head == "solver") return solver_arsonist(g, k, SolveOptions{});
    throw std::invalid_argument("unknown arsonist strategy: " + desc);
}

}  // namespace liminal
