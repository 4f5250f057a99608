#include "liminal/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace liminal {

namespace {

struct GphiLayout {
    int n, m;
    std::vector<int> spine;                          // a_0..a_n
    std::vector<std::array<int, 2>> var_vertices;    // [var-1] = {x_i, ~x_i}
    std::vector<std::array<int, 3>> clause_vertices; // [clause-1][pos]
    std::vector<Connector> paths;
};

GphiLayout layout_gphi(const QbfFormula& f, Graph& g_out) {
    GphiLayout L;
    L.n = f.n_vars();
    L.m = f.n_clauses();
    int total = (L.n + 1) + 2 * L.n + 3 * L.m;
    for (int j = 0; j < L.m; ++j)
        for (int lit : f.clauses[j]) {
            int i = lit < 0 ? -lit : lit;
            total += L.n + (j + 1) - i - 1;
        }
    Graph g(total);
    int next = 0;
    for (int i = 0; i <= L.n; ++i) {
        L.spine.push_back(next);
        g.set_label(next, "a" + std::to_string(i));
        ++next;
    }
    for (int i = 1; i <= L.n; ++i) {
        g.set_label(next, "x" + std::to_string(i));
        g.set_label(next + 1, "~x" + std::to_string(i));
        L.var_vertices.push_back({next, next + 1});
        next += 2;
    }
    for (int j = 1; j <= L.m; ++j) {
        std::array<int, 3> cv{};
        for (int p = 0; p < 3; ++p) {
            cv[p] = next;
            g.set_label(next, "C" + std::to_string(j) + "." + std::to_string(p + 1));
            ++next;
        }
        L.clause_vertices.push_back(cv);
    }

    for (int i = 0; i < L.n; ++i) g.add_edge(L.spine[i], L.spine[i + 1]);
    for (int i = 1; i <= L.n; ++i) {
        auto [x, nx] = L.var_vertices[i - 1];
        g.add_edge(x, nx);
        g.add_edge(x, L.spine[i]);
        g.add_edge(nx, L.spine[i]);
        if (i <= L.n - 1) {
            g.add_edge(x, L.spine[i + 1]);
            g.add_edge(nx, L.spine[i + 1]);
        }
    }
    for (int j = 1; j <= L.m; ++j) {
        auto& cv = L.clause_vertices[j - 1];
        g.add_edge(cv[0], cv[1]);
        g.add_edge(cv[1], cv[2]);
        g.add_edge(cv[0], cv[2]);
        for (int p = 0; p < 3; ++p) {
            int lit = f.clauses[j - 1][p];
            int i = lit < 0 ? -lit : lit;
            Connector conn;
            conn.var = i;
            conn.negated = lit < 0;
            conn.clause = j;
            conn.position = p;
            int prev = L.var_vertices[i - 1][lit < 0 ? 1 : 0];
            int t = L.n + j - i - 1;
            for (int q = 0; q < t; ++q) {
                g.set_label(next, "p" + std::to_string(j) + "." + std::to_string(p + 1) + "." +
                                      std::to_string(q + 1));
                conn.internals.push_back(next);
                g.add_edge(prev, next);
                prev = next++;
            }
            g.add_edge(prev, cv[p]);
            L.paths.push_back(std::move(conn));
        }
    }
    if (next != total) throw std::logic_error("gphi layout mismatch");
    g_out = std::move(g);
    return L;
}

}  // namespace

Graph build_gphi(const QbfFormula& f) {
    Graph g;
    layout_gphi(f, g);
    return g;
}

Graph make_ht(int t) {
    if (t < 1) throw std::invalid_argument("H_t needs t >= 1");
    Graph g(t * (t + 1) / 2);
    auto id = [](int c, int r) { return c * (c - 1) / 2 + (r - 1); };  // column c>=1, row r in 1..c
    for (int c = 1; c <= t; ++c)
        for (int r = 1; r <= c; ++r) {
            g.set_label(id(c, r), "u" + std::to_string(c) + "_" + std::to_string(r));
            for (int r2 = r + 1; r2 <= c; ++r2) g.add_edge(id(c, r), id(c, r2));
            // a column-(c+1) vertex with index below c+1 sees all of column c
            if (c < t)
                for (int r2 = 1; r2 <= c; ++r2) g.add_edge(id(c, r), id(c + 1, r2));
        }
    return g;
}

Graph build_ht(int t, int k) {
    if (k < 1) throw std::invalid_argument("build_ht needs k >= 1");
    Graph h = make_ht(t);
    if (k == 1) return h;
    return strong_product(h, make_complete(k));
}

ReductionGraph build_reduction(const QbfFormula& f_in, int k) {
    if (k < 2) throw std::invalid_argument("reduction needs k >= 2");
    ReductionGraph rg;
    rg.formula = f_in;
    rg.padding_clauses = pad_missing_literals(rg.formula);
    rg.k = k;
    rg.n_vars = rg.formula.n_vars();
    rg.m_clauses = rg.formula.n_clauses();

    Graph gphi = build_gphi(rg.formula);
    rg.T = gphi.diameter();
    const int n = rg.n_vars, m = rg.m_clauses, T = rg.T;
    rg.threshold = T + 2 * n + m + 1;

    // vertex budget
    int total = n;  // spine a_1..a_n
    auto lit_size = [&](int var, bool neg) {
        if (rg.formula.prefix[var - 1] == Quant::Exists) return k;
        return neg ? k / 2 : (k + 1) / 2;
    };
    for (int i = 1; i <= n; ++i) total += lit_size(i, false) + lit_size(i, true) + 2 * k;
    total += 3 * k * m;
    for (int j = 1; j <= m; ++j)
        for (int lit : rg.formula.clauses[j - 1]) {
            int i = lit < 0 ? -lit : lit;
            total += (n + j - i - 1) + (m + 2 * i - j - 1);
        }
    total += k * T * (T + 1) / 2;

    Graph g(total);
    int next = 0;
    auto alloc = [&](int count, const std::string& label) {
        std::vector<int> vs;
        for (int q = 0; q < count; ++q) {
            g.set_label(next, label + "#" + std::to_string(q));
            vs.push_back(next++);
        }
        return vs;
    };
    auto clique = [&](const std::vector<int>& vs) {
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
    };
    auto join = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int u : a)
            for (int v : b) g.add_edge(u, v);
    };

    for (int i = 1; i <= n; ++i) {
        rg.spine.push_back(next);
        g.set_label(next, "a" + std::to_string(i));
        ++next;
    }
    for (int i = 0; i + 1 < n; ++i) g.add_edge(rg.spine[i], rg.spine[i + 1]);

    for (int i = 1; i <= n; ++i) {
        auto pos = alloc(lit_size(i, false), "x" + std::to_string(i));
        auto neg = alloc(lit_size(i, true), "~x" + std::to_string(i));
        clique(pos);
        clique(neg);
        join(pos, neg);
        join(pos, {rg.spine[i - 1]});
        join(neg, {rg.spine[i - 1]});
        if (i <= n - 1) {
            join(pos, {rg.spine[i]});
            join(neg, {rg.spine[i]});
        }
        rg.literal_cliques.push_back({std::move(pos), std::move(neg)});
    }

    for (int j = 1; j <= m; ++j) {
        std::array<std::vector<int>, 3> cc;
        for (int p = 0; p < 3; ++p) {
            cc[p] = alloc(k, "C" + std::to_string(j) + "." + std::to_string(p + 1));
            clique(cc[p]);
        }
        join(cc[0], cc[1]);
        join(cc[1], cc[2]);
        join(cc[0], cc[2]);
        rg.clause_cliques.push_back(std::move(cc));
    }

    for (int i = 1; i <= n; ++i) {
        auto dpos = alloc(k, "D" + std::to_string(i) + "+");
        auto dneg = alloc(k, "D" + std::to_string(i) + "-");
        clique(dpos);
        clique(dneg);
        join(dpos, dneg);
        rg.double_cliques.push_back({std::move(dpos), std::move(dneg)});
    }

    // occurrence paths (literal clique -> clause clique) and double-assignment
    // paths (the vertex beside the clause gadget -> the literal's double clique)
    for (int j = 1; j <= m; ++j)
        for (int p = 0; p < 3; ++p) {
            int lit = rg.formula.clauses[j - 1][p];
            int i = lit < 0 ? -lit : lit;
            bool neg = lit < 0;
            const auto& lit_cl = rg.literal_cliques[i - 1][neg ? 1 : 0];
            const auto& cls_cl = rg.clause_cliques[j - 1][p];
            std::string tag = std::to_string(j) + "." + std::to_string(p + 1);

            Connector occ{i, neg, j, p, {}};
            int t = n + j - i - 1;
            std::vector<int> beside_clause = lit_cl;  // "could be the variable vertex"
            {
                std::vector<int> prev = lit_cl;
                for (int q = 0; q < t; ++q) {
                    auto w = alloc(1, "p" + tag + "." + std::to_string(q + 1));
                    join(prev, w);
                    occ.internals.push_back(w[0]);
                    prev = w;
                }
                join(prev, cls_cl);
                if (t > 0) beside_clause = {occ.internals.back()};
            }
            rg.occurrence_paths.push_back(std::move(occ));

            Connector dbl{i, neg, j, p, {}};
            int s = m + 2 * i - j - 1;
            {
                std::vector<int> prev = beside_clause;
                for (int q = 0; q < s; ++q) {
                    auto w = alloc(1, "q" + tag + "." + std::to_string(q + 1));
                    join(prev, w);
                    dbl.internals.push_back(w[0]);
                    prev = w;
                }
                join(prev, rg.double_cliques[i - 1][neg ? 1 : 0]);
            }
            rg.double_paths.push_back(std::move(dbl));
        }

    // H_T ⊠ K_k in place of a_0
    Graph ht = make_ht(T);
    auto hid = [](int c, int r) { return c * (c - 1) / 2 + (r - 1); };
    rg.hblocks.resize(T);
    for (int c = 1; c <= T; ++c) {
        rg.hblocks[c - 1].resize(c);
        for (int r = 1; r <= c; ++r) {
            auto blk = alloc(k, "u" + std::to_string(c) + "_" + std::to_string(r));
            clique(blk);
            rg.hblocks[c - 1][r - 1] = std::move(blk);
        }
    }
    for (int c = 1; c <= T; ++c)
        for (int r = 1; r <= c; ++r)
            ht.neighbors(hid(c, r)).for_each([&](int other) {
                if (other > hid(c, r)) {
                    // recover (c', r') of the other endpoint
                    int c2 = 1;
                    while (hid(c2 + 1, 1) <= other) ++c2;
                    int r2 = other - hid(c2, 1) + 1;
                    join(rg.hblocks[c - 1][r - 1], rg.hblocks[c2 - 1][r2 - 1]);
                }
            });
    for (int r = 1; r <= T; ++r) join({rg.spine[0]}, rg.hblocks[T - 1][r - 1]);

    if (next != total) throw std::logic_error("reduction layout mismatch");
    int diam = g.diameter();
    if (diam != T + 2 * n + m)
        throw std::logic_error("reduction diameter is " + std::to_string(diam) + ", want " +
                               std::to_string(T + 2 * n + m));
    rg.graph = std::move(g);
    return rg;
}

ReductionReport verify_reduction(const ReductionGraph& rg) {
    ReductionReport rep;
    auto fail = [&](std::string s) {
        rep.pass = false;
        rep.failures.push_back(std::move(s));
    };
    const Graph& g = rg.graph;
    const int n = rg.n_vars, m = rg.m_clauses, T = rg.T, k = rg.k;

    int diam = g.diameter();
    if (diam != T + 2 * n + m)
        fail("diameter " + std::to_string(diam) + " != T+2n+m = " +
             std::to_string(T + 2 * n + m));
    if (rg.threshold != T + 2 * n + m + 1) fail("threshold mismatch");

    auto is_clique = [&](const std::vector<int>& vs) {
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adjacent(vs[a], vs[b])) return false;
        return true;
    };
    auto joined = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int u : a)
            for (int v : b)
                if (!g.adjacent(u, v)) return false;
        return true;
    };

    if ((int)rg.spine.size() != n) fail("spine size");
    for (int i = 0; i + 1 < n; ++i)
        if (!g.adjacent(rg.spine[i], rg.spine[i + 1])) fail("spine path broken at a" +
                                                            std::to_string(i + 1));

    for (int i = 1; i <= n; ++i) {
        bool ex = rg.formula.prefix[i - 1] == Quant::Exists;
        int want_pos = ex ? k : (k + 1) / 2, want_neg = ex ? k : k / 2;
        const auto& lc = rg.literal_cliques[i - 1];
        if ((int)lc[0].size() != want_pos || (int)lc[1].size() != want_neg)
            fail("literal clique sizes for x" + std::to_string(i));
        if (!is_clique(lc[0]) || !is_clique(lc[1]) || !joined(lc[0], lc[1]))
            fail("literal gadget for x" + std::to_string(i) + " is not two joined cliques");
        const auto& dc = rg.double_cliques[i - 1];
        if ((int)dc[0].size() != k || (int)dc[1].size() != k || !is_clique(dc[0]) ||
            !is_clique(dc[1]) || !joined(dc[0], dc[1]))
            fail("double-assignment gadget for x" + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        const auto& cc = rg.clause_cliques[j - 1];
        for (int p = 0; p < 3; ++p)
            if ((int)cc[p].size() != k || !is_clique(cc[p]))
                fail("clause clique C" + std::to_string(j) + "." + std::to_string(p + 1));
        if (!joined(cc[0], cc[1]) || !joined(cc[1], cc[2]) || !joined(cc[0], cc[2]))
            fail("clause gadget C" + std::to_string(j) + " cliques not mutually joined");
    }

    // connector walks: interiors are degree-2 path vertices
    auto check_path = [&](const Connector& c, int want_len, const std::string& what) {
        if ((int)c.internals.size() != want_len) {
            fail(what + " for x" + std::to_string(c.var) + (c.negated ? "(neg)" : "") + "->C" +
                 std::to_string(c.clause) + " has " + std::to_string(c.internals.size()) +
                 " internal vertices, want " + std::to_string(want_len));
            return;
        }
        for (size_t q = 0; q + 1 < c.internals.size(); ++q)
            if (!g.adjacent(c.internals[q], c.internals[q + 1])) {
                fail(what + " broken between internals for C" + std::to_string(c.clause));
                return;
            }
        for (int v : c.internals)
            if (g.degree(v) > 2 + 2 * k)  // endpoints may be joined to cliques
                fail(what + " internal vertex " + std::to_string(v) + " has odd degree");
    };
    for (const auto& c : rg.occurrence_paths)
        check_path(c, n + c.clause - c.var - 1, "occurrence path");
    for (const auto& c : rg.double_paths)
        check_path(c, m + 2 * c.var - c.clause - 1, "double-assignment path");

    // H block structure and the a_1 edges
    if ((int)rg.hblocks.size() != T) fail("H block column count");
    for (int c = 1; c <= T; ++c) {
        if ((int)rg.hblocks[c - 1].size() != c) fail("H column " + std::to_string(c) + " size");
        for (int r = 1; r <= c; ++r) {
            const auto& blk = rg.hblocks[c - 1][r - 1];
            if ((int)blk.size() != k || !is_clique(blk))
                fail("H block u" + std::to_string(c) + "_" + std::to_string(r));
            for (int r2 = r + 1; r2 <= c; ++r2)
                if (!joined(blk, rg.hblocks[c - 1][r2 - 1]))
                    fail("H column " + std::to_string(c) + " not a clique of blocks");
            if (c < T)
                for (int r2 = 1; r2 <= c + 1; ++r2) {
                    bool want = r2 < c + 1;  // figure rule
                    if (joined(blk, rg.hblocks[c][r2 - 1]) != want)
                        fail("H cross edges between u" + std::to_string(c) + "_" +
                             std::to_string(r) + " and column " + std::to_string(c + 1));
                }
        }
    }
    if (n >= 1)
        for (int r = 1; r <= T; ++r)
            if (!joined({rg.spine[0]}, rg.hblocks[T - 1][r - 1]))
                fail("a_1 is not joined to H block u" + std::to_string(T) + "_" +
                     std::to_string(r));
    return rep;
}

CoNpInstance build_conp_instance(const Graph& g, int c, int t) {
    if (t < 1 || c < 1) throw std::invalid_argument("co-NP builder needs t,c >= 1");
    CoNpInstance out;
    out.k = g.n();
    Graph acc = g;
    if (t > 1) acc = disjoint_union(g, make_cliques(t - 1, g.n()));
    out.graph = std::move(acc);
    out.threshold = (t - 1) + (c - 1);
    return out;
}

// --- optional certificate ----------------------------------------------------

namespace {

// Assignment digest: 2 bits per variable (unset / false / true).
struct CertState {
    Bits burned;
    Bits selectable;
    int round;
    uint64_t assign;
    bool operator==(const CertState& o) const {
        return round == o.round && assign == o.assign && burned == o.burned &&
               selectable == o.selectable;
    }
};
struct CertStateHash {
    size_t operator()(const CertState& s) const {
        return s.burned.hash() * 31 + s.selectable.hash() * 17 + s.round * 1000003 +
               size_t(s.assign);
    }
};

class CertSearch {
public:
    CertSearch(const ReductionGraph& rg, uint64_t budget) : rg_(rg), budget_(budget) {}

    uint64_t nodes() const { return nodes_; }

    int run() { return value(1, rg_.graph.empty_set(), rg_.graph.empty_set(), 0); }

private:
    [[noreturn]] void blow() { throw std::overflow_error("certificate budget"); }

    static int get_assign(uint64_t a, int var) { return int(a >> (2 * (var - 1))) & 3; }
    static uint64_t set_assign(uint64_t a, int var, bool val) {
        return a | (uint64_t(val ? 2 : 1) << (2 * (var - 1)));
    }

    // Saboteur's ∃-policy: a value for `var` keeping the remaining formula
    // true given the fixed prefix (brute force).
    bool exists_choice(uint64_t assign, int var) {
        for (bool val : {false, true}) {
            if (remaining_true(set_assign(assign, var, val), var + 1)) return val;
        }
        return false;  // losing position; either branch is as good
    }

    bool remaining_true(uint64_t assign, int next_var) {
        const QbfFormula& f = rg_.formula;
        if (next_var > f.n_vars()) {
            for (const auto& cl : f.clauses) {
                bool sat = false;
                for (int lit : cl) {
                    int v = lit < 0 ? -lit : lit;
                    int av = get_assign(assign, v);
                    bool val = av == 2;
                    if (av != 0 && (lit > 0) == val) sat = true;
                }
                if (!sat) return false;
            }
            return true;
        }
        int av = get_assign(assign, next_var);
        if (av != 0) return remaining_true(assign, next_var + 1);
        bool f0 = remaining_true(set_assign(assign, next_var, false), next_var + 1);
        bool f1 = remaining_true(set_assign(assign, next_var, true), next_var + 1);
        return f.prefix[next_var - 1] == Quant::Exists ? (f0 || f1) : (f0 && f1);
    }

    Bits scheduled_reveal(int round, const Bits& unlit, uint64_t& assign) {
        const int n = rg_.n_vars, m = rg_.m_clauses, T = rg_.T;
        const Graph& g = rg_.graph;
        auto reveal_of = [&](const std::vector<int>& vs) {
            Bits out(g.n());
            for (int v : vs)
                if (unlit.test(v)) out.set(v);
            return out;
        };
        if (round <= T) return reveal_of(rg_.hblocks[round - 1][round - 1]);
        if (round <= T + n) {
            int i = round - T;
            if (rg_.formula.prefix[i - 1] == Quant::Exists) {
                bool val = exists_choice(assign, i);
                assign = set_assign(assign, i, val);
                // reveal the false literal's clique
                return reveal_of(rg_.literal_cliques[i - 1][val ? 1 : 0]);
            }
            Bits both = reveal_of(rg_.literal_cliques[i - 1][0]);
            both |= reveal_of(rg_.literal_cliques[i - 1][1]);
            return both;
        }
        if (round <= T + n + m) {
            int j = round - T - n;
            for (int p = 0; p < 3; ++p) {
                int lit = rg_.formula.clauses[j - 1][p];
                int v = lit < 0 ? -lit : lit;
                int av = get_assign(assign, v);
                if (av == 0) {  // arsonist never committed; resolve now
                    assign = set_assign(assign, v, true);
                    av = 2;
                }
                bool val = av == 2;
                if ((lit > 0) == val) return reveal_of(rg_.clause_cliques[j - 1][p]);
            }
            return Bits(g.n());  // no true literal: schedule collapses
        }
        if (round <= T + 2 * n + m) {
            int i = round - T - n - m;
            int av = get_assign(assign, i);
            if (av == 0) {
                assign = set_assign(assign, i, true);
                av = 2;
            }
            // the double clique of the literal that is true
            return reveal_of(rg_.double_cliques[i - 1][av == 2 ? 0 : 1]);
        }
        return Bits(g.n());
    }

    int value(int round, const Bits& burned, const Bits& revealed, uint64_t assign) {
        if (++nodes_ > budget_) blow();
        CertState key{burned, minus(revealed, burned), round, assign};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const Graph& g = rg_.graph;
        Bits unlit = (burned | revealed).complement();
        int required = std::min(rg_.k, unlit.count());
        uint64_t assign2 = assign;
        Bits reveal(g.n());
        if (required > 0) {
            reveal = scheduled_reveal(round, unlit, assign2);
            // pad with smallest unlit (or truncate is impossible: scheduled
            // sets have at most k vertices)
            int have = reveal.count();
            unlit.for_each([&](int v) {
                if (have < required && !reveal.test(v)) {
                    reveal.set(v);
                    ++have;
                }
            });
        }
        Bits revealed2 = revealed | reveal;
        Bits pool = minus(revealed2, burned);

        int best = 1 << 30;
        pool.for_each([&](int v) {
            if (best == 1) return;
            uint64_t a3 = assign2;
            // a burn inside a ∀ literal clique sets that variable
            int rn = round - rg_.T;
            if (rn >= 1 && rn <= rg_.n_vars && get_assign(a3, rn) == 0) {
                const auto& lc = rg_.literal_cliques[rn - 1];
                if (std::count(lc[0].begin(), lc[0].end(), v))
                    a3 = set_assign(a3, rn, false);  // positive literal burned => x false
                else if (std::count(lc[1].begin(), lc[1].end(), v))
                    a3 = set_assign(a3, rn, true);
            }
            Bits b1 = burned;
            b1.set(v);
            int val;
            if (b1.full()) {
                val = 1;
            } else {
                Bits b2 = g.expand(b1);
                val = b2.full() ? 2 : 1 + value(round + 1, b2, revealed2, a3);
            }
            best = std::min(best, val);
        });
        if (pool.none()) throw std::logic_error("certificate: no burnable vertex");

        memo_.emplace(std::move(key), best);
        return best;
    }

    const ReductionGraph& rg_;
    uint64_t budget_, nodes_ = 0;
    std::unordered_map<CertState, int, CertStateHash> memo_;
};

}  // namespace

CertificateResult certify_reduction(const ReductionGraph& rg, uint64_t node_budget) {
    CertificateResult res;
    res.attempted = true;
    CertSearch search(rg, node_budget);
    try {
        res.value = search.run();
        res.complete = true;
    } catch (std::overflow_error&) {
        res.complete = false;
    }
    res.nodes = search.nodes();
    return res;
}

}  // namespace liminal
