#include "liminal/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liminal {

WitnessReport validate_witness(const Graph& g, const SpecialWitness& w, bool strict_sizes) {
    WitnessReport rep;
    auto fail = [&](std::string s) {
        rep.pass = false;
        rep.failures.push_back(std::move(s));
    };

    Bits covered(g.n());
    for (size_t i = 0; i < w.parts.size(); ++i) {
        if (w.parts[i].none()) fail("part " + std::to_string(i) + " is empty");
        if (w.parts[i].intersects(covered)) fail("part " + std::to_string(i) + " overlaps");
        covered |= w.parts[i];
    }
    if (!covered.full()) fail("parts do not cover V");

    int exceptions = 0;
    for (size_t i = 0; i < w.parts.size(); ++i) {
        int c = w.parts[i].count();
        if (c > w.k) fail("part " + std::to_string(i) + " larger than k");
        if (strict_sizes && c != w.k) ++exceptions;
    }
    if (strict_sizes && exceptions > 1)
        fail(std::to_string(exceptions) + " parts differ from k (at most one allowed)");
    if (strict_sizes && (int)w.parts.size() != (g.n() + w.k - 1) / w.k)
        fail("part count is not ceil(n/k)");

    for (size_t i = 0; i < w.parts.size(); ++i) {
        auto verts = w.parts[i].to_vector();
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (g.distance(verts[a], verts[b]) > w.d) {
                    fail("part " + std::to_string(i) + " has diameter > d at (" +
                         std::to_string(verts[a]) + "," + std::to_string(verts[b]) + ")");
                    b = verts.size();
                    a = verts.size();
                }
    }
    return rep;
}

SpecialWitness path_partition(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("path_partition needs n,k >= 1");
    SpecialWitness w;
    w.k = k;
    w.d = k - 1;
    for (int lo = 0; lo < n; lo += k) {
        Bits part(n);
        for (int v = lo; v < std::min(lo + k, n); ++v) part.set(v);
        w.parts.push_back(std::move(part));
    }
    return w;
}

SpecialWitness tree_pairing(const Graph& g) {
    if (!g.is_tree()) throw std::invalid_argument("tree_pairing needs a tree");
    int n = g.n();
    SpecialWitness w;
    w.k = 2;
    w.d = 2;

    Bits alive = g.full_set();
    auto alive_deg = [&](int v) { return (g.neighbors(v) & alive).count(); };

    while (alive.count() > 2) {
        // u: adjacent to >= 1 leaf and to at most one non-leaf of the
        // remaining tree (exactly one in general; zero when a star remains)
        int u = -1;
        for (int v = alive.first_set(); v >= 0; v = alive.next_set(v + 1)) {
            if (alive_deg(v) < 2) continue;
            int leaves = 0, nonleaves = 0;
            (g.neighbors(v) & alive).for_each([&](int w2) {
                (alive_deg(w2) == 1 ? leaves : nonleaves)++;
            });
            if (leaves >= 1 && nonleaves <= 1) {
                u = v;
                break;
            }
        }
        if (u < 0) throw std::logic_error("tree_pairing: no reducible vertex");
        std::vector<int> leaves;
        (g.neighbors(u) & alive).for_each([&](int w2) {
            if (alive_deg(w2) == 1) leaves.push_back(w2);
        });
        for (size_t i = 0; i + 1 < leaves.size(); i += 2) {
            w.parts.push_back(Bits::of(n, {leaves[i], leaves[i + 1]}));
            alive.reset(leaves[i]);
            alive.reset(leaves[i + 1]);
        }
        if (leaves.size() % 2 == 1) {
            w.parts.push_back(Bits::of(n, {leaves.back(), u}));
            alive.reset(leaves.back());
            alive.reset(u);
        }
    }
    if (alive.count() == 2) {
        auto v = alive.to_vector();
        w.parts.push_back(Bits::of(n, {v[0], v[1]}));
    } else if (alive.count() == 1) {
        w.parts.push_back(Bits::of(n, {alive.first_set()}));
    }
    return w;
}

std::optional<std::vector<int>> caterpillar_spine(const Graph& g) {
    if (!g.is_tree()) return std::nullopt;
    Bits spine = g.full_set();
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 1) spine.reset(v);
    if (spine.none()) {
        // K_1 or K_2: take the smallest vertex as a one-point spine
        return std::vector<int>{0};
    }
    // remaining graph must be a path: all induced degrees <= 2, connected
    std::vector<int> ends;
    int edge_sum = 0;
    for (int v = spine.first_set(); v >= 0; v = spine.next_set(v + 1)) {
        int deg = (g.neighbors(v) & spine).count();
        if (deg > 2) return std::nullopt;
        if (deg <= 1) ends.push_back(v);
        edge_sum += deg;
    }
    int sc = spine.count();
    if (edge_sum != 2 * (sc - 1)) return std::nullopt;  // forest but not connected
    if (sc == 1) return std::vector<int>{spine.first_set()};
    if (ends.size() != 2) return std::nullopt;

    std::vector<int> path{ends[0]};
    Bits seen(g.n());
    seen.set(ends[0]);
    while ((int)path.size() < sc) {
        int nxt = -1;
        (g.neighbors(path.back()) & spine).for_each([&](int v) {
            if (!seen.test(v)) nxt = v;
        });
        if (nxt < 0) return std::nullopt;
        seen.set(nxt);
        path.push_back(nxt);
    }
    return path;
}

SpecialWitness caterpillar_partition(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    auto spine = caterpillar_spine(g);
    if (!spine) throw std::invalid_argument("caterpillar_partition needs a caterpillar");

    Bits on_spine(g.n());
    for (int v : *spine) on_spine.set(v);
    std::vector<int> ordering;
    for (int v : *spine) {
        minus(g.neighbors(v), on_spine).for_each([&](int leaf) { ordering.push_back(leaf); });
        ordering.push_back(v);
    }
    if ((int)ordering.size() != g.n())
        throw std::logic_error("caterpillar ordering missed vertices");

    SpecialWitness w;
    w.k = k;
    w.d = k;
    for (int lo = 0; lo < g.n(); lo += k) {
        Bits part(g.n());
        for (int i = lo; i < std::min(lo + k, g.n()); ++i) part.set(ordering[i]);
        w.parts.push_back(std::move(part));
    }
    return w;
}

SpecialWitness grid_block_partition(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("grid_block_partition needs n,k >= 1");
    int K = (int)std::sqrt((double)k);
    while ((K + 1) * (K + 1) <= k) ++K;  // floor(sqrt(k)) without float edge cases
    while (K * K > k) --K;
    SpecialWitness w;
    w.k = k;
    w.d = 2 * K - 2;
    int blocks = (n + K - 1) / K;
    for (int bi = 0; bi < blocks; ++bi)
        for (int bj = 0; bj < blocks; ++bj) {
            Bits part(n * n);
            for (int x = K * bi; x < std::min(K * bi + K, n); ++x)
                for (int y = K * bj; y < std::min(K * bj + K, n); ++y) part.set(x * n + y);
            w.parts.push_back(std::move(part));
        }
    return w;
}

namespace {

struct KdSearch {
    const Graph& g;
    int k, d;
    uint64_t budget, nodes = 0;
    std::vector<Bits> parts;
    bool small_part_used;
    int small_size;

    bool extend_part(Bits& part, int need, int from, Bits& covered) {
        if (++nodes > budget) throw std::overflow_error("budget");
        if (need == 0) {
            parts.push_back(part);
            covered |= part;
            if (solve(covered)) return true;
            covered.subtract(part);
            parts.pop_back();
            return false;
        }
        for (int v = from; v < g.n(); ++v) {
            if (covered.test(v) || part.test(v)) continue;
            bool ok = true;
            part.for_each([&](int u) { ok = ok && g.distance(u, v) <= d; });
            if (!ok) continue;
            part.set(v);
            if (extend_part(part, need - 1, v + 1, covered)) return true;
            part.reset(v);
        }
        return false;
    }

    bool solve(Bits& covered) {
        if (covered.full()) return true;
        int v = covered.complement().first_set();
        Bits part(g.n());
        part.set(v);
        if (extend_part(part, k - 1, v + 1, covered)) return true;
        if (!small_part_used && small_size > 0 && small_size != k) {
            small_part_used = true;
            Bits part2(g.n());
            part2.set(v);
            if (extend_part(part2, small_size - 1, v + 1, covered)) return true;
            small_part_used = false;
        }
        return false;
    }
};

}  // namespace

KdSpecialResult is_kd_special(const Graph& g, int k, int d, uint64_t budget) {
    if (k < 1 || d < 0) throw std::invalid_argument("is_kd_special needs k >= 1, d >= 0");
    KdSearch search{g, k, d, budget, 0, {}, false, g.n() % k};
    KdSpecialResult res{KdSpecialResult::Outcome::Refuted, std::nullopt, 0};
    if (g.n() % k == 0) search.small_part_used = true;  // all parts must be exactly k
    try {
        Bits covered(g.n());
        if (search.solve(covered)) {
            res.outcome = KdSpecialResult::Outcome::Witness;
            res.witness = SpecialWitness{search.parts, k, d};
        }
    } catch (std::overflow_error&) {
        res.outcome = KdSpecialResult::Outcome::BudgetExceeded;
    }
    res.nodes = search.nodes;
    return res;
}

PartitionCover greedy_partition_cover(const Graph& g, int k, int d) {
    if (k < 1 || d < 0) throw std::invalid_argument("greedy cover needs k >= 1, d >= 0");
    PartitionCover cover;
    Bits covered(g.n());
    while (!covered.full()) {
        // grow a candidate part from every uncovered seed; keep the largest
        Bits best(g.n());
        for (int seed = 0; seed < g.n(); ++seed) {
            if (covered.test(seed)) continue;
            Bits part(g.n());
            part.set(seed);
            while (part.count() < k) {
                int pick = -1;
                for (int v = 0; v < g.n() && pick < 0; ++v) {
                    if (covered.test(v) || part.test(v)) continue;
                    bool ok = true;
                    part.for_each([&](int u) { ok = ok && g.distance(u, v) <= d; });
                    if (ok) pick = v;
                }
                if (pick < 0) break;
                part.set(pick);
            }
            if (part.count() > best.count()) best = part;
        }
        cover.parts.push_back(best);
        covered |= best;
    }
    cover.bound = (int)cover.parts.size() + d;
    return cover;
}

}  // namespace liminal
