#include "liminal/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "liminal/solver.hpp"
#include "liminal/strategies.hpp"

namespace liminal {

namespace {

int ceil_div(long long a, long long b) { return (int)((a + b - 1) / b); }

BoundEntry make_entry(std::string thm, BoundKind kind, double v, bool ok, std::string notes) {
    BoundEntry e;
    e.theorem = std::move(thm);
    e.kind = kind;
    e.value = v;
    e.tightened = kind == BoundKind::Upper ? (int)std::floor(v + 1e-9)
                                           : (int)std::ceil(v - 1e-9);
    e.hypotheses_ok = ok;
    e.notes = std::move(notes);
    return e;
}

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    double v = 1;
    for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
}

}  // namespace

BoundEntry lower_entry(std::string thm, double v, bool ok, std::string notes) {
    return make_entry(std::move(thm), BoundKind::Lower, v, ok, std::move(notes));
}
BoundEntry upper_entry(std::string thm, double v, bool ok, std::string notes) {
    return make_entry(std::move(thm), BoundKind::Upper, v, ok, std::move(notes));
}
BoundEntry exact_entry(std::string thm, double v, bool ok, std::string notes) {
    return make_entry(std::move(thm), BoundKind::Exact, v, ok, std::move(notes));
}

std::optional<double> BoundReport::best_lower() const {
    std::optional<double> best;
    for (const auto& e : entries)
        if (e.hypotheses_ok && !e.asymptotic &&
            (e.kind == BoundKind::Lower || e.kind == BoundKind::Exact))
            best = best ? std::max(*best, e.value) : e.value;
    return best;
}

std::optional<double> BoundReport::best_upper() const {
    std::optional<double> best;
    for (const auto& e : entries)
        if (e.hypotheses_ok && !e.asymptotic &&
            (e.kind == BoundKind::Upper || e.kind == BoundKind::Exact))
            best = best ? std::min(*best, e.value) : e.value;
    return best;
}

bool BoundReport::consistent() const {
    auto lo = best_lower(), hi = best_upper();
    if (lo && hi && *lo > *hi + 1e-9) return false;
    for (const auto& e : entries)
        if (e.kind == BoundKind::Exact && e.hypotheses_ok) {
            if (lo && e.value < *lo - 1e-9) return false;
            if (hi && e.value > *hi + 1e-9) return false;
        }
    return true;
}

std::vector<BoundEntry> general_bounds(int n, int k, std::optional<int> b,
                                       std::optional<int> cl) {
    std::vector<BoundEntry> out;
    if (cl) out.push_back(lower_entry("cl-over-k", std::ceil(double(*cl) / k)));
    if (b) out.push_back(upper_entry("b-plus-n-over-k", *b + ceil_div(n, k)));
    return out;
}

std::vector<BoundEntry> path_bounds(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("path_bounds needs n,k >= 1");
    std::vector<BoundEntry> out;
    double lower = std::floor(double(n) / (k + 1)) +
                   std::floor((-1.0 + std::sqrt(5.0 + 4.0 * k)) / 2.0);
    double upper = ceil_div(n, k) + k - 1;
    std::string regime;
    double sq = std::sqrt((double)n);
    if (k <= 3) regime = "k=O(1): b_k = Theta(n)";
    else if (k < sq) regime = "k=o(sqrt n): b_k = (1+o(1)) n/k";
    else if (k <= 2 * sq) regime = "k=Theta(sqrt n): b_k = Theta(sqrt n)";
    else if (k < n) regime = "k=omega(sqrt n), o(n): b_k = (1+o(1)) sqrt n";
    else regime = "k=Theta(n): b_k = sqrt n + O(1)";
    out.push_back(lower_entry("paths-lower", lower));
    out.push_back(upper_entry("paths-upper", upper, true, regime));
    return out;
}

std::vector<BoundEntry> hypercube_bounds(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("hypercube_bounds needs n,k >= 1");
    std::vector<BoundEntry> out;

    if (n == 1) {
        out.push_back(exact_entry("cooling-hypercube", 2, k == 1, "CL(Q_1)=2"));
        return out;
    }
    if (k == 1) out.push_back(exact_entry("cooling-hypercube", n));
    out.push_back(upper_entry("cooling-hypercube", n, true, "b_k <= b_1 = n"));

    double log2k = std::ceil(std::log2((double)k) - 1e-12);
    out.push_back(lower_entry("log2k-lower", n - log2k));

    // burning value: exact at k = 2^n, a lower bound for every k
    double burn = std::ceil(n / 2.0) + 1;
    if ((n < 30 && k >= (1 << n)))
        out.push_back(exact_entry("burning-hypercube", burn));
    else
        out.push_back(lower_entry("burning-hypercube", burn, true, "b_k >= b"));

    if (k == 2) out.push_back(exact_entry("b2-hypercube", n - 1, n >= 7, "needs n >= 7"));
    if (k == 3) out.push_back(exact_entry("b34-hypercube", n - 1, n >= 11, "needs n >= 11"));
    if (k == 4) out.push_back(exact_entry("b34-hypercube", n - 1, n >= 11, "needs n >= 11"));

    {  // Kleitman-based upper bound
        bool ok = n + 2 <= k && n <= 62 && (double)k < std::pow(2.0, n - 1);
        int d = -1;
        double sum = 0;
        for (int i = 0; i <= n; ++i) {
            sum += binomial(n, i);
            if ((double)k > sum) d = i;
            else break;
        }
        if (d < 0) ok = false;
        out.push_back(upper_entry("kleitman-upper", ok ? n - d + 1 : n, ok,
                                  ok ? "d=" + std::to_string(d) : "hypotheses fail"));
    }

    {  // draft-appendix lower bound: smallest d meeting both hypotheses
        int best_d = -1;
        for (int d = 1; d <= n; ++d) {
            double s = 0;
            for (int i = 0; i <= d - 2; ++i) s += binomial(n, i);
            bool h1 = s >= k;
            double lhs = binomial((n + 2 + 1) / 2 + d, d);
            double rhs = double((n - 2) / 2 - d + 1) * k;
            bool h2 = lhs >= rhs;
            if (h1 && h2) {
                best_d = d;
                break;
            }
        }
        bool ok = best_d > 0;
        double v = 0, vproof = 0;
        if (ok) {
            v = n % 2 ? n - 2 * best_d + 1 : n - 2 * best_d + 2;
            vproof = n % 2 ? n - 2 * best_d - 1 : n - 2 * best_d;
        }
        std::string note = ok ? "draft appendix; d=" + std::to_string(best_d)
                              : "draft appendix; hypotheses fail";
        out.push_back(lower_entry("draft-level-lower", v, ok, note));
        out.push_back(lower_entry("draft-level-lower-proof-form", vproof, ok,
                                  note + "; game-length form"));
    }
    return out;
}

namespace {

double grid_f(double n) { return 2 * n - 2 * std::floor(std::log2(n + 3)); }
double grid_g(double k, double n) {
    return 2 * n - 3 * k / 4 - 7 - (2 * k + 3) * std::log((2 * n + 2 * k + 3) / (3 * k + 7));
}
double grid_h(double k, double n) {
    return n * n / k + std::cbrt(1.5) * std::pow(n, 2.0 / 3.0);
}
double grid_mid_upper(double k, double n) {
    return n * n / (k - 2 * std::sqrt(k) + 1) + 2 * std::sqrt(k) - 3;
}
double range5_left(double n) { return 2 * n + 23; }
double range5_right(double n) { return std::pow(3.0 / 16.0, 2.0 / 3.0) * std::pow(n, 4.0 / 3.0); }
double range7_left(double n) { return std::cbrt(2.0 / 3.0) * std::pow(n, 4.0 / 3.0); }

}  // namespace

bool grid_range5_empty(int n) { return range5_left(n) >= range5_right(n); }

int grid_table_range(int n, long long k) {
    double kk = (double)k, nn = (double)n;
    if (k == 1) return 1;
    if (kk < (nn - 3) / 2) return 2;
    if (kk <= 4 * nn / 7) return 3;
    if (kk < range5_left(nn)) return 4;
    if (kk < range5_right(nn)) return 5;
    if (kk < range7_left(nn)) return 6;
    return 7;
}

std::vector<BoundEntry> grid_bounds(int n, long long k) {
    if (n < 1 || k < 1 || k > (long long)n * n)
        throw std::invalid_argument("grid_bounds needs n >= 1 and 1 <= k <= n^2");
    double nn = n, kk = (double)k;
    std::vector<BoundEntry> out;
    int range = grid_table_range(n, k);

    // lower: four cases
    if (k == 1) {
        out.push_back(lower_entry("grid-lower", grid_f(nn), true, "range 1"));
    } else if (kk < 2 * nn + 23) {
        out.push_back(lower_entry("grid-lower", grid_g(kk, nn), true,
                                  "range " + std::to_string(range)));
    } else if (kk < range7_left(nn)) {
        out.push_back(lower_entry("grid-lower", (nn * nn + 2) / (kk + 2), true,
                                  "range " + std::to_string(range)));
    } else {
        out.push_back(lower_entry("grid-lower", std::cbrt(1.5) * std::pow(nn, 2.0 / 3.0) - 1,
                                  true, "range 7"));
    }

    // upper: five cases; the last carries a (1+o(1)) factor evaluated at 1
    if (k == 1) {
        out.push_back(upper_entry("grid-upper", grid_f(nn) + 2, true, "range 1"));
    } else if (kk <= (nn - 3) / 2) {
        out.push_back(upper_entry("grid-upper", 2 * nn - kk / 2 - 2, true, "range 2"));
    } else if (kk <= 4 * nn / 7) {
        out.push_back(upper_entry("grid-upper", 7 * nn / 4 - 5.0 / 4.0, true, "range 3"));
    } else if (kk < range5_right(nn)) {
        out.push_back(upper_entry("grid-upper", grid_mid_upper(kk, nn), true,
                                  "range " + std::to_string(range)));
    } else {
        BoundEntry e = upper_entry("grid-upper", grid_h(kk, nn), true,
                                   "range " + std::to_string(range) + "; (1+o(1)) factor at 1");
        e.asymptotic = true;
        out.push_back(e);
    }

    if (range == 5 && grid_range5_empty(n))
        out.push_back(lower_entry("grid-range5", 0, false,
                                  "range 5 empty below n = 222"));
    return out;
}

std::vector<BoundEntry> product_bounds(const ProductQuery& q) {
    std::vector<BoundEntry> out;
    const int k = q.k;
    if (q.j && q.diam_g) {
        bool ok = *q.j >= *q.diam_g + k;
        if (q.cl_product)
            out.push_back(exact_entry("bk-equals-cooling", *q.cl_product, ok,
                                      ok ? "j >= diam(G)+k" : "hypothesis j >= diam(G)+k fails"));
        else
            out.push_back(lower_entry("bk-equals-cooling", 0, false,
                                      "needs CL(G □ K_j) to state the equality"));
    }
    if (q.size_h && q.cl_g)
        out.push_back(lower_entry("gxh-cooling-lower", *q.cl_g, *q.size_h >= k,
                                  "|V(H)| >= k"));
    if (q.size_h && q.diam_g)
        out.push_back(lower_entry("gxh-diameter-lower", *q.diam_g + 1,
                                  *q.size_h >= *q.diam_g + k, "|V(H)| >= diam(G)+k"));
    if (q.m && q.n_power) {
        double v = std::floor(double(*q.m) / k) + double(*q.n_power - 1) * (*q.m - 1);
        out.push_back(lower_entry("power-cooling-lower", v));
        if (k == 1)
            out.push_back(lower_entry("power-cooling-corollary",
                                      double(*q.n_power) * (*q.m - 1) + 1, true,
                                      "CL(G^{□n}) form"));
    }
    if (q.t && q.b_g)
        out.push_back(exact_entry("disjoint-cliques", *q.t + *q.b_g, true,
                                  "b_k(G ∪ K^t_k) with k >= |V(G)|"));
    return out;
}

std::vector<BoundEntry> special_and_cover_bounds(int n, int k, int d, bool witness,
                                                 std::optional<int> cover_size) {
    std::vector<BoundEntry> out;
    if (witness)
        out.push_back(upper_entry("kd-special-upper", ceil_div(n, k) + d));
    if (cover_size)
        out.push_back(upper_entry("edge-cover-upper", *cover_size + d));
    return out;
}

std::vector<SweepRow> grid_sweep(int n, const std::vector<long long>& ks) {
    Graph g = make_grid(n, n);
    VertexOrder order = graded_lex_order(n, n);
    std::string spec = "grid:" + std::to_string(n) + "x" + std::to_string(n);
    std::vector<SweepRow> rows;
    for (long long k : ks) {
        SweepRow row;
        row.k = k;
        auto bounds = grid_bounds(n, k);
        row.lower = row.upper = 0;
        for (const auto& e : bounds) {
            if (e.theorem == "grid-lower") row.lower = e.value;
            if (e.theorem == "grid-upper") row.upper = e.value;
        }
        PlayOptions po;
        po.graph_spec = spec;
        row.heur_small = play(g, (int)k, basic_saboteur(order),
                              greedy_arsonist(order, GreedyVariant::Smallest), po)
                             .length;
        row.heur_large = play(g, (int)k, basic_saboteur(order),
                              greedy_arsonist(order, GreedyVariant::Largest), po)
                             .length;
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "k,lower,upper,heur_small,heur_large\n";
    for (const auto& r : rows)
        os << r.k << ',' << r.lower << ',' << r.upper << ',' << r.heur_small << ','
           << r.heur_large << '\n';
    return os.str();
}

}  // namespace liminal
