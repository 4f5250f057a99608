#ifndef LIMINAL_BOUNDS_HPP
#define LIMINAL_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace liminal {

enum class BoundKind { Lower, Upper, Exact };

struct BoundEntry {
    std::string theorem;  // short id, e.g. "cl-over-k", "paths-upper"
    BoundKind kind = BoundKind::Lower;
    double value = 0;          // raw real value as the formula evaluates
    int tightened = 0;         // ceil for lowers, floor for uppers (b_k is integral)
    bool hypotheses_ok = true; // false entries are reported but not binding
    bool asymptotic = false;   // carries a (1+o(1)) factor evaluated at 1
    std::string notes;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    // max of binding lowers and min of binding uppers (hypotheses_ok, not
    // asymptotic); any exact entry must lie between them.
    std::optional<double> best_lower() const;
    std::optional<double> best_upper() const;
    bool consistent() const;
};

BoundEntry lower_entry(std::string thm, double v, bool ok = true, std::string notes = "");
BoundEntry upper_entry(std::string thm, double v, bool ok = true, std::string notes = "");
BoundEntry exact_entry(std::string thm, double v, bool ok = true, std::string notes = "");

// ceil(CL/k) <= b_k <= b + ceil(n/k); entries omitted when inputs missing.
std::vector<BoundEntry> general_bounds(int n, int k, std::optional<int> b,
                                       std::optional<int> cl);

// floor(n/(k+1)) + floor((-1+sqrt(5+4k))/2) <= b_k(P_n) <= ceil(n/k) + k - 1,
// plus the asymptotic-regime tag.
std::vector<BoundEntry> path_bounds(int n, int k);

// Hypercube: exact cooling n, the log_2 k lower bound, the Kleitman-based
// upper bound, the exact k = 2,3,4 values above their thresholds, the
// burning value, and the draft-appendix lower bound with hypothesis checks.
std::vector<BoundEntry> hypercube_bounds(int n, int k);

// Square grid G_n per the seven tabulated ranges; lower per the four-case
// lower-bound theorem and upper per the five-case upper-bound theorem.
std::vector<BoundEntry> grid_bounds(int n, long long k);

// Table row (1..7) a given k falls into for side length n; rows 4/5/6
// overlap when n < 222 (row 5 can be empty), in which case the first
// matching row wins and `range5_empty` callers should check.
int grid_table_range(int n, long long k);
bool grid_range5_empty(int n);

struct ProductQuery {
    int k = 1;
    std::optional<int> j;         // clique factor size in G □ K_j
    std::optional<int> size_h;    // |V(H)|
    std::optional<int> diam_g;
    std::optional<int> cl_g;
    std::optional<int> b_g;
    std::optional<int> m;         // max cooling-sequence length of G
    std::optional<int> n_power;   // exponent in G^{□n}
    std::optional<int> t;         // disjoint clique copies
    std::optional<int> cl_product;  // CL(G □ K_j), for the equality theorem
};
std::vector<BoundEntry> product_bounds(const ProductQuery& q);

// ceil(n/k) + d when a (k,d)-special witness exists; T + d when a
// partition-cover of size T is supplied.
std::vector<BoundEntry> special_and_cover_bounds(int n, int k, int d, bool witness,
                                                 std::optional<int> cover_size);

struct SweepRow {
    long long k;
    double lower, upper;
    int heur_small, heur_large;
};

// Deterministic basic-Saboteur playouts against both greedy Arsonist
// variants on G_n, with the tabulated bound envelope.
std::vector<SweepRow> grid_sweep(int n, const std::vector<long long>& ks);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace liminal

#endif
