#include "liminal/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liminal {

VertexOrder VertexOrder::identity(int n) {
    VertexOrder o;
    o.by_rank.resize(n);
    o.rank_of.resize(n);
    for (int i = 0; i < n; ++i) o.by_rank[i] = o.rank_of[i] = i;
    return o;
}

VertexOrder VertexOrder::from_ranking(std::vector<int> by_rank) {
    VertexOrder o;
    o.rank_of.assign(by_rank.size(), -1);
    for (size_t r = 0; r < by_rank.size(); ++r) {
        int v = by_rank[r];
        if (v < 0 || v >= (int)by_rank.size() || o.rank_of[v] != -1)
            throw std::invalid_argument("vertex order is not a permutation");
        o.rank_of[v] = (int)r;
    }
    o.by_rank = std::move(by_rank);
    return o;
}

VertexOrder graded_lex_order(int rows, int cols) {
    std::vector<int> by_rank;
    by_rank.reserve(size_t(rows) * cols);
    for (int x = 0; x < rows; ++x)
        for (int y = 0; y < cols; ++y) by_rank.push_back(x * cols + y);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        int ax = a / cols, ay = a % cols, bx = b / cols, by = b % cols;
        if (ax + ay != bx + by) return ax + ay < bx + by;
        return ax < bx;
    });
    return VertexOrder::from_ranking(std::move(by_rank));
}

Graph::Graph(int n) : n_(n), labels_(n) {
    if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");
    adj_.assign(n, Bits(n));
}

Graph::Graph(const Graph& o) : n_(o.n_), adj_(o.adj_), labels_(o.labels_) {
    std::lock_guard<std::mutex> lock(o.dist_mu_);
    dist_ = o.dist_;
}

Graph& Graph::operator=(const Graph& o) {
    if (this != &o) {
        n_ = o.n_;
        adj_ = o.adj_;
        labels_ = o.labels_;
        std::lock_guard<std::mutex> lock(o.dist_mu_);
        dist_ = o.dist_;
    }
    return *this;
}

Graph::Graph(Graph&& o) noexcept
    : n_(o.n_), adj_(std::move(o.adj_)), labels_(std::move(o.labels_)) {
    std::lock_guard<std::mutex> lock(o.dist_mu_);
    dist_ = std::move(o.dist_);
}

Graph& Graph::operator=(Graph&& o) noexcept {
    if (this != &o) {
        n_ = o.n_;
        adj_ = std::move(o.adj_);
        labels_ = std::move(o.labels_);
        std::lock_guard<std::mutex> lock(o.dist_mu_);
        dist_ = std::move(o.dist_);
    }
    return *this;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += adj_[v].count();
    return deg_sum / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    adj_[u].set(v);
    adj_[v].set(u);
    std::lock_guard<std::mutex> lock(dist_mu_);
    dist_.reset();
}

Bits Graph::expand(const Bits& s) const {
    Bits r = s;
    s.for_each([&](int v) { r |= adj_[v]; });
    return r;
}

std::vector<int> Graph::bfs(int src) const {
    std::vector<int> dist(n_, n_);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        adj_[u].for_each([&](int v) {
            if (dist[v] == n_) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        });
    }
    return dist;
}

const std::vector<std::vector<int>>& Graph::distances() const {
    std::lock_guard<std::mutex> lock(dist_mu_);
    if (!dist_) {
        auto m = std::make_shared<std::vector<std::vector<int>>>();
        m->reserve(n_);
        for (int v = 0; v < n_; ++v) m->push_back(bfs(v));
        dist_ = std::move(m);
    }
    return *dist_;
}

int Graph::diameter() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        for (int u : bfs(v))
            if (u > d) d = u;
    return d;
}

bool Graph::connected() const { return component_count() == 1; }

int Graph::component_count() const {
    Bits seen(n_);
    int comps = 0;
    for (int v = 0; v < n_; ++v) {
        if (seen.test(v)) continue;
        ++comps;
        Bits comp(n_);
        comp.set(v);
        while (true) {
            Bits next = expand(comp);
            if (next == comp) break;
            comp = next;
        }
        seen |= comp;
    }
    return comps;
}

bool Graph::is_tree() const { return connected() && edge_count() == n_ - 1; }

// --- generators ---------------------------------------------------------

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

static std::string subset_label(unsigned mask) {
    std::string s = "{";
    for (int e = 0; mask; ++e, mask >>= 1) {
        if (mask & 1) {
            if (s.size() > 1) s += ',';
            s += std::to_string(e + 1);
        }
    }
    return s + "}";
}

Graph make_hypercube(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("hypercube dimension out of range");
    Graph g(1 << n);
    for (int v = 0; v < (1 << n); ++v) {
        g.set_label(v, subset_label(unsigned(v)));
        for (int b = 0; b < n; ++b) {
            int u = v ^ (1 << b);
            if (u > v) g.add_edge(v, u);
        }
    }
    return g;
}

Graph make_grid(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("grid dims must be positive");
    Graph g(rows * cols);
    for (int x = 0; x < rows; ++x) {
        for (int y = 0; y < cols; ++y) {
            int v = x * cols + y;
            g.set_label(v, "(" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (x + 1 < rows) g.add_edge(v, v + cols);
            if (y + 1 < cols) g.add_edge(v, v + 1);
        }
    }
    return g;
}

Graph make_spider(int legs, int len) {
    if (legs < 3) throw std::invalid_argument("spider needs at least 3 legs");
    if (len < 1) throw std::invalid_argument("spider legs need at least one vertex");
    Graph g(1 + legs * len);
    g.set_label(0, "head");
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            int v = 1 + l * len + i;
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

Graph make_caterpillar(const std::vector<int>& leaf_counts) {
    int r = (int)leaf_counts.size();
    if (r < 1) throw std::invalid_argument("caterpillar needs a spine");
    int n = r;
    for (int d : leaf_counts) {
        if (d < 0) throw std::invalid_argument("negative leaf count");
        n += d;
    }
    Graph g(n);
    // spine first: vertices 0..r-1
    for (int i = 0; i + 1 < r; ++i) g.add_edge(i, i + 1);
    int next = r;
    for (int i = 0; i < r; ++i) {
        g.set_label(i, "v" + std::to_string(i + 1));
        for (int j = 0; j < leaf_counts[i]; ++j) {
            g.set_label(next, "u" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            g.add_edge(i, next++);
        }
    }
    return g;
}

Graph make_cliques(int copies, int r) {
    if (copies < 1 || r < 1) throw std::invalid_argument("cliques:TxR needs T,R >= 1");
    Graph g(copies * r);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) g.add_edge(c * r + i, c * r + j);
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long prod = (long long)g.n() * h.n();
    if (prod > (1 << 22))
        throw std::invalid_argument("product graph too large for supported state width");
    Graph p((int)prod);
    int m = h.n();
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < m; ++v) {
            int a = u * m + v;
            h.neighbors(v).for_each([&](int y) {
                if (y > v) p.add_edge(a, u * m + y);
            });
            g.neighbors(u).for_each([&](int x) {
                if (x > u) p.add_edge(a, x * m + v);
            });
        }
    }
    return p;
}

Graph strong_product(const Graph& g, const Graph& h) {
    Graph p = cartesian_product(g, h);
    int m = h.n();
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < m; ++v)
            g.neighbors(u).for_each([&](int x) {
                h.neighbors(v).for_each([&](int y) {
                    if (x * m + y > u * m + v) p.add_edge(u * m + v, x * m + y);
                });
            });
    return p;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph u(g.n() + h.n());
    for (int v = 0; v < g.n(); ++v) {
        u.set_label(v, g.label(v));
        g.neighbors(v).for_each([&](int w) {
            if (w > v) u.add_edge(v, w);
        });
    }
    for (int v = 0; v < h.n(); ++v) {
        u.set_label(g.n() + v, h.label(v));
        h.neighbors(v).for_each([&](int w) {
            if (w > v) u.add_edge(g.n() + v, g.n() + w);
        });
    }
    return u;
}

// --- DSL -----------------------------------------------------------------

namespace {

struct SpecParser {
    const std::string& s;
    size_t pos = 0;

    explicit SpecParser(const std::string& str) : s(str) {}

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad graph spec '" + s + "': " + why);
    }

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }

    long number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }

    int positive(const char* what) {
        long v = number();
        if (v <= 0) fail(std::string(what) + " must be positive");
        return (int)v;
    }

    Graph parse() {
        Graph g = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return g;
    }

    Graph parse_expr() {
        std::string name = ident();
        if (name == "cart" || name == "strong" || name == "union") {
            expect('(');
            Graph a = parse_expr();
            expect(',');
            Graph b = parse_expr();
            expect(')');
            if (name == "cart") return cartesian_product(a, b);
            if (name == "strong") return strong_product(a, b);
            return disjoint_union(a, b);
        }
        expect(':');
        if (name == "path") return make_path(positive("N"));
        if (name == "cycle") return make_cycle(positive("N"));
        if (name == "complete") return make_complete(positive("N"));
        if (name == "hypercube") return make_hypercube(positive("N"));
        if (name == "grid") {
            int m = positive("M");
            if (!eat('x')) fail("grid wants MxN");
            return make_grid(m, positive("N"));
        }
        if (name == "spider") {
            int legs = positive("L");
            expect(',');
            return make_spider(legs, positive("P"));
        }
        if (name == "caterpillar") {
            expect('[');
            std::vector<int> counts;
            if (!eat(']')) {
                while (true) {
                    long d = number();
                    if (d < 0) fail("leaf counts must be nonnegative");
                    counts.push_back((int)d);
                    if (eat(']')) break;
                    expect(',');
                }
            }
            return make_caterpillar(counts);
        }
        if (name == "cliques") {
            int t = positive("T");
            if (!eat('x')) fail("cliques wants TxR");
            return make_cliques(t, positive("R"));
        }
        if (name == "file") {
            // rest of this argument: up to a ')' or ',' at this nesting level
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && s[pos] != ')' && s[pos] != ',') ++pos;
            std::string path = s.substr(start, pos - start);
            while (!path.empty() && isspace((unsigned char)path.back())) path.pop_back();
            if (path.empty()) fail("file: wants a path");
            return read_edge_list_file(path);
        }
        fail("unknown family '" + name + "'");
    }
};

}  // namespace

Graph build_family(const std::string& spec) { return SpecParser(spec).parse(); }

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                throw std::invalid_argument("edge list: bad header line");
        } else {
            long u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("edge list: bad edge line");
            edges.emplace_back((int)u, (int)v);
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    if ((long)edges.size() != m) throw std::invalid_argument("edge list: edge count mismatch");
    Graph g((int)n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.n(); ++v)
        g.neighbors(v).for_each([&](int u) {
            if (u > v) out << v << ' ' << u << '\n';
        });
}

std::optional<std::pair<int, int>> grid_dims_of_spec(const std::string& spec) {
    size_t i = spec.find_first_not_of(" \t");
    if (i == std::string::npos || spec.compare(i, 5, "grid:") != 0) return std::nullopt;
    try {
        Graph g = build_family(spec);  // validates
        std::string rest = spec.substr(i + 5);
        size_t x = rest.find('x');
        int rows = std::stoi(rest.substr(0, x));
        int cols = std::stoi(rest.substr(x + 1));
        (void)g;
        return std::make_pair(rows, cols);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace liminal
