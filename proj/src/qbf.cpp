#include "liminal/qbf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liminal {

QbfFormula parse_qdimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    QbfFormula f;
    std::vector<int> quantified;  // variable -> 0/1
    long declared_vars = -1, declared_clauses = -1;
    bool clauses_started = false;

    auto var_of = [&](int lit) {
        int v = lit < 0 ? -lit : lit;
        if (v == 0) throw std::invalid_argument("qdimacs: zero literal inside a clause");
        return v;
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf")
                throw std::invalid_argument("qdimacs: bad problem line");
            continue;
        }
        if (tok == "e" || tok == "a") {
            if (clauses_started)
                throw std::invalid_argument("qdimacs: quantifier after clauses");
            Quant q = tok == "e" ? Quant::Exists : Quant::ForAll;
            int v;
            while (ls >> v && v != 0) {
                if (v < 0) throw std::invalid_argument("qdimacs: negative variable in prefix");
                if ((int)f.prefix.size() + 1 != v)
                    throw std::invalid_argument(
                        "qdimacs: prefix must quantify variables 1..n in order");
                f.prefix.push_back(q);
                quantified.push_back(1);
            }
            continue;
        }
        // clause line
        clauses_started = true;
        std::istringstream cs(line);
        std::vector<int> lits;
        int lit;
        while (cs >> lit && lit != 0) lits.push_back(lit);
        if (lits.size() != 3)
            throw std::invalid_argument("qdimacs: clause arity " + std::to_string(lits.size()) +
                                        ", want exactly 3");
        for (int l : lits)
            if (var_of(l) > (int)f.prefix.size())
                throw std::invalid_argument("qdimacs: clause references unquantified variable " +
                                            std::to_string(var_of(l)));
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }

    if (f.prefix.empty()) throw std::invalid_argument("qdimacs: no quantified variables");
    if (f.clauses.empty()) throw std::invalid_argument("qdimacs: empty clause list");
    if (declared_vars >= 0 && declared_vars != (long)f.prefix.size())
        throw std::invalid_argument("qdimacs: variable count disagrees with header");
    if (declared_clauses >= 0 && declared_clauses != (long)f.clauses.size())
        throw std::invalid_argument("qdimacs: clause count disagrees with header");
    return f;
}

QbfFormula parse_qdimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open qbf file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qdimacs(ss.str());
}

namespace {

bool eval_rec(const QbfFormula& f, size_t depth, uint32_t assignment) {
    if (depth == f.prefix.size()) {
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = lit < 0 ? -lit : lit;
                bool val = (assignment >> (v - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) return false;
        }
        return true;
    }
    bool with_false = eval_rec(f, depth + 1, assignment);
    bool with_true = eval_rec(f, depth + 1, assignment | (uint32_t(1) << depth));
    return f.prefix[depth] == Quant::Exists ? (with_false || with_true)
                                            : (with_false && with_true);
}

}  // namespace

bool eval_qbf(const QbfFormula& f) {
    if (f.n_vars() > 20) throw std::invalid_argument("eval_qbf: more than 20 variables");
    return eval_rec(f, 0, 0);
}

std::vector<int> pad_missing_literals(QbfFormula& f) {
    std::vector<int> added;
    std::vector<char> pos(f.n_vars() + 1, 0), neg(f.n_vars() + 1, 0);
    for (const auto& cl : f.clauses)
        for (int lit : cl) (lit > 0 ? pos[lit] : neg[-lit]) = 1;
    for (int v = 1; v <= f.n_vars(); ++v)
        if (!pos[v] || !neg[v]) {
            added.push_back(f.n_clauses());
            f.clauses.push_back({v, -v, v});
        }
    return added;
}

std::string to_qdimacs(const QbfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.n_vars() << ' ' << f.n_clauses() << '\n';
    for (int v = 1; v <= f.n_vars(); ++v)
        os << (f.prefix[v - 1] == Quant::Exists ? 'e' : 'a') << ' ' << v << " 0\n";
    for (const auto& cl : f.clauses) os << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
    return os.str();
}

}  // namespace liminal
