#ifndef LIMINAL_QBF_HPP
#define LIMINAL_QBF_HPP

#include <array>
#include <string>
#include <vector>

namespace liminal {

enum class Quant { Exists, ForAll };

// Fully quantified 3-CNF formula. Literals are +v / -v with variables
// numbered 1..n in prefix order.
struct QbfFormula {
    std::vector<Quant> prefix;               // prefix[i] quantifies variable i+1
    std::vector<std::array<int, 3>> clauses;

    int n_vars() const { return (int)prefix.size(); }
    int n_clauses() const { return (int)clauses.size(); }
};

// QDIMACS subset: optional "p cnf n m" header, "c" comments, quantifier
// lines "e ... 0"/"a ... 0", then exactly-3-literal clauses terminated by 0.
// Every variable must be quantified exactly once and every clause variable
// quantified.
QbfFormula parse_qdimacs(const std::string& text);
QbfFormula parse_qdimacs_file(const std::string& path);

// Truth value by recursive expansion of the quantifier tree; n_vars <= 20.
bool eval_qbf(const QbfFormula& f);

// Adds clauses x ∨ ¬x ∨ x for literals that appear in no clause, so that
// every literal occurs somewhere (the reduction builder requires this).
// Returns the indices of the added clauses.
std::vector<int> pad_missing_literals(QbfFormula& f);

std::string to_qdimacs(const QbfFormula& f);

}  // namespace liminal

#endif
