#ifndef LIMINAL_SPERNER_HPP
#define LIMINAL_SPERNER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace liminal {

// An ordered family of subsets of a ground set, expected to contain exactly
// `multiplicity` sets of each cardinality 2..j+1 and to form an antichain.
// Sets are element bitmasks over a ground set of named elements.
struct SpernerFamily {
    std::vector<int> ground;        // element names, ascending
    std::vector<uint64_t> sets;     // bitmask over positions in `ground`
    int multiplicity = 1;

    int ground_size() const { return (int)ground.size(); }
    std::vector<int> set_elements(size_t i) const;
    std::string to_string() const;
};

struct SpernerReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Rainbow Sperner family on [n] of cardinality n-2 (sets of sizes 2..n-1),
// built by the doubling recursion from the n=3 and n=4 base families.
SpernerFamily rainbow_sperner(int n);

// Variant where `forced` is an element of every set except the largest;
// `ground` may be any >= 3 element set. Verified post hoc.
SpernerFamily rainbow_sperner_forced(const std::vector<int>& ground, int forced);

// Checks cardinality multiplicities and the antichain condition; for
// multiplicity 1 additionally checks |S_i Δ S_j| >= |i-j|+2 where indices
// are the set cardinalities.
SpernerReport verify_sperner(const SpernerFamily& fam);

}  // namespace liminal

#endif
