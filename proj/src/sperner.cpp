#include "liminal/sperner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liminal {

std::vector<int> SpernerFamily::set_elements(size_t i) const {
    std::vector<int> v;
    uint64_t m = sets[i];
    for (int p = 0; m; ++p, m >>= 1)
        if (m & 1) v.push_back(ground[p]);
    return v;
}

std::string SpernerFamily::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) os << ' ';
        os << '{';
        auto e = set_elements(i);
        for (size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j];
        os << '}';
    }
    return os.str();
}

// Masks over [n] with element e at bit e-1. The recursion builds the family
// on [n] from the family on [n-2]:
//   B_2 = {n-1, n},  B_{i+1} = A_i ∪ {n} for 2 <= i <= n-3,  B_{n-1} = [n-1].
// The i-range in the source text stops one set short; extending it to n-3
// yields the stated n-2 sets and verify_sperner guards the result.
static std::vector<uint64_t> rainbow_masks(int n, bool forced_bases) {
    if (n == 3) return {forced_bases ? 0b110u : 0b011u};            // {2,3} / {1,2}
    if (n == 4) {
        if (forced_bases) return {0b1100, 0b0111};                  // {3,4},{1,2,3}
        return {0b0011, 0b1101};                                    // {1,2},{1,3,4}
    }
    std::vector<uint64_t> a = rainbow_masks(n - 2, forced_bases);
    std::vector<uint64_t> b;
    b.push_back((uint64_t(1) << (n - 2)) | (uint64_t(1) << (n - 1)));  // {n-1,n}
    for (uint64_t ai : a) b.push_back(ai | (uint64_t(1) << (n - 1)));
    b.push_back((uint64_t(1) << (n - 1)) - 1);                          // [n-1]
    return b;
}

SpernerFamily rainbow_sperner(int n) {
    if (n < 3) throw std::invalid_argument("rainbow_sperner needs n >= 3");
    if (n > 63) throw std::invalid_argument("rainbow_sperner ground set too large");
    SpernerFamily f;
    f.ground.resize(n);
    std::iota(f.ground.begin(), f.ground.end(), 1);
    f.sets = rainbow_masks(n, false);
    f.multiplicity = 1;
    return f;
}

SpernerFamily rainbow_sperner_forced(const std::vector<int>& ground, int forced) {
    int s = (int)ground.size();
    if (s < 3) throw std::invalid_argument("rainbow_sperner_forced needs |ground| >= 3");
    if (s > 63) throw std::invalid_argument("ground set too large");
    std::vector<int> sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("ground set has duplicates");
    auto it = std::find(sorted.begin(), sorted.end(), forced);
    if (it == sorted.end()) throw std::invalid_argument("forced element not in ground set");

    // Relabel so `forced` plays the role of the largest element n, which the
    // construction places in every set but the last.
    sorted.erase(it);
    sorted.push_back(forced);  // position p (0-based) maps to role p+1; forced = role s

    std::vector<uint64_t> masks = rainbow_masks(s, true);

    SpernerFamily f;
    f.ground = ground;
    std::sort(f.ground.begin(), f.ground.end());
    f.multiplicity = 1;
    for (uint64_t m : masks) {
        uint64_t out = 0;
        for (int p = 0; p < s; ++p)
            if (m >> p & 1) {
                int elem = sorted[p];
                int pos = int(std::lower_bound(f.ground.begin(), f.ground.end(), elem) -
                              f.ground.begin());
                out |= uint64_t(1) << pos;
            }
        f.sets.push_back(out);
    }

    // The relabeling is this artifact's construction, not the source's; check
    // the containment pattern rather than assuming it.
    uint64_t forced_bit =
        uint64_t(1) << (std::lower_bound(f.ground.begin(), f.ground.end(), forced) -
                        f.ground.begin());
    for (size_t i = 0; i + 1 < f.sets.size(); ++i)
        if (!(f.sets[i] & forced_bit))
            throw std::logic_error("forced element missing from a non-largest set");
    auto rep = verify_sperner(f);
    if (!rep.pass) throw std::logic_error("forced construction failed verification");
    return f;
}

SpernerReport verify_sperner(const SpernerFamily& fam) {
    SpernerReport rep;
    auto fail = [&](std::string s) {
        rep.pass = false;
        rep.failures.push_back(std::move(s));
    };

    if (fam.sets.empty()) {
        fail("empty family");
        return rep;
    }
    int lo = 1 << 30, hi = 0;
    for (uint64_t s : fam.sets) {
        int c = std::popcount(s);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    if (lo != 2) fail("smallest cardinality is " + std::to_string(lo) + ", want 2");
    for (int c = 2; c <= hi; ++c) {
        int cnt = 0;
        for (uint64_t s : fam.sets)
            if (std::popcount(s) == c) ++cnt;
        if (cnt != fam.multiplicity)
            fail("cardinality " + std::to_string(c) + " has " + std::to_string(cnt) +
                 " sets, want " + std::to_string(fam.multiplicity));
    }
    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (size_t j = 0; j < fam.sets.size(); ++j) {
            if (i == j) continue;
            if ((fam.sets[i] & ~fam.sets[j]) == 0)
                fail("antichain violated: set " + std::to_string(i) + " ⊆ set " +
                     std::to_string(j));
        }
    if (fam.multiplicity == 1) {
        for (size_t i = 0; i < fam.sets.size(); ++i)
            for (size_t j = i + 1; j < fam.sets.size(); ++j) {
                int ci = std::popcount(fam.sets[i]), cj = std::popcount(fam.sets[j]);
                int sd = std::popcount(fam.sets[i] ^ fam.sets[j]);
                if (sd < std::abs(ci - cj) + 2)
                    fail("symmetric difference of sizes " + std::to_string(ci) + "," +
                         std::to_string(cj) + " is " + std::to_string(sd));
            }
    }
    return rep;
}

}  // namespace liminal
