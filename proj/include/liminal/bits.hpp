#ifndef LIMINAL_BITS_HPP
#define LIMINAL_BITS_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

namespace liminal {

// Fixed-width bit-vector sized at construction. Widths up to 256 bits are
// stored inline; larger sets (e.g. hypercube vertex sets for n >= 9) spill
// to the heap. Solver states are pairs of these, so copy cost matters.
class Bits {
public:
    Bits() = default;

    explicit Bits(int nbits) : nbits_(nbits), words_((nbits + 63) / 64) {
        if (words_ > kInline) heap_.assign(words_, 0);
    }

    int size() const { return nbits_; }
    int words() const { return words_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w()[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w()[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w()[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    void clear() {
        for (int i = 0; i < words_; ++i) w()[i] = 0;
    }

    int count() const {
        int c = 0;
        for (int i = 0; i < words_; ++i) c += std::popcount(w()[i]);
        return c;
    }
    bool any() const {
        for (int i = 0; i < words_; ++i)
            if (w()[i]) return true;
        return false;
    }
    bool none() const { return !any(); }

    // True when every one of the nbits_ positions is set.
    bool full() const {
        for (int i = 0; i < words_; ++i)
            if (w()[i] != mask_word(i)) return false;
        return true;
    }

    Bits& operator|=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i) w()[i] |= o.w()[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i) w()[i] &= o.w()[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i) w()[i] ^= o.w()[i];
        return *this;
    }
    // this \ o
    Bits& subtract(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i) w()[i] &= ~o.w()[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }

    Bits complement() const {
        Bits r(*this);
        for (int i = 0; i < words_; ++i) r.w()[i] = ~w()[i] & mask_word(i);
        return r;
    }

    bool intersects(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i)
            if (w()[i] & o.w()[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (int i = 0; i < words_; ++i)
            if (w()[i] & ~o.w()[i]) return false;
        return true;
    }

    bool operator==(const Bits& o) const {
        if (nbits_ != o.nbits_) return false;
        for (int i = 0; i < words_; ++i)
            if (w()[i] != o.w()[i]) return false;
        return true;
    }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // -1 when empty.
    int first_set() const { return next_set(0); }
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        uint64_t cur = w()[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                int i = (wi << 6) + std::countr_zero(cur);
                return i < nbits_ ? i : -1;
            }
            if (++wi >= words_) return -1;
            cur = w()[wi];
        }
    }
    int last_set() const {
        for (int wi = words_ - 1; wi >= 0; --wi)
            if (w()[wi]) return (wi << 6) + 63 - std::countl_zero(w()[wi]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int wi = 0; wi < words_; ++wi) {
            uint64_t cur = w()[wi];
            while (cur) {
                f((wi << 6) + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bits of(int nbits, std::initializer_list<int> elems) {
        Bits b(nbits);
        for (int e : elems) b.set(e);
        return b;
    }
    static Bits of(int nbits, const std::vector<int>& elems) {
        Bits b(nbits);
        for (int e : elems) b.set(e);
        return b;
    }

    size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(nbits_);
        for (int i = 0; i < words_; ++i) {
            h ^= w()[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return size_t(h);
    }

    const uint64_t* data() const { return w(); }

private:
    static constexpr int kInline = 4;

    uint64_t* w() { return heap_.empty() ? inline_ : heap_.data(); }
    const uint64_t* w() const { return heap_.empty() ? inline_ : heap_.data(); }

    // Valid-bit mask for word i.
    uint64_t mask_word(int i) const {
        int rem = nbits_ - (i << 6);
        if (rem >= 64) return ~uint64_t(0);
        return (uint64_t(1) << rem) - 1;
    }

    uint64_t inline_[kInline] = {0, 0, 0, 0};
    std::vector<uint64_t> heap_;
    int nbits_ = 0;
    int words_ = 0;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace liminal

#endif
