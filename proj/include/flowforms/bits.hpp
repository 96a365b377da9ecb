// Small dynamic bitset used for route sets (faces) and edge supports.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flowforms {

struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int nbits) : w((static_cast<size_t>(nbits) + 63) / 64, 0) {}

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
        return *this;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }

    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    // true iff every bit of o is also set here
    bool contains(const Bits& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if ((o.w[k] & ~w[k]) != 0) return false;
        return true;
    }

    bool operator==(const Bits& o) const = default;
    auto operator<=>(const Bits& o) const = default;

    template <typename F>
    void for_each(F f) const {
        for (size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                int b = __builtin_ctzll(x);
                f(static_cast<int>(k * 64) + b);
                x &= x - 1;
            }
        }
    }
};

struct BitsHash {
    size_t operator()(const Bits& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : b.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace flowforms
