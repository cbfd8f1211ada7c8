#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ekr/binomial.hpp"
#include "ekr/errors.hpp"

namespace ekr {

// A subset of the ground set [1, n], n <= 64, stored as a bitmask with
// element i at bit i-1. Colexicographic order on subsets coincides with
// numeric order of masks, which is what every canonical ordering in this
// library relies on.
class Subset {
public:
    Subset(int ground_n, std::uint64_t mask) : ground_n_(ground_n), mask_(mask) {
        check_ground(ground_n);
        if (ground_n < kMaxGround && (mask >> ground_n) != 0)
            throw RangeError("subset element exceeds ground set size " + std::to_string(ground_n));
    }

    static Subset of(int ground_n, const std::vector<int>& elements) {
        check_ground(ground_n);
        std::uint64_t m = 0;
        for (int e : elements) {
            if (e < 1 || e > ground_n)
                throw RangeError("element " + std::to_string(e) + " outside [1, " +
                                 std::to_string(ground_n) + "]");
            m |= std::uint64_t{1} << (e - 1);
        }
        return Subset(ground_n, m);
    }

    static Subset empty(int ground_n) { return Subset(ground_n, 0); }

    static Subset full(int ground_n) {
        check_ground(ground_n);
        return Subset(ground_n, mask_of_first(ground_n));
    }

    int ground_n() const { return ground_n_; }
    std::uint64_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }

    bool contains(int e) const {
        return e >= 1 && e <= ground_n_ && (mask_ >> (e - 1)) & 1u;
    }

    bool subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    friend bool operator==(const Subset&, const Subset&) = default;

    // Bitmask of {1, ..., n}.
    static std::uint64_t mask_of_first(int n) {
        return n >= kMaxGround ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

private:
    static void check_ground(int ground_n) {
        if (ground_n < 1 || ground_n > kMaxGround)
            throw RangeError("ground set size " + std::to_string(ground_n) +
                             " outside [1, " + std::to_string(kMaxGround) + "]");
    }

    int ground_n_;
    std::uint64_t mask_;
};

inline int intersection_size(const Subset& a, const Subset& b) {
    if (a.ground_n() != b.ground_n())
        throw GroundMismatchError("intersection_size: ground sets differ (" +
                                  std::to_string(a.ground_n()) + " vs " +
                                  std::to_string(b.ground_n()) + ")");
    return std::popcount(a.mask() & b.mask());
}

inline Subset complement_within(const Subset& a, const Subset& window) {
    if (a.ground_n() != window.ground_n())
        throw GroundMismatchError("complement_within: ground sets differ");
    if (!a.subset_of(window))
        throw NotContainedError("complement_within: set is not contained in the window");
    return Subset(a.ground_n(), window.mask() & ~a.mask());
}

// Rank of a k-subset in the colexicographic order of all k-subsets,
// rank(S) = sum_i C(e_i - 1, i) over the sorted elements e_1 < ... < e_k.
// Independent of the ground set size.
inline std::uint64_t colex_rank(const Subset& s) {
    std::uint64_t r = 0;
    int i = 0;
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1)
        r += binom(std::countr_zero(m), ++i);
    return r;
}

inline Subset colex_unrank(int n, int k, std::uint64_t r) {
    if (n < 1 || n > kMaxGround || k < 0 || k > n)
        throw RangeError("colex_unrank: invalid (n, k)");
    if (r >= binom(n, k))
        throw RangeError("colex_unrank: rank " + std::to_string(r) + " >= C(" +
                         std::to_string(n) + "," + std::to_string(k) + ")");
    std::uint64_t m = 0;
    int hi = n - 1;  // 0-based candidate element
    for (int i = k; i >= 1; --i) {
        while (binom(hi, i) > r) --hi;
        m |= std::uint64_t{1} << hi;
        r -= binom(hi, i);
        --hi;
    }
    return Subset(n, m);
}

}  // namespace ekr
