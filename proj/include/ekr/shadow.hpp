#pragma once

#include "ekr/family.hpp"

namespace ekr {

enum class KatonaExtremalClass { EQUAL_A_B, EMPTY, COMPLETE_ON_2A_MINUS_B, STRICT };

inline const char* to_string(KatonaExtremalClass c) {
    switch (c) {
        case KatonaExtremalClass::EQUAL_A_B: return "EQUAL_A_B";
        case KatonaExtremalClass::EMPTY: return "EMPTY";
        case KatonaExtremalClass::COMPLETE_ON_2A_MINUS_B: return "COMPLETE_ON_2A_MINUS_B";
        case KatonaExtremalClass::STRICT: return "STRICT";
    }
    return "?";
}

// Verification certificate for the intersecting-shadow inequality
// |A| <= |shadow_{a-b}(A)| on an a-uniform, b-intersecting family.
struct KatonaReport {
    int a = 0;
    int b = 0;
    std::uint64_t family_size = 0;
    std::uint64_t shadow_size = 0;
    bool holds = false;
    KatonaExtremalClass extremal_class = KatonaExtremalClass::STRICT;
};

namespace detail {

// One level down: drop each element of each member, deduplicate.
inline UniformFamily shadow_once(const UniformFamily& a) {
    assert(a.k() >= 1);
    std::vector<std::uint64_t> out;
    out.reserve(a.size() * static_cast<std::size_t>(a.k()));
    for (std::uint64_t m : a.masks())
        for (std::uint64_t b = m; b != 0; b &= b - 1)
            out.push_back(m & ~(b & (~b + 1)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return UniformFamily::from_canonical_masks(a.ground_n(), a.k() - 1, std::move(out));
}

}  // namespace detail

// The s-shadow: all s-subsets contained in some member. Computed by
// composing one-element drops from uniformity k down to s.
inline UniformFamily shadow(const UniformFamily& a, int s) {
    if (s < 0 || s > a.k())
        throw RangeError("shadow: s = " + std::to_string(s) + " outside [0, k = " +
                         std::to_string(a.k()) + "]");
    if (a.empty()) return UniformFamily(a.ground_n(), s);
    UniformFamily cur = a;
    while (cur.k() > s) cur = detail::shadow_once(cur);
    return cur;
}

namespace detail {

inline KatonaExtremalClass classify_katona_unchecked(const UniformFamily& a, int b) {
    const int ua = a.k();
    if (a.empty()) return KatonaExtremalClass::EMPTY;
    if (ua == b) return KatonaExtremalClass::EQUAL_A_B;
    // "A is the complete a-uniform family on 2a-b elements", detected up to
    // relabeling by the two cardinality conditions.
    const int support = std::popcount(a.union_mask());
    if (support == 2 * ua - b && a.size() == binom(2 * ua - b, ua))
        return KatonaExtremalClass::COMPLETE_ON_2A_MINUS_B;
    return KatonaExtremalClass::STRICT;
}

inline void require_b_intersecting(const UniformFamily& a, int b) {
    if (b < 0 || b > a.k())
        throw RangeError("katona: b = " + std::to_string(b) + " outside [0, k = " +
                         std::to_string(a.k()) + "]");
    if (auto bad = find_pair_below(a, b)) {
        throw NotBIntersectingError(
            "family is not " + std::to_string(b) + "-intersecting",
            a.at(bad->first).elements(), a.at(bad->second).elements());
    }
}

}  // namespace detail

inline KatonaExtremalClass classify_katona_equality(const UniformFamily& a, int b) {
    detail::require_b_intersecting(a, b);
    return detail::classify_katona_unchecked(a, b);
}

inline KatonaReport katona_check(const UniformFamily& a, int b) {
    detail::require_b_intersecting(a, b);
    KatonaReport r;
    r.a = a.k();
    r.b = b;
    r.family_size = a.size();
    r.shadow_size = shadow(a, a.k() - b).size();
    r.holds = r.family_size <= r.shadow_size;
    r.extremal_class = detail::classify_katona_unchecked(a, b);
    return r;
}

}  // namespace ekr
