#pragma once

#include <optional>

#include "ekr/shadow.hpp"

namespace ekr {

// The pivot partition of an intersecting family F:
//   F0 = members avoiding the pivot, F1 = members containing it,
//   G1 = { F \ {pivot} : F in F1 },               (k-1)-uniform
//   G0 = { ([n]\{pivot}) \ F : F in F0 },         (n-1-k)-uniform
// G0 and G1 keep ground_n = n; avoiding the pivot is an invariant of the
// decomposition, not a relabeling.
struct EkrDecomposition {
    int n;
    int k;
    int pivot;
    UniformFamily f0;
    UniformFamily f1;
    UniformFamily g1;
    UniformFamily g0;

    Subset window() const {
        return Subset(n, Subset::mask_of_first(n) & ~pivot_bit());
    }
    std::uint64_t pivot_bit() const { return std::uint64_t{1} << (pivot - 1); }
};

// Test hook: builds the four families without the intersecting check.
inline EkrDecomposition decompose_unchecked(const UniformFamily& f, int pivot) {
    const int n = f.ground_n();
    const int k = f.k();
    if (pivot < 1 || pivot > n) throw RangeError("decompose: pivot outside [1, n]");
    if (k < 1) throw RangeError("decompose: requires k >= 1");
    const std::uint64_t pb = std::uint64_t{1} << (pivot - 1);
    const std::uint64_t wmask = Subset::mask_of_first(n) & ~pb;

    std::vector<std::uint64_t> f0m, f1m, g1m, g0m;
    for (std::uint64_t m : f.masks()) {
        if (m & pb) {
            f1m.push_back(m);
            g1m.push_back(m & ~pb);  // same bit cleared everywhere: order kept
        } else {
            f0m.push_back(m);
            g0m.push_back(wmask & ~m);  // complementation reverses colex order
        }
    }
    std::reverse(g0m.begin(), g0m.end());
    EkrDecomposition d{n, k, pivot,
                       UniformFamily::from_canonical_masks(n, k, std::move(f0m)),
                       UniformFamily::from_canonical_masks(n, k, std::move(f1m)),
                       UniformFamily::from_canonical_masks(n, k - 1, std::move(g1m)),
                       UniformFamily::from_canonical_masks(n, n - 1 - k, std::move(g0m))};
    return d;
}

inline EkrDecomposition decompose(const UniformFamily& f, int pivot = 1) {
    if (auto bad = find_disjoint_pair(f))
        throw NotIntersectingError("family is not intersecting",
                                   f.at(bad->first).elements(), f.at(bad->second).elements());
    return decompose_unchecked(f, pivot);
}

struct ShadowDisjointness {
    bool disjoint = true;
    std::optional<Subset> witness;  // a set in both G1 and the shadow of G0
};

// G1 and the (k-1)-shadow of G0 must be disjoint when the original family
// is intersecting. For n < 2k the shadow is empty (no (k-1)-subset of a
// smaller set), so the check is vacuous there.
inline ShadowDisjointness check_shadow_disjoint(const EkrDecomposition& d) {
    if (d.g0.empty() || d.k - 1 > d.g0.k()) return {};
    const UniformFamily sh = shadow(d.g0, d.k - 1);
    const auto& a = d.g1.masks();
    const auto& b = sh.masks();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return {false, Subset(d.n, a[i])};
        if (a[i] < b[j]) ++i; else ++j;
    }
    return {};
}

inline std::optional<int> g0_min_intersection(const EkrDecomposition& d) {
    return min_pairwise_intersection(d.g0);
}

// One record per step of the summarizing chain
//   |F| = |F1| + |F0| = |G1| + |G0| <= |G1| + |shadow_{k-1} G0| <= C(n-1, k-1).
struct ChainReport {
    std::uint64_t f1_size = 0;
    std::uint64_t f0_size = 0;
    std::uint64_t g1_size = 0;
    std::uint64_t g0_size = 0;
    std::uint64_t shadow_g0_size = 0;
    bool disjoint = false;
    bool katona_step = false;
    bool packing_step = false;
    bool final_bound = false;
    std::uint64_t family_size = 0;
    std::uint64_t bound = 0;
    std::optional<Subset> witness;
};

inline ChainReport run_chain(const EkrDecomposition& d) {
    if (d.n < 2 * d.k)
        throw BoundNotApplicableError("EKR bound requires n >= 2k (n = " + std::to_string(d.n) +
                                      ", k = " + std::to_string(d.k) + ")");
    ChainReport r;
    r.f1_size = d.f1.size();
    r.f0_size = d.f0.size();
    r.g1_size = d.g1.size();
    r.g0_size = d.g0.size();
    const UniformFamily sh = d.g0.empty() ? UniformFamily(d.n, d.k - 1) : shadow(d.g0, d.k - 1);
    r.shadow_g0_size = sh.size();

    const ShadowDisjointness dis = check_shadow_disjoint(d);
    r.disjoint = dis.disjoint;
    if (!dis.disjoint) r.witness = dis.witness;

    // Katona step with a = n-k-1, b = n-2k on the complementary family.
    try {
        r.katona_step = katona_check(d.g0, d.n - 2 * d.k).holds;
    } catch (const NotBIntersectingError& e) {
        r.katona_step = false;
        if (!r.witness) r.witness = Subset::of(d.n, e.witness_a);
    }

    r.bound = binom(d.n - 1, d.k - 1);
    r.packing_step = r.g1_size + r.shadow_g0_size <= r.bound;
    r.family_size = r.f0_size + r.f1_size;
    r.final_bound = r.family_size <= r.bound;
    return r;
}

struct ExtremalClass {
    enum class Kind { STAR, NOT_MAXIMUM, MAXIMUM_NON_STAR } kind;
    int center = 0;  // common element, STAR only

    friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

inline const char* to_string(ExtremalClass::Kind k) {
    switch (k) {
        case ExtremalClass::Kind::STAR: return "STAR";
        case ExtremalClass::Kind::NOT_MAXIMUM: return "NOT_MAXIMUM";
        case ExtremalClass::Kind::MAXIMUM_NON_STAR: return "MAXIMUM_NON_STAR";
    }
    return "?";
}

inline ExtremalClass classify_extremal(const UniformFamily& f) {
    if (f.k() < 1) throw RangeError("classify_extremal: requires k >= 1");
    if (f.ground_n() < 2 * f.k())
        throw BoundNotApplicableError("classify_extremal: requires n >= 2k");
    if (auto bad = find_disjoint_pair(f))
        throw NotIntersectingError("family is not intersecting",
                                   f.at(bad->first).elements(), f.at(bad->second).elements());
    const std::uint64_t bound = binom(f.ground_n() - 1, f.k() - 1);
    if (f.size() < bound) return {ExtremalClass::Kind::NOT_MAXIMUM, 0};
    const std::uint64_t common = f.common_mask();
    if (common != 0) return {ExtremalClass::Kind::STAR, std::countr_zero(common) + 1};
    return {ExtremalClass::Kind::MAXIMUM_NON_STAR, 0};
}

// All k-subsets of [n] containing `center`; size C(n-1, k-1).
inline UniformFamily star(int n, int k, int center) {
    if (n < 1 || n > kMaxGround) throw RangeError("star: n outside [1, 64]");
    if (k < 1 || k > n) throw RangeError("star: k outside [1, n]");
    if (center < 1 || center > n) throw RangeError("star: center outside [1, n]");
    const std::uint64_t cb = std::uint64_t{1} << (center - 1);
    const Subset rest(n, Subset::mask_of_first(n) & ~cb);
    std::vector<std::uint64_t> masks = k_subsets_of_window(rest, k - 1).masks();
    for (auto& m : masks) m |= cb;  // same bit added everywhere: order kept
    return UniformFamily::from_canonical_masks(n, k, std::move(masks));
}

}  // namespace ekr
