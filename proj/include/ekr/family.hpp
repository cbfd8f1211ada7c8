#pragma once

#include <algorithm>
#include <cassert>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ekr/subset.hpp"

namespace ekr {

// A duplicate-free family of k-subsets of [1, n], stored as bitmasks in
// ascending numeric order. Numeric mask order is colexicographic order,
// so the stored sequence is the canonical form.
class UniformFamily {
public:
    UniformFamily(int ground_n, int k) : ground_n_(ground_n), k_(k) {
        if (ground_n < 1 || ground_n > kMaxGround)
            throw RangeError("family ground set size outside [1, 64]");
        if (k < 0 || k > ground_n)
            throw RangeError("family uniformity k outside [0, n]");
    }

    // Masks must already be sorted, duplicate-free, of popcount k and
    // within the ground set. Internal fast path for shadow/enumeration.
    static UniformFamily from_canonical_masks(int ground_n, int k,
                                              std::vector<std::uint64_t> masks) {
        UniformFamily f(ground_n, k);
#ifndef NDEBUG
        for (std::size_t i = 0; i < masks.size(); ++i) {
            assert(std::popcount(masks[i]) == k);
            assert((masks[i] & ~Subset::mask_of_first(ground_n)) == 0);
            assert(i == 0 || masks[i - 1] < masks[i]);
        }
#endif
        f.masks_ = std::move(masks);
        return f;
    }

    // Validating path: sorts, rejects wrong cardinality / range / duplicates.
    static UniformFamily from_masks(int ground_n, int k, std::vector<std::uint64_t> masks) {
        UniformFamily f(ground_n, k);
        for (std::uint64_t m : masks) {
            if ((m & ~Subset::mask_of_first(ground_n)) != 0)
                throw RangeError("family member has an element outside [1, n]");
            if (std::popcount(m) != k)
                throw CardinalityError("family member has cardinality " +
                                       std::to_string(std::popcount(m)) + ", expected " +
                                       std::to_string(k));
        }
        std::sort(masks.begin(), masks.end());
        if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
            throw DuplicateError("duplicate set in family");
        f.masks_ = std::move(masks);
        return f;
    }

    int ground_n() const { return ground_n_; }
    int k() const { return k_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    Subset at(std::size_t i) const { return Subset(ground_n_, masks_[i]); }

    bool contains_mask(std::uint64_t m) const {
        return std::binary_search(masks_.begin(), masks_.end(), m);
    }
    bool contains(const Subset& s) const {
        return s.ground_n() == ground_n_ && contains_mask(s.mask());
    }

    // Union and common intersection of all members, as masks.
    std::uint64_t union_mask() const {
        std::uint64_t u = 0;
        for (std::uint64_t m : masks_) u |= m;
        return u;
    }
    std::uint64_t common_mask() const {
        std::uint64_t c = Subset::mask_of_first(ground_n_);
        for (std::uint64_t m : masks_) c &= m;
        return c;
    }

    friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

private:
    int ground_n_;
    int k_;
    std::vector<std::uint64_t> masks_;
};

inline UniformFamily make_family(int ground_n, int k,
                                 const std::vector<std::vector<int>>& raw_sets) {
    if (ground_n < 1 || ground_n > kMaxGround)
        throw RangeError("family ground set size outside [1, 64]");
    if (k < 0 || k > ground_n) throw RangeError("family uniformity k outside [0, n]");
    std::vector<std::uint64_t> masks;
    masks.reserve(raw_sets.size());
    for (const auto& elems : raw_sets) {
        std::uint64_t m = 0;
        for (int e : elems) {
            if (e < 1 || e > ground_n)
                throw RangeError("element " + std::to_string(e) + " outside [1, " +
                                 std::to_string(ground_n) + "]");
            m |= std::uint64_t{1} << (e - 1);
        }
        if (static_cast<int>(elems.size()) != k || std::popcount(m) != k)
            throw CardinalityError("set has " + std::to_string(std::popcount(m)) +
                                   " distinct elements, expected " + std::to_string(k));
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
        throw DuplicateError("duplicate set in family");
    return UniformFamily::from_canonical_masks(ground_n, k, std::move(masks));
}

// First pair of disjoint members, if any.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_disjoint_pair(const UniformFamily& f) {
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if ((ms[i] & ms[j]) == 0) return std::make_pair(i, j);
    return std::nullopt;
}

inline bool is_intersecting(const UniformFamily& f) {
    return !find_disjoint_pair(f).has_value();
}

// Largest b such that the family is b-intersecting; no value when there
// are no pairs of distinct members.
inline std::optional<int> min_pairwise_intersection(const UniformFamily& f) {
    if (f.size() <= 1) return std::nullopt;
    const auto& ms = f.masks();
    int best = f.k();
    for (std::size_t i = 0; i < ms.size() && best > 0; ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            best = std::min(best, std::popcount(ms[i] & ms[j]));
            if (best == 0) break;
        }
    return best;
}

// First pair of members meeting in fewer than b elements, if any.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_pair_below(const UniformFamily& f, int b) {
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (std::popcount(ms[i] & ms[j]) < b) return std::make_pair(i, j);
    return std::nullopt;
}

// The set L of pairwise intersection sizes over distinct members.
inline std::set<int> intersection_sizes(const UniformFamily& f) {
    std::set<int> l;
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            l.insert(std::popcount(ms[i] & ms[j]));
    return l;
}

// All k-subsets of an arbitrary window, colex order, on the window's
// ground set. Empty family when k exceeds |window|.
inline UniformFamily k_subsets_of_window(const Subset& window, int k) {
    const int n = window.ground_n();
    if (k < 0) throw RangeError("k_subsets_of_window: negative k");
    const std::vector<int> elems = window.elements();
    const int w = static_cast<int>(elems.size());
    if (k > w) return UniformFamily(n, k);
    std::vector<std::uint64_t> out;
    out.reserve(binom(w, k));
    if (k == 0) {
        out.push_back(0);
    } else {
        // Gosper's hack over w index bits, each combination mapped through
        // the window's elements; the mapping preserves colex order. The
        // 128-bit counter keeps the w == 64 edge well-defined.
        const unsigned __int128 limit = static_cast<unsigned __int128>(1) << w;
        unsigned __int128 c = (static_cast<unsigned __int128>(1) << k) - 1;
        while (c < limit) {
            std::uint64_t m = 0;
            for (std::uint64_t b = static_cast<std::uint64_t>(c); b != 0; b &= b - 1)
                m |= std::uint64_t{1} << (elems[static_cast<std::size_t>(std::countr_zero(b))] - 1);
            out.push_back(m);
            unsigned __int128 lo = c & (~c + 1);
            unsigned __int128 ripple = c + lo;
            c = ripple | (((c ^ ripple) >> 2) / lo);
        }
    }
    return UniformFamily::from_canonical_masks(n, k, std::move(out));
}

inline UniformFamily all_k_subsets(int n, int k) {
    if (n < 1 || n > kMaxGround) throw RangeError("all_k_subsets: n outside [1, 64]");
    if (k < 0 || k > n) throw RangeError("all_k_subsets: k outside [0, n]");
    return k_subsets_of_window(Subset::full(n), k);
}

// ---- family text format ------------------------------------------------
//
// First line "n k"; one line per set, elements in increasing order
// separated by single spaces; lines in colex order; final newline
// required. Emitted files are bit-exact canonical.

inline std::string to_text(const UniformFamily& f) {
    std::string out = std::to_string(f.ground_n()) + " " + std::to_string(f.k()) + "\n";
    for (std::uint64_t m : f.masks()) {
        bool first = true;
        for (std::uint64_t b = m; b != 0; b &= b - 1) {
            if (!first) out += ' ';
            out += std::to_string(std::countr_zero(b) + 1);
            first = false;
        }
        out += '\n';
    }
    return out;
}

inline UniformFamily parse_family_text(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError("family file must end with a newline");
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header line");
    int n = 0, k = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> k) || (hs >> extra))
            throw ParseError("header line must be \"n k\"");
    }
    if (n < 1 || n > kMaxGround) throw RangeError("header: n outside [1, 64]");
    if (k < 0 || k > n) throw RangeError("header: k outside [0, n]");
    std::vector<std::vector<int>> raw;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> elems;
        int e = 0;
        while (ls >> e) elems.push_back(e);
        if (!ls.eof()) throw ParseError("malformed set line: \"" + line + "\"");
        raw.push_back(std::move(elems));
    }
    return make_family(n, k, raw);
}

inline UniformFamily read_family(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_family_text(text);
}

}  // namespace ekr
