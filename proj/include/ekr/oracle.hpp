#pragma once

#include <chrono>
#include <cstdint>
#include <random>

#include "ekr/family.hpp"

namespace ekr {

struct OracleOptions {
    // Refuse instances with C(n, k) above this; exhaustive search only.
    std::uint64_t max_binom = 40;
    // Enumerate all maximum families only when C(n, k) is at most this.
    std::uint64_t count_limit = 25;
};

struct OracleResult {
    int n = 0;
    int k = 0;
    int t = 0;
    std::uint64_t max_size = 0;
    std::optional<std::uint64_t> num_maximum_families;
    std::optional<bool> all_maximum_are_stars;
    std::chrono::duration<double> elapsed{0};
};

namespace detail {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    int lowest() const {
        for (std::size_t b = 0; b < w_.size(); ++b)
            if (w_[b]) return static_cast<int>(b * 64 + std::countr_zero(w_[b]));
        return -1;
    }
    Bits& and_with(const Bits& o) {
        for (std::size_t b = 0; b < w_.size(); ++b) w_[b] &= o.w_[b];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t b = 0; b < w_.size(); ++b) w_[b] &= ~o.w_[b];
        return *this;
    }
    template <typename F>
    void for_each(F f) const {
        for (std::size_t b = 0; b < w_.size(); ++b)
            for (std::uint64_t w = w_[b]; w != 0; w &= w - 1)
                f(static_cast<int>(b * 64 + std::countr_zero(w)));
    }

private:
    std::vector<std::uint64_t> w_;
};

// Branch-and-bound maximum-clique search on the graph whose vertices are
// the k-subsets and whose edges join t-intersecting pairs, with greedy
// coloring bounds and a deterministic branch order.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<std::uint64_t>& masks, int t)
        : masks_(masks), t_(t), m_(masks.size()), adj_(masks.size(), Bits(masks.size())) {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i + 1; j < m_; ++j)
                if (std::popcount(masks_[i] & masks_[j]) >= t) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
    }

    // Exact maximum clique size; `incumbent` must be achievable.
    std::uint64_t max_clique(std::uint64_t incumbent) {
        best_ = incumbent;
        Bits p(m_);
        for (std::size_t i = 0; i < m_; ++i) p.set(i);
        expand(p, 0);
        return best_;
    }

    struct Census {
        std::uint64_t count = 0;
        bool all_stars = true;
    };

    // Enumerates every clique of size exactly `target` once.
    Census count_maximum(std::uint64_t target) {
        census_ = Census{};
        target_ = target;
        Bits p(m_);
        for (std::size_t i = 0; i < m_; ++i) p.set(i);
        count_expand(p, 0, ~std::uint64_t{0});
        return census_;
    }

private:
    void expand(Bits p, std::uint64_t rsize) {
        // Greedy coloring of the candidate set; color is an upper bound on
        // the clique extension inside it.
        std::vector<std::pair<int, int>> order;  // (vertex, color), colors ascending
        Bits rem = p;
        int color = 0;
        while (rem.any()) {
            ++color;
            Bits avail = rem;
            while (avail.any()) {
                const int v = avail.lowest();
                avail.reset(v);
                rem.reset(v);
                avail.and_not(adj_[v]);
                order.emplace_back(v, color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            const auto [v, c] = order[i];
            if (rsize + static_cast<std::uint64_t>(c) <= best_) return;
            Bits p2 = p;
            p2.and_with(adj_[v]);
            if (p2.any()) {
                expand(std::move(p2), rsize + 1);
            } else if (rsize + 1 > best_) {
                best_ = rsize + 1;
            }
            p.reset(v);
        }
    }

    void count_expand(Bits p, std::uint64_t rsize, std::uint64_t common) {
        if (rsize == target_) {
            ++census_.count;
            if (std::popcount(common) < t_) census_.all_stars = false;
            return;
        }
        if (rsize + static_cast<std::uint64_t>(p.count()) < target_) return;
        std::vector<int> vs;
        p.for_each([&](int v) { vs.push_back(v); });
        for (int v : vs) {
            p.reset(v);
            Bits p2 = p;
            p2.and_with(adj_[v]);
            if (rsize + 1 + static_cast<std::uint64_t>(p2.count()) >= target_)
                count_expand(std::move(p2), rsize + 1, common & masks_[static_cast<std::size_t>(v)]);
        }
    }

    std::vector<std::uint64_t> masks_;
    int t_;
    std::size_t m_;
    std::vector<Bits> adj_;
    std::uint64_t best_ = 0;
    std::uint64_t target_ = 0;
    Census census_;
};

// Portable uniform integer in [0, bound): rejection sampling on top of the
// standard-specified mt19937_64 stream, so identical seeds reproduce
// identical values on every platform.
inline std::uint64_t bounded_u64(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = gen();
        if (x >= threshold) return x % bound;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic per-instance seed derivation for parameter sweeps.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
    std::uint64_t h = detail::splitmix64(base);
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ b);
    h = detail::splitmix64(h ^ c);
    return h;
}

inline OracleResult max_t_intersecting_bruteforce(int n, int k, int t,
                                                  const OracleOptions& opts = {}) {
    if (n < 1 || n > kMaxGround) throw RangeError("oracle: n outside [1, 64]");
    if (k < 1 || k > n) throw RangeError("oracle: k outside [1, n]");
    if (t < 1 || t > k) throw RangeError("oracle: t outside [1, k]");
    const std::uint64_t m = binom(n, k);
    if (m > opts.max_binom)
        throw ScaleError("oracle: C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                         std::to_string(m) + " exceeds the scale guard " +
                         std::to_string(opts.max_binom));
    const auto start = std::chrono::steady_clock::now();
    OracleResult r;
    r.n = n;
    r.k = k;
    r.t = t;
    detail::CliqueSearch search(all_k_subsets(n, k).masks(), t);
    // The generalized star (all k-sets containing a fixed t-set) is a valid
    // incumbent, which collapses the search at desk scale.
    r.max_size = search.max_clique(binom(n - t, k - t));
    if (m <= opts.count_limit) {
        const auto census = search.count_maximum(r.max_size);
        r.num_maximum_families = census.count;
        r.all_maximum_are_stars = census.all_stars;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

inline OracleResult max_intersecting_bruteforce(int n, int k, const OracleOptions& opts = {}) {
    return max_t_intersecting_bruteforce(n, k, 1, opts);
}

// Visits every subfamily of ([n] choose a) exactly once, in subset-mask
// numeric order over the colex-ranked members.
template <typename Callback>
void enumerate_subfamilies(int n, int a, Callback&& cb) {
    const std::uint64_t m = binom(n, a);
    if (n < 1 || n > kMaxGround || a < 0 || a > n)
        throw RangeError("enumerate_subfamilies: invalid (n, a)");
    if (m > 20)
        throw ScaleError("enumerate_subfamilies: C(n, a) = " + std::to_string(m) +
                         " exceeds 20");
    const std::vector<std::uint64_t> members = all_k_subsets(n, a).masks();
    std::vector<std::uint64_t> buf;
    buf.reserve(members.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        buf.clear();
        for (std::uint64_t b = pick; b != 0; b &= b - 1)
            buf.push_back(members[static_cast<std::size_t>(std::countr_zero(b))]);
        cb(UniformFamily::from_canonical_masks(n, a, buf));
    }
}

// Seeded greedy construction of a maximal intersecting family: shuffle all
// colex ranks with mt19937_64 (Fisher-Yates over the portable bounded
// sampler above), then add each candidate that meets every member so far.
inline UniformFamily random_maximal_intersecting(int n, int k, std::uint64_t seed) {
    if (k < 1 || 2 * k > n) throw RangeError("random_maximal_intersecting: requires n >= 2k >= 2");
    std::vector<std::uint64_t> candidates = all_k_subsets(n, k).masks();
    std::mt19937_64 gen(seed);
    for (std::size_t i = candidates.size(); i-- > 1;)
        std::swap(candidates[i], candidates[detail::bounded_u64(gen, i + 1)]);
    std::vector<std::uint64_t> fam;
    for (std::uint64_t c : candidates) {
        bool ok = true;
        for (std::uint64_t m : fam)
            if ((m & c) == 0) {
                ok = false;
                break;
            }
        if (ok) fam.push_back(c);
    }
    std::sort(fam.begin(), fam.end());
    return UniformFamily::from_canonical_masks(n, k, std::move(fam));
}

}  // namespace ekr
