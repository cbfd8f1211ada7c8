#pragma once

#include <array>
#include <cstdint>

namespace ekr {

// Ground sets are capped at one machine word.
inline constexpr int kMaxGround = 64;

namespace detail {

consteval auto make_binom_table() {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> t{};
    for (int n = 0; n <= kMaxGround; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}

inline constexpr auto kBinomTable = make_binom_table();

}  // namespace detail

// C(n, k); zero outside 0 <= k <= n <= 64. Every value up to C(64, 32)
// fits in a uint64_t, so the table is exact.
constexpr std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kMaxGround) return 0;
    return detail::kBinomTable[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace ekr
