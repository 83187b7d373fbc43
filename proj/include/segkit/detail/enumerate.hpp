#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace segkit::detail {

// Hard cap on exhaustive enumeration, shared by the brute-force solvers.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

// Number of boundary chains 0 = b_0 <= b_1 <= ... <= b_k = prefix, which is
// C(prefix + k - 1, k - 1).  Saturates at kEnumerationBudget + 1 instead of
// overflowing.
inline std::uint64_t segmentation_count(std::size_t prefix, std::size_t k) {
    if (k == 0) return prefix == 0 ? 1 : 0;
    const std::uint64_t cap = kEnumerationBudget + 1;
    const std::uint64_t r = k - 1;
    std::uint64_t result = 1;  // C(i + r, r) for i = 0
    for (std::uint64_t i = 1; i <= prefix; ++i) {
        if (result > cap) return cap;
        // result * (i + r) must not overflow; result <= cap + 1 keeps it safe.
        result = result * (i + r) / i;
    }
    return result > cap ? cap : result;
}

// Calls fn(boundaries) for every chain b_0 = 0 <= ... <= b_k = prefix.
// The vector passed to fn is reused between calls; copy it to keep it.
template <typename Fn>
void for_each_segmentation(std::size_t prefix, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> b(k + 1, 0);
    b[k] = prefix;
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(b));
        if (k <= 1) return;
        // Advance the rightmost interior boundary that can still grow, then
        // reset everything to its right down to that value.
        std::size_t j = k - 1;
        while (j >= 1 && b[j] == prefix) --j;
        if (j == 0) return;
        ++b[j];
        for (std::size_t t = j + 1; t < k; ++t) b[t] = b[j];
    }
}

}  // namespace segkit::detail
