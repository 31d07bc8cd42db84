#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace mchyper {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

// Visits all k-subsets of {0..n-1} as sorted vectors, in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F f) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        f(std::span<const int>(c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

// Rank of a sorted k-subset in colexicographic order: sum C(s[i], i+1).
// Bijection onto [0, C(n,k)); used to index degree counters.
inline std::int64_t colex_rank(std::span<const int> sorted) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        r += binomial(sorted[i], static_cast<int>(i) + 1);
    return r;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

} // namespace mchyper
