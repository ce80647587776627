#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace resint {

/// C(n, k); zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // exact at every step: r * (n-k+i) is divisible by i
        r = r * (n - k + i) / i;
    }
    return r;
}

using Subset = std::vector<int>;  // strictly increasing, 0-based

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Subset> subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

/// Sign of the shuffle permutation that lists `first` then the complement of
/// `first` in {0..n-1}.
inline int shuffle_sign(const Subset& first) {
    std::int64_t inversions = 0;
    for (std::size_t pos = 0; pos < first.size(); ++pos) inversions += first[pos] - static_cast<int>(pos);
    return inversions % 2 == 0 ? 1 : -1;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace resint
