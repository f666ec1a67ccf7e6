#pragma once

// Independent test oracles. Everything here is computed by brute force or by
// a classical recurrence, never through the library code paths under test.

#include <set>
#include <vector>

#include "mullreg/partition.hpp"

namespace oracles {

/// p(0..n_max) by the pentagonal-number recurrence.
inline std::vector<long long> partition_counts(int n_max) {
    std::vector<long long> p(n_max + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long long sum = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n)
                break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n)
                sum += sign * p[n - g1];
            if (g2 <= n)
                sum += sign * p[n - g2];
        }
        p[n] = sum;
    }
    return p;
}

/// Transpose by counting boxes column by column.
inline mullreg::Partition transpose_by_counting(const mullreg::Partition& p) {
    std::vector<int> cols;
    for (int j = 1;; ++j) {
        int count = 0;
        for (int i = 1; i <= p.length(); ++i)
            if (p.part(i) >= j)
                ++count;
        if (count == 0)
            break;
        cols.push_back(count);
    }
    return mullreg::Partition(cols);
}

/// Arm and leg by direct box enumeration.
inline int arm_by_counting(const mullreg::Partition& p, mullreg::Box box) {
    int count = 0;
    for (int j = box.col + 1; j <= p.part(box.row); ++j)
        ++count;
    return count;
}

inline int leg_by_counting(const mullreg::Partition& p, mullreg::Box box) {
    int count = 0;
    for (int i = box.row + 1; i <= p.length(); ++i)
        if (p.part(i) >= box.col)
            ++count;
    return count;
}

/// Number of boxes whose hook length is divisible by b.
inline int divisible_hooks(const mullreg::Partition& p, int b) {
    int count = 0;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if ((arm_by_counting(p, {i, j}) + leg_by_counting(p, {i, j}) + 1) % b == 0)
                ++count;
    return count;
}

/// Rim by the definitional filter, as an unordered set.
inline std::set<std::pair<int, int>> rim_by_filter(const mullreg::Partition& p) {
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (!p.contains(mullreg::Box{i + 1, j + 1}))
                out.insert({i, j});
    return out;
}

/// Number of b-tuples of partitions of total size w.
inline long long tuple_count(int b, int w) {
    std::vector<long long> p = partition_counts(w);
    std::vector<long long> acc(w + 1, 0);
    acc[0] = 1;
    for (int component = 0; component < b; ++component) {
        std::vector<long long> next(w + 1, 0);
        for (int s = 0; s <= w; ++s)
            for (int t = 0; s + t <= w; ++t)
                next[s + t] += acc[s] * p[t];
        acc = std::move(next);
    }
    return acc[w];
}

} // namespace oracles
