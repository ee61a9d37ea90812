#pragma once

// Independent reference implementations used only by tests. None of these
// share code with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Hook lengths by scanning the Young diagram cell by cell.
inline std::vector<int> naive_hooks(const std::vector<int>& parts) {
    std::vector<int> out;
    const int rows = static_cast<int>(parts.size());
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
            int arm = parts[static_cast<std::size_t>(i)] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows && parts[static_cast<std::size_t>(k)] > j; ++k) {
                ++leg;
            }
            out.push_back(arm + leg + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Partitions of n with parts at most max_part, generated smallest-first-part
// recursion (an order unrelated to the library's).
inline void partitions_rec(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 1; part <= std::min(n, max_part); ++part) {
        prefix.push_back(part);
        partitions_rec(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

// p(n) by the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
inline long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
            p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
        }
    }
    return p[static_cast<std::size_t>(n)];
}

// Partitions of n into distinct parts, by dynamic programming.
inline long distinct_partition_count(int n) {
    std::vector<long> q(static_cast<std::size_t>(n) + 1, 0);
    q[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int m = n; m >= k; --m) {
            q[static_cast<std::size_t>(m)] += q[static_cast<std::size_t>(m - k)];
        }
    }
    return q[static_cast<std::size_t>(n)];
}

// Standard Young tableaux by removing the largest entry from each corner.
inline mpz_class syt_by_corners(std::vector<int> parts) {
    static std::map<std::vector<int>, mpz_class> memo;
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    if (parts.empty()) {
        return 1;
    }
    if (auto it = memo.find(parts); it != memo.end()) {
        return it->second;
    }
    mpz_class total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
        if (corner) {
            std::vector<int> smaller = parts;
            --smaller[i];
            total += syt_by_corners(smaller);
        }
    }
    memo[parts] = total;
    return total;
}

// Sign of the pentagonal coefficient [x^n] ∏(1 - x^k): (-1)^m at generalized
// pentagonal numbers m(3m±1)/2, zero elsewhere.
inline int pentagonal_sign(int n) {
    for (int m = 0; m * (3 * m - 1) / 2 <= n; ++m) {
        if (m * (3 * m + 1) / 2 == n || (m > 0 && m * (3 * m - 1) / 2 == n)) {
            return m % 2 == 0 ? 1 : -1;
        }
    }
    return 0;
}

// Lagrange interpolation through (x_i, y_i), returning the coefficient list
// (constant first) of the unique polynomial of degree < size.
inline std::vector<mpq_class> interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) {
            coeffs[k] += basis[k] * ys[i] / denom;
        }
    }
    for (auto& c : coeffs) {
        c.canonicalize();
    }
    return coeffs;
}

// Random partition of n built from random parts; fixed-seed generators only.
inline std::vector<int> random_partition(int n, std::mt19937& rng) {
    std::vector<int> parts;
    int remaining = n;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, remaining);
        const int part = pick(rng);
        parts.push_back(part);
        remaining -= part;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

}  // namespace oracle
