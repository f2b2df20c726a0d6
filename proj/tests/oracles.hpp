#pragma once

// Test-only oracles, kept independent of the library implementation
// paths they are used to check.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <nakayama/kupisch.hpp>

namespace oracles {

// Projective dimension by naive syzygy iteration with a hard step cap,
// bypassing the library's state-revisit detector.  Returns nullopt when
// the cap is hit (infinite pdim at desk scale).
inline std::optional<int> pdim_capped(const nakayama::KupischSeries& a, int i, int k) {
    int cap = a.size() * (*std::max_element(a.entries().begin(), a.entries().end())) + 1;
    int vertex = a.vertex(i), len = k;
    for (int steps = 0; steps <= cap; ++steps) {
        if (len == a.c(vertex)) return steps;
        int next_vertex = a.vertex(vertex + len);
        len = a.c(vertex) - len;
        vertex = next_vertex;
    }
    return std::nullopt;
}

// coKupisch by brute-force minimisation straight from the definition.
inline std::vector<int> cokupisch_brute(const nakayama::KupischSeries& a) {
    int n = a.size();
    std::vector<int> d;
    for (int i = 0; i < n; ++i) {
        for (int k = 1;; ++k) {
            int idx = i - k;
            int ck;
            if (a.is_cyclic()) ck = a.c(idx);
            else ck = idx < 0 ? 0 : a.c(idx);
            if (k >= ck) { d.push_back(k); break; }
        }
    }
    return d;
}

// Determinant by cofactor expansion, for cross-checking Bareiss.
inline long long det_cofactor(const std::vector<std::vector<int>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    long long det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        long long term = m[0][col] * det_cofactor(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

// Catalan numbers by the recurrence C_0 = 1, C_m = sum C_k C_{m-1-k}.
inline long long catalan_rec(int n) {
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            c[static_cast<std::size_t>(m)] +=
                c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    return c[static_cast<std::size_t>(n)];
}

// Count Dyck paths of semilength n by direct recursive walk.
inline long long count_paths_walk(int remaining_up, int height) {
    if (remaining_up == 0 && height == 0) return 1;
    long long total = 0;
    if (remaining_up > 0) total += count_paths_walk(remaining_up - 1, height + 1);
    if (height > 0) total += count_paths_walk(remaining_up, height - 1);
    return total;
}

} // namespace oracles
