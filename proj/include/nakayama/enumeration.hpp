#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "dyck.hpp"
#include "kupisch.hpp"
#include "resolution_quiver.hpp"

namespace nakayama {

/// All connected linear Kupisch series with n entries, lexicographic.
/// At position i the entry ranges over [max(2, c_{i-1} - 1), n - i];
/// the upper bound keeps the forced descent to the final 1 feasible.
template <typename Fn>
void for_each_connected_linear(int n, Fn&& fn) {
    std::vector<int> c(static_cast<std::size_t>(n));
    c[static_cast<std::size_t>(n - 1)] = 1;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            if (n == 1 || c[static_cast<std::size_t>(n - 2)] <= 2)
                fn(std::as_const(c));
            return;
        }
        int lo = (i == 0) ? 2 : std::max(2, c[static_cast<std::size_t>(i - 1)] - 1);
        for (int v = lo; v <= n - i; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    if (n == 1) fn(std::as_const(c));
    else rec(rec, 0);
}

inline std::vector<KupischSeries> enumerate_connected_linear(int n) {
    std::vector<KupischSeries> out;
    for_each_connected_linear(n, [&](const std::vector<int>& c) {
        out.push_back(KupischSeries::linear(c));
    });
    return out;
}

/// All ordered products of connected linear series totalling n entries.
template <typename Fn>
void for_each_linear_product(int n, Fn&& fn) {
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            fn(std::as_const(acc));
            return;
        }
        for (int block = 1; block <= remaining; ++block) {
            for_each_connected_linear(block, [&](const std::vector<int>& c) {
                std::size_t mark = acc.size();
                acc.insert(acc.end(), c.begin(), c.end());
                self(self, remaining - block);
                acc.resize(mark);
            });
        }
    };
    rec(rec, n);
}

inline std::vector<KupischSeries> enumerate_linear_products(int n) {
    std::vector<KupischSeries> out;
    for_each_linear_product(n, [&](const std::vector<int>& c) {
        out.push_back(KupischSeries::linear(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Cyclic series up to rotation: lexicographically minimal
/// representatives with 2 <= c_i <= max_entry and c_{i+1} + 1 >= c_i.
template <typename Fn>
void for_each_cyclic(int n, int max_entry, Fn&& fn) {
    std::vector<int> c(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (c[0] + 1 < c[static_cast<std::size_t>(n - 1)]) return; // wrap constraint
            KupischSeries a = KupischSeries::cyclic(c);
            if (canonical_rotation(a).shift == 0 && a.entries() == c) fn(a);
            return;
        }
        int lo = (i == 0) ? 2 : std::max(2, c[static_cast<std::size_t>(i - 1)] - 1);
        if (i > 0) lo = std::max(lo, c[0]); // representative starts at the minimum entry
        for (int v = lo; v <= max_entry; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<KupischSeries> enumerate_cyclic(int n, int max_entry) {
    std::vector<KupischSeries> out;
    for_each_cyclic(n, max_entry, [&](const KupischSeries& a) { out.push_back(a); });
    return out;
}

inline std::vector<KupischSeries> enumerate_cyclic_finite_gldim(int n) {
    std::vector<KupischSeries> out;
    for_each_cyclic(n, 2 * n - 1, [&](const KupischSeries& a) {
        if (finite_gldim_via_quiver(a)) out.push_back(a);
    });
    return out;
}

/// All Dyck paths of semilength n, lexicographic in the area sequence.
template <typename Fn>
void for_each_dyck_path(int n, Fn&& fn) {
    for_each_connected_linear(n + 1, [&](const std::vector<int>& area) {
        fn(from_area(area));
    });
}

inline std::vector<DyckPath> enumerate_dyck_paths(int n) {
    std::vector<DyckPath> out;
    for_each_dyck_path(n, [&](const DyckPath& d) { out.push_back(d); });
    return out;
}

struct Distribution {
    std::string statistic;
    std::map<int, std::int64_t> counts;
    std::int64_t total = 0;

    void add(int value) {
        ++counts[value];
        ++total;
    }
};

/// Distribution of gldim over connected linear algebras with n simples.
inline Distribution gldim_distribution(int n) {
    Distribution dist{"gldim", {}, 0};
    for_each_connected_linear(n, [&](const std::vector<int>& c) {
        dist.add(global_dimension(KupischSeries::linear(c)).value());
    });
    return dist;
}

/// Distribution of height over Dyck paths of semilength n-1.
inline Distribution height_distribution(int n) {
    Distribution dist{"height", {}, 0};
    for_each_dyck_path(n - 1, [&](const DyckPath& d) { dist.add(height(d)); });
    return dist;
}

struct EquidistributionReport {
    bool equal = false;
    Distribution gldim;
    Distribution height;
};

inline EquidistributionReport verify_equidistribution(int n) {
    EquidistributionReport r;
    r.gldim = gldim_distribution(n);
    r.height = height_distribution(n);
    r.equal = r.gldim.counts == r.height.counts;
    return r;
}

inline std::int64_t catalan(int n) {
    // independent of the enumerators: the standard recurrence
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            c[static_cast<std::size_t>(m)] +=
                c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    return c[static_cast<std::size_t>(n)];
}

} // namespace nakayama
