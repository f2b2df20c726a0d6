#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dyck.hpp"
#include "kupisch.hpp"

namespace nakayama {

struct NotM1 : std::invalid_argument {
    NotM1() : std::invalid_argument("series must have exactly one entry equal to n") {}
};

struct NotSincereFinite : std::invalid_argument {
    NotSincereFinite()
        : std::invalid_argument("series must be sincere with a unique dimension-n projective") {}
};

struct RotationClass {
    KupischSeries representative; // lexicographically minimal rotation
    int shift;                    // representative[i] = entries[(i + shift) mod n]
};

inline std::vector<int> rotate_entries(const std::vector<int>& c, int shift) {
    std::size_t n = c.size();
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = c[(i + static_cast<std::size_t>(shift)) % n];
    return out;
}

/// Isomorphic cyclic algebras differ by a rotation of the Kupisch
/// series; the class representative is the lexicographically minimal
/// rotation (smallest shift on ties).
inline RotationClass canonical_rotation(const KupischSeries& a) {
    if (!a.is_cyclic()) throw std::invalid_argument("rotation classes are for cyclic series");
    const auto& c = a.entries();
    int n = a.size();
    int best = 0;
    for (int s = 1; s < n; ++s)
        if (rotate_entries(c, s) < rotate_entries(c, best)) best = s;
    return {KupischSeries::cyclic(rotate_entries(c, best)), best};
}

/// Connected linear series and area sequences are characterised by the
/// same inequalities; the bijection is the identity on entries.
inline DyckPath linear_to_dyck(const KupischSeries& a) {
    if (!a.is_connected_linear())
        throw std::invalid_argument("expected a connected linear series");
    return from_area(a.entries());
}

inline KupischSeries dyck_to_linear(const DyckPath& d) {
    return KupischSeries::linear(area_sequence(d));
}

namespace detail {

// Rotate a cyclic series so the unique entry equal to n comes first;
// identity for linear series (whose unique n entry is already c_0).
inline std::vector<int> rotate_unique_n_first(const KupischSeries& a) {
    const auto& c = a.entries();
    int n = a.size();
    if (std::count(c.begin(), c.end(), n) != 1) throw NotM1();
    auto it = std::find(c.begin(), c.end(), n);
    int pos = static_cast<int>(it - c.begin());
    if (!a.is_cyclic()) {
        if (pos != 0) throw NotM1(); // the only linear case is [n,n-1,...,1]
        return c;
    }
    return rotate_entries(c, pos);
}

} // namespace detail

/// M1 bijection: with c_0 = n and k the largest index with c_k <= n,
/// the area sequence is c'_i = n + 2 - c_{k-i} for i <= k and
/// c'_i = c_i - n + 1 for k < i < n, with c'_n = 1.
inline DyckPath m1_to_dyck(const KupischSeries& a) {
    std::vector<int> c = detail::rotate_unique_n_first(a);
    int n = static_cast<int>(c.size());
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (c[static_cast<std::size_t>(i)] <= n) k = i;
    std::vector<int> area(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= k; ++i)
        area[static_cast<std::size_t>(i)] = n + 2 - c[static_cast<std::size_t>(k - i)];
    for (int i = k + 1; i < n; ++i)
        area[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - n + 1;
    area[static_cast<std::size_t>(n)] = 1;
    return from_area(area);
}

/// Inverse of m1_to_dyck; k is the minimal index with c'_k = 2.  The
/// result is the linear series [n,...,2,1] when it contains a 1, cyclic
/// otherwise.
inline KupischSeries dyck_to_m1(const DyckPath& d) {
    std::vector<int> area = area_sequence(d);
    int n = d.semilength();
    if (n < 1) throw std::invalid_argument("m1 preimage needs semilength >= 1");
    int k = 0;
    while (area[static_cast<std::size_t>(k)] != 2) ++k;
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i <= k; ++i)
        c[static_cast<std::size_t>(i)] = n + 2 - area[static_cast<std::size_t>(k - i)];
    for (int i = k + 1; i < n; ++i)
        c[static_cast<std::size_t>(i)] = area[static_cast<std::size_t>(i)] + n - 1;
    bool linear = std::find(c.begin(), c.end(), 1) != c.end();
    return linear ? KupischSeries::linear(std::move(c)) : KupischSeries::cyclic(std::move(c));
}

namespace detail {

inline std::vector<int> sincere_normalized(const KupischSeries& a) {
    int n = a.size();
    if (!a.is_cyclic()) {
        // the one sincere linear algebra: a single simple projective
        if (a.entries() == std::vector<int>{1}) return a.entries();
        throw NotSincereFinite();
    }
    if (n < 2 || !is_sincere(a)) throw NotSincereFinite();
    const auto& c = a.entries();
    if (std::count(c.begin(), c.end(), n) != 1) throw NotSincereFinite();
    auto it = std::find(c.begin(), c.end(), n);
    return rotate_entries(c, static_cast<int>(it - c.begin()));
}

} // namespace detail

/// Sincere bijection: with c_0 = n, the area sequence is
/// [c_1 - n + 1, ..., c_{n-1} - n + 1, 1] of semilength n - 1.
inline DyckPath sincere_to_dyck(const KupischSeries& a) {
    std::vector<int> c = detail::sincere_normalized(a);
    int n = static_cast<int>(c.size());
    std::vector<int> area(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        area[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] - n + 1;
    area[static_cast<std::size_t>(n - 1)] = 1;
    return from_area(area);
}

/// Inverse: add n - 1 to each area entry and prepend c_0 = n.
inline KupischSeries dyck_to_sincere(const DyckPath& d) {
    int n = d.semilength() + 1;
    if (n == 1) return KupischSeries::linear({1});
    std::vector<int> area = area_sequence(d);
    std::vector<int> c(static_cast<std::size_t>(n));
    c[0] = n;
    for (int i = 1; i < n; ++i)
        c[static_cast<std::size_t>(i)] = area[static_cast<std::size_t>(i - 1)] + n - 1;
    return KupischSeries::cyclic(std::move(c));
}

/// gldim of a sincere finite-gldim algebra: twice the bounce count of
/// its Dyck path.
inline int sincere_gldim(const KupischSeries& a) {
    return 2 * bounce(sincere_to_dyck(a)).count;
}

} // namespace nakayama
