#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nakayama {

enum class SeriesKind { LinearProduct, Cyclic };

enum class SeriesClass { ConnectedLinear, LinearProduct, Cyclic, Invalid };

/// Classify an integer sequence as the Kupisch series of a connected
/// linear algebra, a product of linear algebras, a cyclic algebra, or
/// nothing.  Linear series contain a 1, cyclic series do not, so the
/// classes are mutually exclusive.
inline SeriesClass classify_series(const std::vector<int>& c) {
    const std::size_t n = c.size();
    if (n == 0) return SeriesClass::Invalid;
    for (int v : c)
        if (v < 1) return SeriesClass::Invalid;

    bool has_one = std::find(c.begin(), c.end(), 1) != c.end();
    if (!has_one) {
        // cyclic: c_{i+1} + 1 >= c_i >= 2 for every i, indices mod n
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] < 2) return SeriesClass::Invalid;
            if (c[(i + 1) % n] + 1 < c[i]) return SeriesClass::Invalid;
        }
        return SeriesClass::Cyclic;
    }

    // linear: concatenation of blocks, each block has interior entries >= 2,
    // satisfies c_{i+1} + 1 >= c_i inside the block, and ends with 1
    std::size_t blocks = 0;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end < n && c[end] != 1) ++end;
        if (end == n) return SeriesClass::Invalid; // block without terminating 1
        for (std::size_t i = start; i < end; ++i) {
            if (c[i] < 2) return SeriesClass::Invalid;
            if (c[i + 1] + 1 < c[i]) return SeriesClass::Invalid;
        }
        ++blocks;
        start = end + 1;
    }
    return blocks == 1 ? SeriesClass::ConnectedLinear : SeriesClass::LinearProduct;
}

/// A Nakayama algebra, represented by its Kupisch series.
/// Immutable after construction.
class KupischSeries {
public:
    KupischSeries(std::vector<int> entries, SeriesKind kind)
        : entries_(std::move(entries)), kind_(kind) {
        SeriesClass cls = classify_series(entries_);
        bool ok = (kind_ == SeriesKind::Cyclic)
                      ? cls == SeriesClass::Cyclic
                      : (cls == SeriesClass::ConnectedLinear || cls == SeriesClass::LinearProduct);
        if (!ok) throw std::invalid_argument("invalid Kupisch series for requested kind");
    }

    static KupischSeries linear(std::vector<int> entries) {
        return KupischSeries(std::move(entries), SeriesKind::LinearProduct);
    }
    static KupischSeries cyclic(std::vector<int> entries) {
        return KupischSeries(std::move(entries), SeriesKind::Cyclic);
    }

    const std::vector<int>& entries() const { return entries_; }
    SeriesKind kind() const { return kind_; }
    bool is_cyclic() const { return kind_ == SeriesKind::Cyclic; }
    int size() const { return static_cast<int>(entries_.size()); }

    /// c_i, with index arithmetic mod n for cyclic series.
    int c(int i) const {
        int n = size();
        if (is_cyclic()) return entries_[static_cast<std::size_t>(((i % n) + n) % n)];
        if (i < 0 || i >= n) throw std::out_of_range("vertex index out of range");
        return entries_[static_cast<std::size_t>(i)];
    }

    bool is_connected_linear() const {
        return !is_cyclic() && std::count(entries_.begin(), entries_.end(), 1) == 1;
    }

    int vertex(int i) const {
        int n = size();
        return is_cyclic() ? ((i % n) + n) % n : i;
    }

    bool operator==(const KupischSeries& o) const {
        return kind_ == o.kind_ && entries_ == o.entries_;
    }
    bool operator!=(const KupischSeries& o) const { return !(*this == o); }
    bool operator<(const KupischSeries& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        return entries_ < o.entries_;
    }

private:
    std::vector<int> entries_;
    SeriesKind kind_;
};

inline int loewy_length(const KupischSeries& a) {
    return *std::max_element(a.entries().begin(), a.entries().end());
}

/// The uniserial module b(i,k) = e_i A / e_i J^k, or the zero module.
class UniserialModule {
public:
    static UniserialModule zero() { return UniserialModule(); }

    UniserialModule(const KupischSeries& algebra, int i, int k)
        : i_(algebra.vertex(i)), k_(k) {
        if (k < 1 || k > algebra.c(i_))
            throw std::invalid_argument("module length out of range [1, c_i]");
    }

    bool is_zero() const { return k_ == 0; }
    int vertex() const { require_nonzero(); return i_; }
    int length() const { require_nonzero(); return k_; }

    bool is_projective(const KupischSeries& a) const {
        require_nonzero();
        return k_ == a.c(i_);
    }

    bool operator==(const UniserialModule& o) const { return i_ == o.i_ && k_ == o.k_; }
    bool operator!=(const UniserialModule& o) const { return !(*this == o); }
    bool operator<(const UniserialModule& o) const {
        return i_ != o.i_ ? i_ < o.i_ : k_ < o.k_;
    }

private:
    UniserialModule() : i_(0), k_(0) {}
    void require_nonzero() const {
        if (k_ == 0) throw std::domain_error("zero module has no vertex/length");
    }

    int i_;
    int k_;
};

inline UniserialModule simple_module(const KupischSeries& a, int i) {
    return UniserialModule(a, i, 1);
}

inline UniserialModule projective_module(const KupischSeries& a, int i) {
    return UniserialModule(a, a.vertex(i), a.c(i));
}

/// A projective or global dimension: a non-negative integer or infinity.
class HomDimension {
public:
    static HomDimension infinite() { return HomDimension(-1); }
    HomDimension(int v) : value_(v) {}

    bool is_infinite() const { return value_ < 0; }
    int value() const {
        if (is_infinite()) throw std::domain_error("dimension is infinite");
        return value_;
    }

    bool operator==(const HomDimension& o) const { return value_ == o.value_; }
    bool operator!=(const HomDimension& o) const { return !(*this == o); }

private:
    int value_;
};

/// Omega: b(i,k) -> b(i+k, c_i - k), zero if b(i,k) is projective.
inline UniserialModule syzygy(const KupischSeries& a, const UniserialModule& m) {
    if (m.is_zero()) throw std::domain_error("syzygy of the zero module");
    int i = m.vertex(), k = m.length();
    if (k == a.c(i)) return UniserialModule::zero();
    return UniserialModule(a, a.vertex(i + k), a.c(i) - k);
}

inline HomDimension projective_dimension(const KupischSeries& a, UniserialModule m) {
    if (m.is_zero()) throw std::domain_error("pdim of the zero module");
    // The syzygy orbit lives in a finite state space; a revisited state
    // means the orbit cycles and the dimension is infinite.
    std::set<std::pair<int, int>> seen;
    int steps = 0;
    while (!m.is_projective(a)) {
        if (!seen.insert({m.vertex(), m.length()}).second)
            return HomDimension::infinite();
        m = syzygy(a, m);
        ++steps;
    }
    return HomDimension(steps);
}

inline HomDimension global_dimension(const KupischSeries& a) {
    int best = 0;
    for (int i = 0; i < a.size(); ++i) {
        HomDimension d = projective_dimension(a, simple_module(a, i));
        if (d.is_infinite()) return HomDimension::infinite();
        best = std::max(best, d.value());
    }
    return HomDimension(best);
}

/// coKupisch series d_i = min { k >= 1 | k >= c_{i-k} }.  For linear
/// series, out-of-range indices i-k < 0 contribute nothing (read as 0),
/// so d_i <= i+1 always terminates in range.
inline std::vector<int> cokupisch(const KupischSeries& a) {
    int n = a.size();
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int k = 1;; ++k) {
            int idx = i - k;
            int ck = (!a.is_cyclic() && idx < 0) ? 0 : a.c(idx);
            if (k >= ck) { d[static_cast<std::size_t>(i)] = k; break; }
        }
    }
    return d;
}

/// D(Ae_i) = e_{i+1-d_i} A / e_{i+1-d_i} J^{d_i}.
inline UniserialModule indecomposable_injective(const KupischSeries& a, int i) {
    if (i < 0 || i >= a.size()) throw std::out_of_range("vertex index out of range");
    int di = cokupisch(a)[static_cast<std::size_t>(i)];
    return UniserialModule(a, a.vertex(i + 1 - di), di);
}

/// dim Ext^k(S_i, S_j): 1 if the k-th term of the minimal projective
/// resolution of S_i is e_j A, else 0.  Terms of resolutions of
/// uniserial modules are zero or indecomposable.
inline int ext_dimension(const KupischSeries& a, int i, int j, int k) {
    UniserialModule m = simple_module(a, i);
    for (int step = 0; step < k; ++step) {
        if (m.is_projective(a)) return 0; // resolution already ended
        m = syzygy(a, m);
    }
    return m.vertex() == a.vertex(j) ? 1 : 0;
}

/// Composition factors of b(i,k): the window {i, i+1, ..., i+k-1},
/// reduced mod n for cyclic series.
inline std::vector<int> composition_factors(const KupischSeries& a, const UniserialModule& m) {
    if (m.is_zero()) throw std::domain_error("factors of the zero module");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m.length()));
    for (int t = 0; t < m.length(); ++t)
        out.push_back(a.vertex(m.vertex() + t));
    return out;
}

/// Every projective is sincere iff every window of length c_i covers all
/// n vertices, i.e. c_i >= n for all i.
inline bool is_sincere(const KupischSeries& a) {
    int n = a.size();
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [n](int ci) { return ci >= n; });
}

} // namespace nakayama
