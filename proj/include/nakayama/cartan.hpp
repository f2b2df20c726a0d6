#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kupisch.hpp"
#include "rational.hpp"

namespace nakayama {

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("Cartan matrix is singular") {}
};

struct InfiniteGlobalDimension : std::domain_error {
    InfiniteGlobalDimension() : std::domain_error("global dimension is infinite") {}
};

/// Cartan matrix c_{ij} = dim e_i A e_j: entry (i,j) counts j in the
/// path window {i, i+1, ..., i+c_i-1}, mod n for cyclic series.
class CartanMatrix {
public:
    explicit CartanMatrix(const KupischSeries& a) : n_(a.size()) {
        entries_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int t = 0; t < a.c(i); ++t)
                ++at(i, a.vertex(i + t));
    }

    int size() const { return n_; }
    int operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
        return out;
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    std::int64_t determinant() const {
        std::vector<std::vector<std::int64_t>> m(
            static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(n_)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);

        std::int64_t sign = 1;
        std::int64_t prev = 1;
        for (int k = 0; k < n_ - 1; ++k) {
            if (m[k][k] == 0) {
                int pivot = -1;
                for (int r = k + 1; r < n_; ++r)
                    if (m[r][k] != 0) { pivot = r; break; }
                if (pivot < 0) return 0;
                std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i)
                for (int j = k + 1; j < n_; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign * m[static_cast<std::size_t>(n_ - 1)][static_cast<std::size_t>(n_ - 1)];
    }

    /// Exact inverse by Gauss-Jordan elimination over the rationals.
    std::vector<std::vector<Rational>> inverse() const {
        std::size_t n = static_cast<std::size_t>(n_);
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = Rational((*this)(static_cast<int>(i), static_cast<int>(j)));
            m[i][n + i] = Rational(1);
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
            if (pivot == n) throw SingularMatrix();
            std::swap(m[col], m[pivot]);
            Rational p = m[col][col];
            for (auto& v : m[col]) v /= p;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || m[r][col] == Rational(0)) continue;
                Rational f = m[r][col];
                for (std::size_t j = 0; j < 2 * n; ++j)
                    m[r][j] -= f * m[col][j];
            }
        }
        std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                inv[i][j] = m[i][n + j];
        return inv;
    }

private:
    int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_;
    std::vector<int> entries_;
};

inline CartanMatrix cartan_matrix(const KupischSeries& a) { return CartanMatrix(a); }

inline std::int64_t cartan_determinant(const KupischSeries& a) {
    return CartanMatrix(a).determinant();
}

/// Magnitude: sum of all entries of the inverse Cartan matrix.  Defined
/// whenever the Cartan matrix is invertible, even for infinite gldim.
inline Rational magnitude(const KupischSeries& a) {
    Rational sum(0);
    for (const auto& row : CartanMatrix(a).inverse())
        for (const auto& v : row)
            sum += v;
    return sum;
}

/// Magnitude via the alternating Ext sum
/// sum_{k=0}^{g} (-1)^k sum_{i,j} dim Ext^k(S_i, S_j).
inline std::int64_t magnitude_via_ext(const KupischSeries& a) {
    HomDimension g = global_dimension(a);
    if (g.is_infinite()) throw InfiniteGlobalDimension();
    int n = a.size();
    std::int64_t sum = 0;
    for (int k = 0; k <= g.value(); ++k) {
        std::int64_t term = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                term += ext_dimension(a, i, j, k);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

inline int even_pdim_simple_count(const KupischSeries& a) {
    int count = 0;
    for (int i = 0; i < a.size(); ++i) {
        HomDimension d = projective_dimension(a, simple_module(a, i));
        if (d.is_infinite()) throw InfiniteGlobalDimension();
        if (d.value() % 2 == 0) ++count;
    }
    return count;
}

} // namespace nakayama
