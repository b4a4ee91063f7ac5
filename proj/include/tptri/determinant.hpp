#pragma once

#include "tptri/matrix.hpp"
#include "tptri/qpoly.hpp"
#include "tptri/rational.hpp"

#include <optional>
#include <utility>

namespace tptri {

namespace detail {

inline bool det_is_zero(const Rational& v) { return v == 0; }
inline bool det_is_zero(const QPoly& v) { return v.is_zero(); }

// Exact quotient for the Bareiss update.  Over the rationals this is plain
// division; over the polynomial ring it can in principle fail, in which case
// the caller falls back to cofactor expansion.
inline std::optional<Rational> det_divide(const Rational& a, const Rational& b) {
    return Rational(a / b);
}
inline std::optional<QPoly> det_divide(const QPoly& a, const QPoly& b) {
    return divide_exact(a, b);
}

}  // namespace detail

// Laplace expansion along the first row.  Exponential; used for small orders
// and as the fallback when fraction-free elimination cannot divide exactly.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
    const long n = m.rows();
    if (n != m.cols()) throw Error("determinant of a nonsquare matrix");
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    T acc = T();
    std::vector<long> rows(static_cast<std::size_t>(n) - 1);
    for (long i = 1; i < n; ++i) rows[static_cast<std::size_t>(i) - 1] = i;
    std::vector<long> cols(static_cast<std::size_t>(n) - 1);
    for (long j = 0; j < n; ++j) {
        if (detail::det_is_zero(m(0, j))) continue;
        long w = 0;
        for (long c = 0; c < n; ++c) {
            if (c != j) cols[static_cast<std::size_t>(w++)] = c;
        }
        T term = m(0, j) * det_cofactor(m.submatrix(rows, cols));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Bareiss fraction-free elimination.  All intermediate quotients are exact
// (they are themselves minors), so integer input stays integer throughout.
// Returns nullopt only if T's exact division fails, which a field never does.
template <typename T>
std::optional<T> det_bareiss(Matrix<T> m) {
    const long n = m.rows();
    if (n != m.cols()) throw Error("determinant of a nonsquare matrix");
    if (n == 0) return T(1);

    T prev = T(1);
    bool negate = false;
    for (long k = 0; k + 1 < n; ++k) {
        if (detail::det_is_zero(m(k, k))) {
            long pivot = -1;
            for (long i = k + 1; i < n; ++i) {
                if (!detail::det_is_zero(m(i, k))) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return T();  // zero column below the diagonal
            for (long j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                T numer = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                std::optional<T> q = detail::det_divide(numer, prev);
                if (!q) return std::nullopt;
                m(i, j) = std::move(*q);
            }
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    T result = m(n - 1, n - 1);
    if (negate) return T() - result;
    return result;
}

// Exact determinant: cofactor expansion below order 4, Bareiss from there up.
template <typename T>
T determinant(const Matrix<T>& m) {
    if (m.rows() < 4) return det_cofactor(m);
    if (std::optional<T> d = det_bareiss(m)) return std::move(*d);
    return det_cofactor(m);
}

}  // namespace tptri
