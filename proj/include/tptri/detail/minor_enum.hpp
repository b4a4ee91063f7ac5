#pragma once

#include "tptri/determinant.hpp"
#include "tptri/matrix.hpp"

#include <utility>
#include <vector>

namespace tptri::detail {

inline std::vector<long> first_combination(long d) {
    std::vector<long> ids(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) ids[static_cast<std::size_t>(i)] = i;
    return ids;
}

// Advance a strictly increasing d-subset of {0..limit-1} to its
// lexicographic successor; false once the last subset has been seen.
inline bool next_combination(std::vector<long>& ids, long limit) {
    const long d = static_cast<long>(ids.size());
    for (long i = d - 1; i >= 0; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (ids[ui] < limit - (d - i)) {
            ++ids[ui];
            for (long j = i + 1; j < d; ++j)
                ids[static_cast<std::size_t>(j)] = ids[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

template <typename T>
struct MinorScan {
    bool rejected = false;
    std::vector<long> rows, cols;
    T value{};
    unsigned long long evaluated = 0;
};

// Evaluate every minor of order 1..max_order — orders ascending, row sets
// then column sets lexicographic — stopping at the first value `reject`
// flags.  The stopping point is therefore canonical for a given matrix.
template <typename T, typename Reject>
MinorScan<T> scan_minors(const Matrix<T>& m, long max_order, Reject reject) {
    MinorScan<T> out;
    for (long d = 1; d <= max_order; ++d) {
        std::vector<long> rs = first_combination(d);
        do {
            std::vector<long> cs = first_combination(d);
            do {
                T value = determinant(m.submatrix(rs, cs));
                ++out.evaluated;
                if (reject(value)) {
                    out.rejected = true;
                    out.rows = rs;
                    out.cols = cs;
                    out.value = std::move(value);
                    return out;
                }
            } while (next_combination(cs, m.cols()));
        } while (next_combination(rs, m.rows()));
    }
    return out;
}

}  // namespace tptri::detail
