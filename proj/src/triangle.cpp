#include "tptri/triangle.hpp"

#include "tptri/errors.hpp"

#include <utility>

namespace tptri {

namespace {
const Rational kZero = 0;
}

LowerTriangle::LowerTriangle(long index_origin, std::vector<std::vector<Rational>> rows)
    : origin_(index_origin), rows_(std::move(rows)) {
    if (origin_ != 0 && origin_ != 1) throw Error("index origin must be 0 or 1");
    if (rows_.empty()) throw Error("triangle needs at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1)
            throw Error("row " + std::to_string(origin_ + static_cast<long>(i)) +
                        " has " + std::to_string(rows_[i].size()) + " entries, expected " +
                        std::to_string(i + 1));
    }
}

const std::vector<Rational>& LowerTriangle::row(long n) const {
    if (n < origin_ || n > max_label())
        throw IndexOutOfRangeError("row label " + std::to_string(n));
    return rows_[static_cast<std::size_t>(n - origin_)];
}

const Rational& LowerTriangle::at(long n, long k) const {
    if (n < origin_ || n > max_label() || k < origin_ || k > max_label())
        throw IndexOutOfRangeError("entry (" + std::to_string(n) + ", " +
                                   std::to_string(k) + ")");
    if (k > n) return kZero;
    return rows_[static_cast<std::size_t>(n - origin_)][static_cast<std::size_t>(k - origin_)];
}

Matrix<Rational> LowerTriangle::to_matrix() const {
    Matrix<Rational> m(dim(), dim());
    for (long i = 0; i < dim(); ++i) {
        for (long j = 0; j <= i; ++j) {
            m(i, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

LowerTriangle build_recursive(const CoefficientSpec& spec, long order) {
    if (order < 0) throw Error("order must be nonnegative");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(order) + 1);
    rows.push_back({Rational(1)});

    for (long n = 0; n < order; ++n) {
        const std::vector<Rational>& cur = rows.back();
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2);

        next[0] = spec.s(0) * cur[0];
        if (n >= 1) next[0] += spec.t(1) * cur[1];
        for (long k = 1; k <= n; ++k) {
            Rational acc = spec.r(k) * cur[static_cast<std::size_t>(k) - 1];
            acc += spec.s(k) * cur[static_cast<std::size_t>(k)];
            if (k + 1 <= n) acc += spec.t(k + 1) * cur[static_cast<std::size_t>(k) + 1];
            next[static_cast<std::size_t>(k)] = acc;
        }
        next[static_cast<std::size_t>(n) + 1] = spec.r(n + 1) * cur[static_cast<std::size_t>(n)];

        rows.push_back(std::move(next));
    }
    return LowerTriangle(0, std::move(rows));
}

LowerTriangle build_general(const GeneralSpec& spec, long order) {
    const long origin = spec.index_origin;
    if (origin != 0 && origin != 1) throw Error("index origin must be 0 or 1");
    if (order < origin) throw Error("order must be at least the index origin");

    // Recurrence step: entry (m, k) from row m-1, fetching only the band
    // functions whose source entry lies inside the triangle.
    auto recur = [&spec, origin](const std::vector<Rational>& prev, long m, long k) {
        Rational acc = 0;
        long prev_row = m - 1;
        if (spec.u && k - 1 >= origin && k - 1 <= prev_row)
            acc += spec.u(prev_row, k) * prev[static_cast<std::size_t>(k - 1 - origin)];
        if (spec.v && k <= prev_row)
            acc += spec.v(prev_row, k) * prev[static_cast<std::size_t>(k - origin)];
        if (spec.w && k + 1 <= prev_row)
            acc += spec.w(prev_row, k) * prev[static_cast<std::size_t>(k + 1 - origin)];
        return acc;
    };

    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(order - origin) + 1);

    if (spec.closed_form_primary) {
        if (!spec.closed_form) throw Error("closed form marked primary but not provided");
        for (long m = origin; m <= order; ++m) {
            std::vector<Rational> row;
            row.reserve(static_cast<std::size_t>(m - origin) + 1);
            for (long k = origin; k <= m; ++k) row.push_back(spec.closed_form(m, k));
            rows.push_back(std::move(row));
        }
        if (rows[0][0] != spec.base)
            throw ClosedFormMismatchError(origin, origin, to_string(rows[0][0]),
                                          to_string(spec.base));
        for (long m = origin + 1; m <= order; ++m) {
            for (long k = origin; k <= m; ++k) {
                if (spec.cross_check_at && !spec.cross_check_at(m, k)) continue;
                Rational expect = recur(rows[static_cast<std::size_t>(m - 1 - origin)], m, k);
                const Rational& have = rows[static_cast<std::size_t>(m - origin)]
                                           [static_cast<std::size_t>(k - origin)];
                if (have != expect)
                    throw ClosedFormMismatchError(m, k, to_string(have), to_string(expect));
            }
        }
    } else {
        rows.push_back({spec.base});
        for (long m = origin + 1; m <= order; ++m) {
            std::vector<Rational> row;
            row.reserve(static_cast<std::size_t>(m - origin) + 1);
            for (long k = origin; k <= m; ++k) row.push_back(recur(rows.back(), m, k));
            rows.push_back(std::move(row));
        }
        if (spec.closed_form) {
            for (long m = origin; m <= order; ++m) {
                for (long k = origin; k <= m; ++k) {
                    if (spec.cross_check_at && !spec.cross_check_at(m, k)) continue;
                    Rational expect = spec.closed_form(m, k);
                    const Rational& have = rows[static_cast<std::size_t>(m - origin)]
                                               [static_cast<std::size_t>(k - origin)];
                    if (have != expect)
                        throw ClosedFormMismatchError(m, k, to_string(expect), to_string(have));
                }
            }
        }
    }
    return LowerTriangle(origin, std::move(rows));
}

TriMatrix coefficient_matrix(const CoefficientSpec& spec, long n) {
    if (n < 0) throw Error("order must be nonnegative");
    std::vector<Rational> diag, super, sub;
    for (long i = 0; i <= n; ++i) diag.push_back(spec.s(i));
    for (long k = 1; k <= n; ++k) {
        super.push_back(spec.r(k));
        sub.push_back(spec.t(k));
    }
    return TriMatrix(std::move(diag), std::move(super), std::move(sub));
}

std::vector<Rational> catalan_like(const CoefficientSpec& spec, long order) {
    LowerTriangle tri = build_recursive(spec, order);
    std::vector<Rational> column;
    column.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) column.push_back(tri.at(n, 0));
    return column;
}

bool verify_factorization(const CoefficientSpec& spec, long N) {
    if (N < 1) throw Error("factorization check needs N >= 1");
    LowerTriangle tri = build_recursive(spec, N);
    Matrix<Rational> full = tri.to_matrix();  // (N+1) x (N+1)

    Matrix<Rational> shifted(N, N);  // rows 1..N, columns 0..N-1
    Matrix<Rational> lead(N, N);     // rows 0..N-1, columns 0..N-1
    for (long i = 0; i < N; ++i) {
        for (long j = 0; j < N; ++j) {
            shifted(i, j) = full(i + 1, j);
            lead(i, j) = full(i, j);
        }
    }
    Matrix<Rational> j = coefficient_matrix(spec, N - 1).to_matrix();
    return shifted == lead * j;
}

}  // namespace tptri
