#include "tptri/tp_cert.hpp"

#include "tptri/detail/minor_enum.hpp"
#include "tptri/determinant.hpp"
#include "tptri/errors.hpp"
#include "tptri/triangle.hpp"

#include <algorithm>
#include <utility>

namespace tptri {

Rational minor(const Matrix<Rational>& m, std::span<const long> rows,
               std::span<const long> cols) {
    if (rows.size() != cols.size())
        throw IndexOutOfRangeError("minor needs equally many rows and columns");
    return determinant(m.submatrix(rows, cols));
}

namespace {

TPReport run_scan(const Matrix<Rational>& m, long r) {
    const long dims = std::min(m.rows(), m.cols());
    const long cap = std::min(r, dims);

    detail::MinorScan<Rational> scan =
        detail::scan_minors(m, cap, [](const Rational& v) { return v < 0; });

    TPReport report;
    report.minors_evaluated = scan.evaluated;
    if (cap < dims) report.order_checked = cap;
    if (scan.rejected) {
        report.verified = false;
        report.witness = Witness{std::move(scan.rows), std::move(scan.cols),
                                 std::move(scan.value)};
    }
    return report;
}

}  // namespace

TPReport is_tp_r(const Matrix<Rational>& m, long r) {
    if (r < 1) throw Error("minor order bound must be at least 1");
    return run_scan(m, r);
}

TPReport is_tp(const Matrix<Rational>& m) {
    return run_scan(m, std::min(m.rows(), m.cols()));
}

Rational tridiag_det(const TriMatrix& m) {
    Rational prev2 = 1;          // D_{-1}
    Rational prev = m.diag(0);   // D_0
    for (long i = 1; i <= m.order(); ++i) {
        Rational cur = m.diag(i) * prev - m.super(i) * m.sub(i) * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

TPReport tridiag_is_tp(const TriMatrix& m) {
    for (long i = 0; i <= m.order(); ++i) {
        if (m.diag(i) < 0)
            throw NotNonnegativeError("diagonal entry y_" + std::to_string(i) + " = " +
                                      to_string(m.diag(i)) + " is negative");
    }
    for (long k = 1; k <= m.order(); ++k) {
        if (m.super(k) < 0)
            throw NotNonnegativeError("superdiagonal entry x_" + std::to_string(k) + " = " +
                                      to_string(m.super(k)) + " is negative");
        if (m.sub(k) < 0)
            throw NotNonnegativeError("subdiagonal entry z_" + std::to_string(k) + " = " +
                                      to_string(m.sub(k)) + " is negative");
    }

    // det of the block on lo..hi extends the block on lo..hi-1, so scanning
    // block sizes in ascending order finds every determinant already
    // memoized one and two sizes down.
    const long dim = m.dim();
    std::vector<std::vector<Rational>> det(static_cast<std::size_t>(dim),
                                           std::vector<Rational>(static_cast<std::size_t>(dim)));
    TPReport report;
    for (long size = 1; size <= dim; ++size) {
        for (long lo = 0; lo + size <= dim; ++lo) {
            const long hi = lo + size - 1;
            Rational value;
            if (size == 1) {
                value = m.diag(hi);
            } else {
                Rational below = (size == 2)
                                     ? Rational(1)
                                     : det[static_cast<std::size_t>(lo)]
                                          [static_cast<std::size_t>(hi - 2)];
                value = m.diag(hi) * det[static_cast<std::size_t>(lo)]
                                        [static_cast<std::size_t>(hi - 1)] -
                        m.super(hi) * m.sub(hi) * below;
            }
            det[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = value;
            ++report.minors_evaluated;
            if (value < 0) {
                report.verified = false;
                Witness w;
                for (long i = lo; i <= hi; ++i) w.rows.push_back(i);
                w.cols = w.rows;
                w.value = std::move(value);
                report.witness = std::move(w);
                return report;
            }
        }
    }
    return report;
}

const Criterion kAllCriteria[7] = {
    Criterion::cor_2_4,       Criterion::cor_2_5,   Criterion::lemma_2_7_row,
    Criterion::lemma_2_7_col, Criterion::thm_2_8_i, Criterion::thm_2_8_ii,
    Criterion::thm_2_9,
};

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::cor_2_4: return "cor-2.4";
        case Criterion::cor_2_5: return "cor-2.5";
        case Criterion::lemma_2_7_row: return "lemma-2.7-row";
        case Criterion::lemma_2_7_col: return "lemma-2.7-col";
        case Criterion::thm_2_8_i: return "thm-2.8-i";
        case Criterion::thm_2_8_ii: return "thm-2.8-ii";
        case Criterion::thm_2_9: return "thm-2.9";
    }
    throw Error("corrupt criterion tag");
}

Criterion parse_criterion(std::string_view name) {
    for (Criterion c : kAllCriteria) {
        if (name == criterion_name(c)) return c;
    }
    throw UnknownCriterionError(std::string(name));
}

namespace {

std::string sub_idx(const char* letter, long k) {
    return std::string(letter) + "_" + std::to_string(k);
}

// "s_0*s_1 >= r_1*t_1 violated: 1 < 4"
std::string violated(const std::string& lhs_sym, const std::string& rhs_sym,
                     const Rational& lhs, const Rational& rhs) {
    return lhs_sym + " >= " + rhs_sym + " violated: " + to_string(lhs) + " < " +
           to_string(rhs);
}

CriterionResult scan_indices(Criterion which, const CoefficientSpec& spec, long N) {
    CriterionResult result;
    result.criterion = criterion_name(which);

    auto fail = [&result](long index, std::string text) {
        result.holds = false;
        result.first_failure = CriterionFailure{index, std::move(text)};
    };

    switch (which) {
        case Criterion::cor_2_4:
            for (long k = 1; k <= N; ++k) {
                Rational lhs = spec.s(k - 1) * spec.s(k);
                Rational rhs = spec.r(k) * spec.t(k);
                if (lhs < rhs) {
                    fail(k, violated(sub_idx("s", k - 1) + "*" + sub_idx("s", k),
                                     sub_idx("r", k) + "*" + sub_idx("t", k), lhs, rhs));
                    return result;
                }
            }
            return result;

        case Criterion::cor_2_5:
            for (long k = 1; k <= N; ++k) {
                Rational tk = spec.t(k);
                if (tk != 0) {
                    fail(k, sub_idx("t", k) + " == 0 violated: " + sub_idx("t", k) +
                                " = " + to_string(tk));
                    return result;
                }
            }
            return result;

        case Criterion::thm_2_8_i: {
            Rational s0 = spec.s(0), r1 = spec.r(1);
            if (s0 < r1) {
                fail(0, violated("s_0", "r_1", s0, r1));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                Rational lhs = spec.s(k);
                Rational rhs = spec.r(k + 1) + spec.t(k);
                if (lhs < rhs) {
                    fail(k, violated(sub_idx("s", k),
                                     sub_idx("r", k + 1) + " + " + sub_idx("t", k), lhs, rhs));
                    return result;
                }
            }
            return result;
        }

        case Criterion::thm_2_8_ii: {
            Rational s0 = spec.s(0), t1 = spec.t(1);
            if (s0 < t1) {
                fail(0, violated("s_0", "t_1", s0, t1));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                Rational lhs = spec.s(k);
                Rational rhs = spec.r(k) + spec.t(k + 1);
                if (lhs < rhs) {
                    fail(k, violated(sub_idx("s", k),
                                     sub_idx("r", k) + " + " + sub_idx("t", k + 1), lhs, rhs));
                    return result;
                }
            }
            return result;
        }

        case Criterion::thm_2_9: {
            Rational s0 = spec.s(0);
            if (s0 < 1) {
                fail(0, violated("s_0", "1", s0, Rational(1)));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                Rational lhs = spec.s(k);
                Rational rhs = spec.r(k) * spec.t(k) + 1;
                if (lhs < rhs) {
                    fail(k, violated(sub_idx("s", k),
                                     sub_idx("r", k) + "*" + sub_idx("t", k) + " + 1",
                                     lhs, rhs));
                    return result;
                }
            }
            return result;
        }

        case Criterion::lemma_2_7_row:
        case Criterion::lemma_2_7_col:
            break;  // handled by the caller via the coefficient matrix
    }
    throw Error("corrupt criterion tag");
}

}  // namespace

CriterionResult check_criterion(const CoefficientSpec& spec, Criterion which, long N) {
    if (N < 0) throw Error("coefficient index bound must be nonnegative");
    if (which == Criterion::lemma_2_7_row)
        return check_diagonal_dominance(coefficient_matrix(spec, N), Dominance::row);
    if (which == Criterion::lemma_2_7_col)
        return check_diagonal_dominance(coefficient_matrix(spec, N), Dominance::column);
    return scan_indices(which, spec, N);
}

CriterionResult check_criterion(const CoefficientSpec& spec, std::string_view which, long N) {
    return check_criterion(spec, parse_criterion(which), N);
}

CriterionResult check_diagonal_dominance(const TriMatrix& m, Dominance side) {
    if (!m.bands_nonnegative())
        throw NotNonnegativeError("diagonal dominance check expects nonnegative bands");

    CriterionResult result;
    result.criterion =
        (side == Dominance::row) ? "lemma-2.7-row" : "lemma-2.7-col";

    const long n = m.order();
    for (long i = 0; i <= n; ++i) {
        // Row i sums z_i and x_{i+1}; column i sums x_i and z_{i+1}.
        Rational off = 0;
        std::string sym;
        if (i >= 1) {
            const Rational& inner = (side == Dominance::row) ? m.sub(i) : m.super(i);
            off += inner;
            sym = sub_idx((side == Dominance::row) ? "z" : "x", i);
        }
        if (i + 1 <= n) {
            const Rational& outer = (side == Dominance::row) ? m.super(i + 1) : m.sub(i + 1);
            off += outer;
            if (!sym.empty()) sym += " + ";
            sym += sub_idx((side == Dominance::row) ? "x" : "z", i + 1);
        }
        if (sym.empty()) sym = "0";
        if (m.diag(i) < off) {
            result.holds = false;
            result.first_failure =
                CriterionFailure{i, violated(sub_idx("y", i), sym, m.diag(i), off)};
            return result;
        }
    }
    return result;
}

Matrix<Rational> toeplitz(const std::vector<Rational>& a, long N) {
    if (N < 0) throw Error("order must be nonnegative");
    Matrix<Rational> m(N + 1, N + 1);
    const long len = static_cast<long>(a.size());
    for (long i = 0; i <= N; ++i) {
        for (long j = 0; j <= N; ++j) {
            long idx = i - j;
            if (idx >= 0 && idx < len) m(i, j) = a[static_cast<std::size_t>(idx)];
        }
    }
    return m;
}

Matrix<Rational> hankel(const std::vector<Rational>& a, long N) {
    if (N < 0) throw Error("order must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(2 * N + 1);
    if (a.size() < need) throw InsufficientLengthError(a.size(), need);
    Matrix<Rational> m(N + 1, N + 1);
    for (long i = 0; i <= N; ++i) {
        for (long j = 0; j <= N; ++j) {
            m(i, j) = a[static_cast<std::size_t>(i + j)];
        }
    }
    return m;
}

namespace {

void require_nonnegative(const std::vector<Rational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) throw NegativeTermError(static_cast<long>(i), to_string(a[i]));
    }
}

bool all_positive(const std::vector<Rational>& a) {
    for (const Rational& v : a) {
        if (v == 0) return false;
    }
    return true;
}

}  // namespace

bool is_log_convex(const std::vector<Rational>& a) {
    require_nonnegative(a);
    const long len = static_cast<long>(a.size());
    if (len < 3) return true;
    if (all_positive(a)) {
        for (long i = 0; i + 2 < len; ++i) {
            std::size_t u = static_cast<std::size_t>(i);
            if (a[u] * a[u + 2] < a[u + 1] * a[u + 1]) return false;
        }
        return true;
    }
    // With zero terms the adjacent-ratio shortcut is unsound, so test the
    // defining condition on every index pair: a_i a_{j+1} >= a_{i+1} a_j.
    for (long i = 0; i + 1 < len; ++i) {
        for (long j = i + 1; j + 1 < len; ++j) {
            std::size_t ui = static_cast<std::size_t>(i);
            std::size_t uj = static_cast<std::size_t>(j);
            if (a[ui] * a[uj + 1] < a[ui + 1] * a[uj]) return false;
        }
    }
    return true;
}

bool is_log_concave(const std::vector<Rational>& a) {
    require_nonnegative(a);
    const long len = static_cast<long>(a.size());
    if (len < 3) return true;
    if (all_positive(a)) {
        for (long i = 0; i + 2 < len; ++i) {
            std::size_t u = static_cast<std::size_t>(i);
            if (a[u + 1] * a[u + 1] < a[u] * a[u + 2]) return false;
        }
        return true;
    }
    // Zeros again break the adjacent shortcut; log-concavity of a
    // nonnegative sequence is second-order Polya frequency, so certify that.
    return is_tp_r(toeplitz(a, len - 1), 2).verified;
}

TPReport is_pf_r(const std::vector<Rational>& a, long r, long N) {
    require_nonnegative(a);
    return is_tp_r(toeplitz(a, N), r);
}

}  // namespace tptri
