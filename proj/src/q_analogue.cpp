#include "tptri/q_analogue.hpp"

#include "tptri/detail/minor_enum.hpp"
#include "tptri/errors.hpp"

#include <algorithm>
#include <utility>

namespace tptri {

namespace {

QPoly checked(char sequence, long index, QPoly value) {
    if (!poly_is_nonneg(value))
        throw NegativePolyCoefficientError(sequence, index, to_string(value));
    return value;
}

}  // namespace

QCoefficientSpec::QCoefficientSpec(SeqGen r, SeqGen s, SeqGen t, std::string name)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)), name_(std::move(name)) {}

QPoly QCoefficientSpec::r(long k) const {
    if (k < 1) throw IndexOutOfRangeError("r is defined for k >= 1, got " + std::to_string(k));
    return checked('r', k, r_.at_poly(k));
}

QPoly QCoefficientSpec::s(long k) const {
    if (k < 0) throw IndexOutOfRangeError("s is defined for k >= 0, got " + std::to_string(k));
    return checked('s', k, s_.at_poly(k));
}

QPoly QCoefficientSpec::t(long k) const {
    if (k < 1) throw IndexOutOfRangeError("t is defined for k >= 1, got " + std::to_string(k));
    return checked('t', k, t_.at_poly(k));
}

QLowerTriangle::QLowerTriangle(std::vector<std::vector<QPoly>> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error("triangle needs at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1)
            throw Error("row " + std::to_string(i) + " has " +
                        std::to_string(rows_[i].size()) + " entries, expected " +
                        std::to_string(i + 1));
    }
}

const std::vector<QPoly>& QLowerTriangle::row(long n) const {
    if (n < 0 || n > max_label())
        throw IndexOutOfRangeError("row label " + std::to_string(n));
    return rows_[static_cast<std::size_t>(n)];
}

const QPoly& QLowerTriangle::at(long n, long k) const {
    static const QPoly kZero;
    if (n < 0 || n > max_label() || k < 0 || k > max_label())
        throw IndexOutOfRangeError("entry (" + std::to_string(n) + ", " +
                                   std::to_string(k) + ")");
    if (k > n) return kZero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Matrix<QPoly> QLowerTriangle::to_matrix() const {
    Matrix<QPoly> m(dim(), dim());
    for (long i = 0; i < dim(); ++i) {
        for (long j = 0; j <= i; ++j) {
            m(i, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

QLowerTriangle build_q_recursive(const QCoefficientSpec& spec, long order) {
    if (order < 0) throw Error("order must be nonnegative");
    std::vector<std::vector<QPoly>> rows;
    rows.reserve(static_cast<std::size_t>(order) + 1);
    rows.push_back({QPoly(1)});

    for (long n = 0; n < order; ++n) {
        const std::vector<QPoly>& cur = rows.back();
        std::vector<QPoly> next(static_cast<std::size_t>(n) + 2);

        next[0] = spec.s(0) * cur[0];
        if (n >= 1) next[0] += spec.t(1) * cur[1];
        for (long k = 1; k <= n; ++k) {
            QPoly acc = spec.r(k) * cur[static_cast<std::size_t>(k) - 1];
            acc += spec.s(k) * cur[static_cast<std::size_t>(k)];
            if (k + 1 <= n) acc += spec.t(k + 1) * cur[static_cast<std::size_t>(k) + 1];
            next[static_cast<std::size_t>(k)] = std::move(acc);
        }
        next[static_cast<std::size_t>(n) + 1] =
            spec.r(n + 1) * cur[static_cast<std::size_t>(n)];

        rows.push_back(std::move(next));
    }
    return QLowerTriangle(std::move(rows));
}

namespace {

QTPReport run_q_scan(const Matrix<QPoly>& m, long r) {
    const long dims = std::min(m.rows(), m.cols());
    const long cap = std::min(r, dims);

    detail::MinorScan<QPoly> scan =
        detail::scan_minors(m, cap, [](const QPoly& v) { return !poly_is_nonneg(v); });

    QTPReport report;
    report.minors_evaluated = scan.evaluated;
    if (cap < dims) report.order_checked = cap;
    if (scan.rejected) {
        report.verified = false;
        QWitness w;
        w.rows = std::move(scan.rows);
        w.cols = std::move(scan.cols);
        w.first_negative_power = *first_negative_power(scan.value);
        w.value = std::move(scan.value);
        report.witness = std::move(w);
    }
    return report;
}

}  // namespace

QTPReport is_q_tp_r(const Matrix<QPoly>& m, long r) {
    if (r < 1) throw Error("minor order bound must be at least 1");
    return run_q_scan(m, r);
}

QTPReport is_q_tp(const Matrix<QPoly>& m) {
    return run_q_scan(m, std::min(m.rows(), m.cols()));
}

const QCriterion kAllQCriteria[3] = {QCriterion::i, QCriterion::ii, QCriterion::iii};

const char* q_criterion_name(QCriterion c) {
    switch (c) {
        case QCriterion::i: return "thm-3.1-i";
        case QCriterion::ii: return "thm-3.1-ii";
        case QCriterion::iii: return "thm-3.1-iii";
    }
    throw Error("corrupt criterion tag");
}

QCriterion parse_q_criterion(std::string_view name) {
    for (QCriterion c : kAllQCriteria) {
        if (name == q_criterion_name(c)) return c;
    }
    // Accept the bare roman numeral as shorthand.
    if (name == "i") return QCriterion::i;
    if (name == "ii") return QCriterion::ii;
    if (name == "iii") return QCriterion::iii;
    throw UnknownCriterionError(std::string(name));
}

namespace {

std::string sub_idx(const char* letter, long k) {
    return std::string(letter) + "_" + std::to_string(k);
}

// "s_1 >=_q r_2 + t_1 violated: difference -1 + q is negative at q^0"
std::string q_violated(const std::string& lhs_sym, const std::string& rhs_sym,
                       const QPoly& lhs, const QPoly& rhs) {
    QPoly diff = lhs - rhs;
    long power = first_negative_power(diff).value();
    return lhs_sym + " >=_q " + rhs_sym + " violated: difference " + to_string(diff) +
           " is negative at q^" + std::to_string(power);
}

}  // namespace

CriterionResult check_q_criterion(const QCoefficientSpec& spec, QCriterion which, long N) {
    if (N < 0) throw Error("coefficient index bound must be nonnegative");

    CriterionResult result;
    result.criterion = q_criterion_name(which);

    auto fail = [&result](long index, std::string text) {
        result.holds = false;
        result.first_failure = CriterionFailure{index, std::move(text)};
    };

    QPoly s0 = spec.s(0);
    switch (which) {
        case QCriterion::i: {
            QPoly r1 = spec.r(1);
            if (!poly_geq_q(s0, r1)) {
                fail(0, q_violated("s_0", "r_1", s0, r1));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                QPoly rhs = spec.r(k + 1) + spec.t(k);
                if (!poly_geq_q(spec.s(k), rhs)) {
                    fail(k, q_violated(sub_idx("s", k),
                                       sub_idx("r", k + 1) + " + " + sub_idx("t", k),
                                       spec.s(k), rhs));
                    return result;
                }
            }
            return result;
        }
        case QCriterion::ii: {
            QPoly t1 = spec.t(1);
            if (!poly_geq_q(s0, t1)) {
                fail(0, q_violated("s_0", "t_1", s0, t1));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                QPoly rhs = spec.r(k) + spec.t(k + 1);
                if (!poly_geq_q(spec.s(k), rhs)) {
                    fail(k, q_violated(sub_idx("s", k),
                                       sub_idx("r", k) + " + " + sub_idx("t", k + 1),
                                       spec.s(k), rhs));
                    return result;
                }
            }
            return result;
        }
        case QCriterion::iii: {
            if (!poly_geq_q(s0, QPoly(1))) {
                fail(0, q_violated("s_0", "1", s0, QPoly(1)));
                return result;
            }
            for (long k = 1; k <= N; ++k) {
                QPoly rhs = spec.r(k) * spec.t(k) + QPoly(1);
                if (!poly_geq_q(spec.s(k), rhs)) {
                    fail(k, q_violated(sub_idx("s", k),
                                       sub_idx("r", k) + "*" + sub_idx("t", k) + " + 1",
                                       spec.s(k), rhs));
                    return result;
                }
            }
            return result;
        }
    }
    throw Error("corrupt criterion tag");
}

CriterionResult check_q_criterion(const QCoefficientSpec& spec, std::string_view which,
                                  long N) {
    return check_q_criterion(spec, parse_q_criterion(which), N);
}

QCoefficientSpec embed_numeric(const CoefficientSpec& spec) {
    return QCoefficientSpec(spec.r_gen(), spec.s_gen(), spec.t_gen(), spec.name());
}

CoefficientSpec specialize(const QCoefficientSpec& spec, const Rational& q0) {
    return CoefficientSpec(spec.r_gen().specialized(q0), spec.s_gen().specialized(q0),
                           spec.t_gen().specialized(q0), spec.name());
}

Matrix<Rational> eval_at(const Matrix<QPoly>& m, const Rational& q0) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j).eval(q0);
        }
    }
    return out;
}

LowerTriangle eval_at(const QLowerTriangle& tri, const Rational& q0) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(tri.dim()));
    for (long n = 0; n <= tri.max_label(); ++n) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (const QPoly& p : tri.row(n)) row.push_back(p.eval(q0));
        rows.push_back(std::move(row));
    }
    return LowerTriangle(0, std::move(rows));
}

}  // namespace tptri
