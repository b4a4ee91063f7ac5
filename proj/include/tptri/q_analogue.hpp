#pragma once

#include "tptri/coefficient_spec.hpp"
#include "tptri/matrix.hpp"
#include "tptri/qpoly.hpp"
#include "tptri/seq_expr.hpp"
#include "tptri/tp_cert.hpp"
#include "tptri/triangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tptri {

// Coefficient sequences whose terms are polynomials in q with nonnegative
// coefficients.  As with the numeric variant, validation is lazy: a term
// with a negative coefficient throws NegativePolyCoefficientError when
// first fetched.
class QCoefficientSpec {
public:
    QCoefficientSpec(SeqGen r, SeqGen s, SeqGen t, std::string name = "");

    QPoly r(long k) const;  // k >= 1
    QPoly s(long k) const;  // k >= 0
    QPoly t(long k) const;  // k >= 1

    const SeqGen& r_gen() const { return r_; }
    const SeqGen& s_gen() const { return s_; }
    const SeqGen& t_gen() const { return t_; }
    const std::string& name() const { return name_; }

private:
    SeqGen r_, s_, t_;
    std::string name_;
};

// Triangle of q-polynomials, rows 0..max_label.
class QLowerTriangle {
public:
    explicit QLowerTriangle(std::vector<std::vector<QPoly>> rows);

    long dim() const { return static_cast<long>(rows_.size()); }
    long max_label() const { return dim() - 1; }

    const std::vector<QPoly>& row(long n) const;
    const QPoly& at(long n, long k) const;

    Matrix<QPoly> to_matrix() const;

    friend bool operator==(const QLowerTriangle& a, const QLowerTriangle& b) {
        return a.rows_ == b.rows_;
    }

private:
    std::vector<std::vector<QPoly>> rows_;
};

// Rows 0..order of the q-triangle the spec generates (same recurrence as the
// numeric case, computed in the polynomial ring).
QLowerTriangle build_q_recursive(const QCoefficientSpec& spec, long order);

// A refuted q-minor: its value has a negative coefficient at the recorded
// power of q.
struct QWitness {
    std::vector<long> rows, cols;
    QPoly value;
    long first_negative_power = 0;

    friend bool operator==(const QWitness& a, const QWitness& b) {
        return a.rows == b.rows && a.cols == b.cols && a.value == b.value &&
               a.first_negative_power == b.first_negative_power;
    }
};

struct QTPReport {
    bool verified = true;
    std::optional<long> order_checked;
    std::optional<QWitness> witness;
    unsigned long long minors_evaluated = 0;

    friend bool operator==(const QTPReport& a, const QTPReport& b) {
        return a.verified == b.verified && a.order_checked == b.order_checked &&
               a.witness == b.witness && a.minors_evaluated == b.minors_evaluated;
    }
};

// q-total positivity: every minor of order <= r is a polynomial with
// nonnegative coefficients.  Same canonical scan order as is_tp_r.
QTPReport is_q_tp_r(const Matrix<QPoly>& m, long r);
QTPReport is_q_tp(const Matrix<QPoly>& m);

// Coefficientwise sufficient conditions, one per numeric counterpart:
//   i    s_0 >=_q r_1          and  s_k >=_q r_{k+1} + t_k
//   ii   s_0 >=_q t_1          and  s_k >=_q r_k + t_{k+1}
//   iii  s_0 >=_q 1            and  s_k >=_q r_k t_k + 1
enum class QCriterion { i, ii, iii };

extern const QCriterion kAllQCriteria[3];

const char* q_criterion_name(QCriterion c);
QCriterion parse_q_criterion(std::string_view name);  // throws UnknownCriterionError

CriterionResult check_q_criterion(const QCoefficientSpec& spec, QCriterion which, long N);
CriterionResult check_q_criterion(const QCoefficientSpec& spec, std::string_view which,
                                  long N);

// A numeric spec is a q-spec whose polynomials are constant.
QCoefficientSpec embed_numeric(const CoefficientSpec& spec);

// Substitute q := q0 throughout, giving a numeric spec (q0 >= 0 keeps the
// nonnegativity contract meaningful).
CoefficientSpec specialize(const QCoefficientSpec& spec, const Rational& q0);

// Pointwise evaluation at q = q0.
Matrix<Rational> eval_at(const Matrix<QPoly>& m, const Rational& q0);
LowerTriangle eval_at(const QLowerTriangle& tri, const Rational& q0);

}  // namespace tptri
