#pragma once

#include "tptri/coefficient_spec.hpp"
#include "tptri/matrix.hpp"
#include "tptri/rational.hpp"
#include "tptri/trimatrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tptri {

// A concrete refutation: the minor on these (strictly increasing, 0-based)
// row and column selections is negative.
struct Witness {
    std::vector<long> rows, cols;
    Rational value;

    friend bool operator==(const Witness& a, const Witness& b) {
        return a.rows == b.rows && a.cols == b.cols && a.value == b.value;
    }
};

// Outcome of a minor-enumeration certificate.  order_checked is the order
// the scan was capped at; nullopt means every order up to the truncation
// size was covered.  minors_evaluated counts determinants actually computed
// (the scan stops at the first negative minor, which becomes the witness —
// orders ascending, then row sets, then column sets, lexicographically).
struct TPReport {
    bool verified = true;
    std::optional<long> order_checked;
    std::optional<Witness> witness;
    unsigned long long minors_evaluated = 0;

    friend bool operator==(const TPReport& a, const TPReport& b) {
        return a.verified == b.verified && a.order_checked == b.order_checked &&
               a.witness == b.witness && a.minors_evaluated == b.minors_evaluated;
    }
};

// Determinant of the submatrix on the given selections (equal sizes,
// strictly increasing, in range — otherwise IndexOutOfRangeError).
Rational minor(const Matrix<Rational>& m, std::span<const long> rows,
               std::span<const long> cols);

// Certify that every minor of order <= r is nonnegative.  r >= 1.
TPReport is_tp_r(const Matrix<Rational>& m, long r);

// Certify total positivity of the truncation: every minor of every order.
TPReport is_tp(const Matrix<Rational>& m);

// Determinant of a tridiagonal matrix via the three-term recurrence
// D_i = y_i D_{i-1} - x_i z_i D_{i-2} with D_{-1} = 1, D_0 = y_0.
Rational tridiag_det(const TriMatrix& m);

// TP certificate for a nonnegative tridiagonal matrix: it suffices to check
// that every contiguous principal block has nonnegative determinant.
// Throws NotNonnegativeError if a band entry is negative.
TPReport tridiag_is_tp(const TriMatrix& m);

// Sufficient conditions on the coefficient sequences (and, for the
// dominance pair, on the coefficient matrix they define).
enum class Criterion {
    cor_2_4,        // s_{k-1} s_k >= r_k t_k
    cor_2_5,        // t identically zero (bidiagonal case)
    lemma_2_7_row,  // row diagonal dominance of the coefficient matrix
    lemma_2_7_col,  // column diagonal dominance
    thm_2_8_i,      // s_0 >= r_1,  s_k >= r_{k+1} + t_k
    thm_2_8_ii,     // s_0 >= t_1,  s_k >= r_k + t_{k+1}
    thm_2_9,        // s_0 >= 1,    s_k >= r_k t_k + 1
};

extern const Criterion kAllCriteria[7];

const char* criterion_name(Criterion c);
Criterion parse_criterion(std::string_view name);  // throws UnknownCriterionError

struct CriterionFailure {
    long index = 0;
    std::string inequality;

    friend bool operator==(const CriterionFailure& a, const CriterionFailure& b) {
        return a.index == b.index && a.inequality == b.inequality;
    }
};

struct CriterionResult {
    std::string criterion;
    bool holds = true;
    std::optional<CriterionFailure> first_failure;

    friend bool operator==(const CriterionResult& a, const CriterionResult& b) {
        return a.criterion == b.criterion && a.holds == b.holds &&
               a.first_failure == b.first_failure;
    }
};

// Check one criterion against coefficients up to index N (N >= 0); reports
// the smallest index whose inequality fails.
CriterionResult check_criterion(const CoefficientSpec& spec, Criterion which, long N);
CriterionResult check_criterion(const CoefficientSpec& spec, std::string_view which, long N);

enum class Dominance { row, column };

// Diagonal dominance of a nonnegative tridiagonal matrix: every row (or
// column) has its diagonal entry at least the sum of its off-diagonal ones.
CriterionResult check_diagonal_dominance(const TriMatrix& m, Dominance side);

// (N+1)-square Toeplitz matrix [a_{i-j}], reading indices outside the
// sequence as zero.
Matrix<Rational> toeplitz(const std::vector<Rational>& a, long N);

// (N+1)-square Hankel matrix [a_{i+j}]; the sequence must supply 2N+1 terms
// or InsufficientLengthError is thrown.
Matrix<Rational> hankel(const std::vector<Rational>& a, long N);

// Log-convexity / log-concavity of a nonnegative sequence (NegativeTermError
// otherwise).  Sequences shorter than three terms qualify trivially.
bool is_log_convex(const std::vector<Rational>& a);
bool is_log_concave(const std::vector<Rational>& a);

// Polya frequency up to order r: the (N+1)-square Toeplitz truncation is TP_r.
TPReport is_pf_r(const std::vector<Rational>& a, long r, long N);

}  // namespace tptri
