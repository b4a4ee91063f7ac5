#pragma once

#include "tptri/qpoly.hpp"
#include "tptri/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tptri {

// Arithmetic expression over the sequence index k and the indeterminate q:
// integer literals, + - * / ^, and parentheses.  Values are polynomials in
// q (constants when q does not appear).  Division requires a nonzero
// constant divisor and exponents must be nonnegative integer literals, so
// every expression evaluates to an honest polynomial.
class SeqExpr {
public:
    struct Node;

    static SeqExpr parse(std::string_view text);

    // Evaluate with k bound to k_value; q stays symbolic.
    QPoly eval(const Rational& k_value) const;

    bool uses_k() const { return uses_k_; }
    bool uses_q() const { return uses_q_; }
    const std::string& text() const { return text_; }

private:
    SeqExpr(std::shared_ptr<const Node> root, std::string text, bool uses_k, bool uses_q)
        : root_(std::move(root)), text_(std::move(text)), uses_k_(uses_k), uses_q_(uses_q) {}

    std::shared_ptr<const Node> root_;
    std::string text_;
    bool uses_k_ = false;
    bool uses_q_ = false;
};

// One coefficient sequence: an explicit prefix list, an expression tail, or
// both.  Text forms:
//     "k + 1"            pure expression
//     "[1, 3/2, 0]"      finite list (indices index_base, index_base+1, ...)
//     "[1] ++ 2"         list, then the expression for every later index
// The expression receives the actual index as k.  Asking a finite list past
// its end throws UndefinedIndexError.
class SeqGen {
public:
    // An empty generator: every access throws UndefinedIndexError.
    SeqGen() = default;

    static SeqGen from_text(std::string_view text, long index_base);
    static SeqGen constant(const Rational& value);
    static SeqGen from_list(std::vector<Rational> values, long index_base);
    static SeqGen from_poly_list(std::vector<QPoly> values, long index_base);

    // Term at `index` (absolute, not offset) as a polynomial in q.
    QPoly at_poly(long index) const;

    // Term at `index` as a rational; throws if the value involves q.
    Rational at(long index) const;

    bool uses_q() const;
    long index_base() const { return index_base_; }

    // Copy with q substituted by q0, turning a q-generator into a numeric one.
    SeqGen specialized(const Rational& q0) const;

    const std::string& text() const { return text_; }

private:
    long index_base_ = 0;
    std::vector<QPoly> prefix_;
    std::optional<SeqExpr> tail_;
    std::optional<Rational> q_subst_;
    std::string text_;
};

}  // namespace tptri
