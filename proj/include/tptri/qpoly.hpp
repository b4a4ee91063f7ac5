#pragma once

#include "tptri/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tptri {

// Univariate polynomial in q with exact rational coefficients, stored densely
// by ascending power.  Canonical form strips trailing zero coefficients, so
// the zero polynomial is the empty vector and degree() of zero is -1.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& constant);  // NOLINT: scalars embed implicitly
    QPoly(long constant) : QPoly(Rational(constant)) {}
    QPoly(int constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> coeffs);

    // The monomial q itself.
    static QPoly variable();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of q^power; zero beyond the degree.
    const Rational& coeff(long power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // As a rational; only valid when is_constant().
    Rational constant_value() const;

    Rational eval(const Rational& point) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

    friend bool operator==(const QPoly& lhs, const QPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const QPoly& lhs, const QPoly& rhs) { return !(lhs == rhs); }

private:
    void canonicalize();

    std::vector<Rational> coeffs_;
};

// Exact quotient f / g when the remainder is zero, nullopt otherwise.
// Division by zero throws.
std::optional<QPoly> divide_exact(const QPoly& f, const QPoly& g);

// True iff every coefficient of f is nonnegative.
bool poly_is_nonneg(const QPoly& f);

// Coefficientwise partial order: f >=_q g iff f - g has no negative coefficient.
bool poly_geq_q(const QPoly& f, const QPoly& g);

// Power of the lowest-order negative coefficient, if there is one.
std::optional<long> first_negative_power(const QPoly& f);

// Canonical text form "c0 + c1*q + c2*q^2 + ..." ascending, zero terms
// omitted, unit coefficients folded into the power ("q^2", "-q").
std::string to_string(const QPoly& f);

// Parse any arithmetic expression in q back into a polynomial.
// (Defined with the expression parser; accepts the to_string form.)
QPoly parse_qpoly(std::string_view text);

}  // namespace tptri
