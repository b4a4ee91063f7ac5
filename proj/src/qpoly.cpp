#include "tptri/qpoly.hpp"

#include "tptri/errors.hpp"

#include <utility>

namespace tptri {

namespace {
const Rational kZero = 0;
}

QPoly::QPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
}

QPoly QPoly::variable() {
    return QPoly(std::vector<Rational>{0, 1});
}

void QPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(long power) const {
    if (power < 0 || power >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational QPoly::constant_value() const {
    if (!is_constant())
        throw Error("polynomial " + tptri::to_string(*this) + " is not constant");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Rational QPoly::eval(const Rational& point) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * point + coeffs_[i];
    }
    return acc;
}

QPoly QPoly::operator-() const {
    QPoly result = *this;
    for (Rational& c : result.coeffs_) c = -c;
    return result;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return QPoly();
    std::vector<Rational> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QPoly(std::move(prod));
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::optional<QPoly> divide_exact(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    if (f.is_zero()) return QPoly();
    if (f.degree() < g.degree()) return std::nullopt;

    std::vector<Rational> rem = f.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
    const std::vector<Rational>& div = g.coeffs();
    const Rational& lead = div.back();

    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = rem[i + div.size() - 1] / lead;
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < div.size(); ++j) {
            rem[i + j] -= c * div[j];
        }
    }
    for (const Rational& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return QPoly(std::move(quot));
}

bool poly_is_nonneg(const QPoly& f) {
    for (const Rational& c : f.coeffs()) {
        if (c < 0) return false;
    }
    return true;
}

bool poly_geq_q(const QPoly& f, const QPoly& g) {
    return poly_is_nonneg(f - g);
}

std::optional<long> first_negative_power(const QPoly& f) {
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] < 0) return static_cast<long>(i);
    }
    return std::nullopt;
}

std::string to_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long p = 0; p <= f.degree(); ++p) {
        const Rational& c = f.coeff(p);
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            out += (c < 0) ? "-" : "";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (p == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += (p == 1) ? "q" : "q^" + std::to_string(p);
        }
    }
    return out;
}

}  // namespace tptri
