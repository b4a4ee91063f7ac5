#include "tptri/rational.hpp"

#include "tptri/errors.hpp"

#include <cctype>

namespace tptri {

namespace {

// GMP's own string parser skips interior whitespace, which would let
// "1 2" slip through as 12.  Validate the shape ourselves first.
bool is_integer_token(std::string_view part) {
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding whitespace only.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer_token(den))
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    if (!is_integer_token(num))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");

    Rational value;
    if (den.empty()) {
        value = Rational(Integer(std::string(num)));
    } else {
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
        value = Rational(Integer(std::string(num)), d);
        value.canonicalize();
    }
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace tptri
