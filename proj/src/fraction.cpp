#include "randcf/fraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "randcf/numtheory.hpp"

namespace randcf {

namespace {

Natural parse_decimal(std::string_view text, const char* what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" +
                                    std::string(text) + "'");
    }
    return Natural(std::string(text), 10);
}

}  // namespace

Fraction::Fraction(Natural numerator, Natural denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (sgn(num) < 0) throw std::domain_error("fraction numerator must be non-negative");
    if (den < 1) throw std::domain_error("fraction denominator must be >= 1");
}

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("expected 'm/q', got '" + std::string(text) + "'");
    }
    return Fraction(parse_decimal(text.substr(0, slash), "numerator"),
                    parse_decimal(text.substr(slash + 1), "denominator"));
}

Fraction Fraction::reduced() const {
    if (sgn(num) == 0) return Fraction(0, 1);
    const Natural g = gcd(num, den);
    return Fraction(num / g, den / g);
}

std::string Fraction::str() const {
    return num.get_str() + "/" + den.get_str();
}

}  // namespace randcf
