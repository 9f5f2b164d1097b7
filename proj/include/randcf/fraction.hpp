#pragma once

#include <string>
#include <string_view>

#include "randcf/numtheory.hpp"

namespace randcf {

/// Non-negative rational num/den with den >= 1. Not reduced implicitly; the
/// generator fractions of bit sequences keep their m/(2^N - 1) form.
struct Fraction {
    Natural num;
    Natural den;

    Fraction(Natural numerator, Natural denominator);

    /// Parses "m/q", decimal, no spaces.
    static Fraction parse(std::string_view text);

    Fraction reduced() const;
    bool is_proper() const { return num < den; }

    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

}  // namespace randcf
