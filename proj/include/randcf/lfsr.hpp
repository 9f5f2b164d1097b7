#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "randcf/bitseq.hpp"
#include "randcf/numtheory.hpp"

namespace randcf {

/// Characteristic polynomial of a binary shift register, stored as its
/// exponent set in descending order. Both the degree and 0 must be present
/// (leading and constant coefficient 1), and the degree is at least 2.
class TapPolynomial {
public:
    explicit TapPolynomial(std::vector<unsigned> exponents);

    /// Accepts "6,1,0" (exponent list) or "1000011" (coefficient vector,
    /// highest degree first). Both denote x^6+x+1.
    static TapPolynomial parse(std::string_view text);

    unsigned degree() const { return exponents_.front(); }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    /// "x^6+x+1" display form.
    std::string str() const;

    friend bool operator==(const TapPolynomial&, const TapPolynomial&) = default;

private:
    std::vector<unsigned> exponents_;
};

/// Output a_0, a_1, ..., a_{length-1} of the Fibonacci register
/// a_{n+r} = XOR of a_{n+e} over the non-leading exponents e, seeded with
/// a_0..a_{r-1}. The seed must be non-zero and of length r = degree.
BitString pn_sequence(const TapPolynomial& poly, const BitString& seed, std::size_t length);

/// Length of the state cycle through 00..01. Supported up to degree 24.
Natural lfsr_period(const TapPolynomial& poly);

/// True iff lfsr_period(poly) == 2^degree - 1.
bool is_maximal(const TapPolynomial& poly);

}  // namespace randcf
