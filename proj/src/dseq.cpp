#include "randcf/dseq.hpp"

#include <stdexcept>

namespace randcf {

namespace {

void require_odd_modulus(const Natural& q) {
    if (q < 3 || q % 2 == 0) {
        throw std::domain_error("denominator must be odd and >= 3");
    }
}

}  // namespace

Fraction bits_to_fraction(const BitString& s) {
    if (s.all_ones()) {
        throw std::domain_error("all-ones string maps to the improper fraction m = q");
    }
    Natural den = (Natural(1) << s.size()) - 1;
    return Fraction(s.value(), std::move(den));
}

BitString dseq_bits(const Natural& m, const Natural& q, std::size_t length) {
    require_odd_modulus(q);
    if (sgn(m) < 0 || m >= q) {
        throw std::domain_error("numerator must satisfy 0 <= m < q");
    }
    if (length == 0) {
        throw std::domain_error("length must be positive");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(length);
    Natural r = m;  // r = m * 2^i mod q after i doublings
    for (std::size_t i = 0; i < length; ++i) {
        r <<= 1;
        if (r >= q) r -= q;
        bits.push_back(static_cast<std::uint8_t>(mpz_odd_p(r.get_mpz_t()) ? 1 : 0));
    }
    return BitString(std::move(bits));
}

Natural dseq_period(const Natural& q) {
    require_odd_modulus(q);
    return multiplicative_order(2, q);
}

bool is_maximal_dseq(const Natural& q) {
    if (!is_prime(q)) {
        throw std::domain_error("maximal-length test requires a prime denominator");
    }
    return is_primitive_root(2, q);
}

}  // namespace randcf
