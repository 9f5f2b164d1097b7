#pragma once

#include <cstddef>

#include "randcf/bitseq.hpp"
#include "randcf/fraction.hpp"

namespace randcf {

/// The generator fraction value(s) / (2^N - 1) of a bit string, unreduced.
/// The all-ones string is rejected (its fraction would be improper, m = q).
Fraction bits_to_fraction(const BitString& s);

/// First `length` digits of the binary expansion of m/q for odd q >= 3 and
/// 0 <= m < q: digit i = (m * 2^i mod q) mod 2, i = 1..length.
BitString dseq_bits(const Natural& m, const Natural& q, std::size_t length);

/// Period of the binary expansion of fractions over odd q >= 3:
/// the multiplicative order of 2 mod q.
Natural dseq_period(const Natural& q);

/// True iff prime q yields maximal-period (q - 1) expansions, i.e. 2 is a
/// primitive root of q. Composite q is rejected.
bool is_maximal_dseq(const Natural& q);

}  // namespace randcf
