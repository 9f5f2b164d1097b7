#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randcf/bitseq.hpp"
#include "randcf/fraction.hpp"

namespace randcf {

/// Partial quotients [a_1, ..., a_k] of a value in [0, 1), representing
/// 1/(a_1 + 1/(a_2 + ... + 1/a_k)). The empty list is exactly zero.
/// Every quotient must be >= 1; expansion always emits the canonical form
/// whose final quotient is >= 2.
class ContinuedFraction {
public:
    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<Natural> quotients);

    std::size_t size() const { return quotients_.size(); }
    bool empty() const { return quotients_.empty(); }
    const std::vector<Natural>& quotients() const { return quotients_; }

    /// "[1, 2, 2]" display form; "[]" for zero.
    std::string str() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<Natural> quotients_;
};

/// Quotient sequence of the Euclidean algorithm on (den, num). Common
/// factors do not change the result; num = 0 yields the empty expansion.
/// Requires num < den.
ContinuedFraction cf_expand(const Fraction& f);

/// Folds the quotients back into a reduced fraction; the empty expansion
/// gives 0/1. Any positive quotients are accepted, canonical or not.
Fraction cf_fold(const ContinuedFraction& c);

/// Randomness measure R: the number of partial quotients of the canonical
/// expansion. Defined only for 0 < num < den.
std::size_t r_measure(const Fraction& f);

/// R of a bit string through its generator fraction over 2^N - 1.
/// All-zero and all-one strings have no defined measure and are rejected.
std::size_t r_measure(const BitString& s);

}  // namespace randcf
