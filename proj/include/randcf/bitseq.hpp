#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randcf/numtheory.hpp"

namespace randcf {

/// Finite non-empty binary sequence. The first bit is the most significant
/// one under integer valuation: "1001110" has value 78.
class BitString {
public:
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters; any other character is an
    /// error naming the offending position.
    static BitString parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// MSB-first integer value, in [0, 2^N - 1].
    Natural value() const;

    /// Every bit flipped; value(complement) = 2^N - 1 - value.
    BitString complement() const;

    /// Cyclic rotation; k is reduced mod N, negative k rotates left.
    BitString rotated_right(long long k) const;

    bool all_zeros() const;
    bool all_ones() const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Smallest k >= 0 with a.rotated_right(k) == b, or nullopt when the lengths
/// differ or no rotation matches.
std::optional<std::size_t> cyclic_shift(const BitString& a, const BitString& b);

}  // namespace randcf
