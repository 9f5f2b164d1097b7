#include "randcf/bitseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace randcf {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::domain_error("bit string must have at least one bit");
    }
    for (auto b : bits_) {
        if (b > 1) throw std::domain_error("bit string elements must be 0 or 1");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty bit string");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("invalid bit '" + std::string(1, c) +
                                        "' at index " + std::to_string(i));
        }
        bits.push_back(static_cast<std::uint8_t>(c == '1'));
    }
    return BitString(std::move(bits));
}

Natural BitString::value() const {
    Natural v = 0;
    for (auto b : bits_) {
        v <<= 1;
        if (b) v |= 1;
    }
    return v;
}

BitString BitString::complement() const {
    std::vector<std::uint8_t> out(bits_.size());
    std::transform(bits_.begin(), bits_.end(), out.begin(),
                   [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
    return BitString(std::move(out));
}

BitString BitString::rotated_right(long long k) const {
    const auto n = static_cast<long long>(bits_.size());
    long long r = k % n;
    if (r < 0) r += n;
    std::vector<std::uint8_t> out(bits_.size());
    for (long long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>((i + r) % n)] = bits_[static_cast<std::size_t>(i)];
    }
    return BitString(std::move(out));
}

bool BitString::all_zeros() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

bool BitString::all_ones() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 1; });
}

std::string BitString::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::optional<std::size_t> cyclic_shift(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
            match = a.bit(i) == b.bit((i + k) % n);
        }
        if (match) return k;
    }
    return std::nullopt;
}

}  // namespace randcf
