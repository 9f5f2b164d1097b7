#include "randcf/lfsr.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace randcf {

namespace {

constexpr unsigned kMaxCycleDegree = 24;

unsigned parse_exponent(std::string_view token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("invalid polynomial exponent '" + std::string(token) + "'");
    }
    if (token.size() > 9) {
        throw std::invalid_argument("polynomial exponent out of range");
    }
    return static_cast<unsigned>(std::stoul(std::string(token)));
}

}  // namespace

TapPolynomial::TapPolynomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw std::domain_error("polynomial needs at least one exponent");
    }
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
    if (std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end()) {
        throw std::domain_error("polynomial exponents must be distinct");
    }
    if (exponents_.back() != 0) {
        throw std::domain_error("polynomial must have constant term 1 (exponent 0)");
    }
    if (exponents_.front() < 2) {
        throw std::domain_error("polynomial degree must be >= 2");
    }
}

TapPolynomial TapPolynomial::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty polynomial");
    }
    std::vector<unsigned> exps;
    const bool binary = text.size() >= 2 &&
                        std::all_of(text.begin(), text.end(),
                                    [](char c) { return c == '0' || c == '1'; });
    if (binary) {
        // coefficient vector, highest degree first
        if (text.front() != '1') {
            throw std::invalid_argument("coefficient vector must start with 1");
        }
        const unsigned degree = static_cast<unsigned>(text.size() - 1);
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') exps.push_back(degree - static_cast<unsigned>(i));
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            exps.push_back(parse_exponent(text.substr(pos, comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return TapPolynomial(std::move(exps));
}

std::string TapPolynomial::str() const {
    std::string s;
    for (unsigned e : exponents_) {
        if (!s.empty()) s += "+";
        if (e == 0) {
            s += "1";
        } else if (e == 1) {
            s += "x";
        } else {
            s += "x^" + std::to_string(e);
        }
    }
    return s;
}

BitString pn_sequence(const TapPolynomial& poly, const BitString& seed, std::size_t length) {
    const unsigned r = poly.degree();
    if (seed.size() != r) {
        throw std::domain_error("seed length must equal the polynomial degree");
    }
    if (seed.all_zeros()) {
        throw std::domain_error("seed must not be all-zero");
    }
    if (length == 0) {
        throw std::domain_error("length must be positive");
    }
    std::vector<std::uint8_t> a = seed.bits();
    a.reserve(std::max<std::size_t>(length, a.size()));
    while (a.size() < length) {
        const std::size_t n = a.size() - r;
        std::uint8_t next = 0;
        for (unsigned e : poly.exponents()) {
            if (e < r) next ^= a[n + e];
        }
        a.push_back(next);
    }
    a.resize(length);
    return BitString(std::move(a));
}

Natural lfsr_period(const TapPolynomial& poly) {
    const unsigned r = poly.degree();
    if (r > kMaxCycleDegree) {
        throw std::domain_error("state cycle enumeration supports degree <= " +
                                std::to_string(kMaxCycleDegree));
    }
    std::uint32_t taps = 0;
    for (unsigned e : poly.exponents()) {
        if (e < r) taps |= std::uint32_t{1} << e;
    }
    // state bit j holds a_{n+j}; start from seed 00..01 (a_{r-1} = 1)
    const std::uint32_t init = std::uint32_t{1} << (r - 1);
    std::uint32_t state = init;
    unsigned long steps = 0;
    do {
        const std::uint32_t next = static_cast<std::uint32_t>(__builtin_popcount(state & taps) & 1);
        state = (state >> 1) | (next << (r - 1));
        ++steps;
    } while (state != init);
    return Natural(steps);
}

bool is_maximal(const TapPolynomial& poly) {
    return lfsr_period(poly) == (Natural(1) << poly.degree()) - 1;
}

}  // namespace randcf
