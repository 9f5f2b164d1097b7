#include "randcf/cf.hpp"

#include <stdexcept>
#include <utility>

#include "randcf/dseq.hpp"

namespace randcf {

ContinuedFraction::ContinuedFraction(std::vector<Natural> quotients)
    : quotients_(std::move(quotients)) {
    for (const auto& a : quotients_) {
        if (a < 1) throw std::domain_error("partial quotients must be >= 1");
    }
}

std::string ContinuedFraction::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < quotients_.size(); ++i) {
        if (i) s += ", ";
        s += quotients_[i].get_str();
    }
    s += "]";
    return s;
}

ContinuedFraction cf_expand(const Fraction& f) {
    if (f.num >= f.den) {
        throw std::domain_error("value must be in [0,1)");
    }
    std::vector<Natural> quotients;
    Natural a = f.den;
    Natural b = f.num;
    Natural quot, rem;
    while (sgn(b) != 0) {
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        quotients.push_back(quot);
        mpz_swap(a.get_mpz_t(), b.get_mpz_t());
        mpz_swap(b.get_mpz_t(), rem.get_mpz_t());
    }
    return ContinuedFraction(std::move(quotients));
}

Fraction cf_fold(const ContinuedFraction& c) {
    Natural num = 0;
    Natural den = 1;
    for (auto it = c.quotients().rbegin(); it != c.quotients().rend(); ++it) {
        // 1/(a + num/den) = den / (a*den + num)
        Natural next = *it * den + num;
        num = std::move(den);
        den = std::move(next);
    }
    return Fraction(std::move(num), std::move(den));
}

std::size_t r_measure(const Fraction& f) {
    if (sgn(f.num) == 0) {
        throw std::domain_error("randomness measure is undefined for the zero fraction");
    }
    return cf_expand(f).size();
}

std::size_t r_measure(const BitString& s) {
    if (s.all_zeros()) {
        throw std::domain_error(
            "randomness measure is undefined for the all-zeros sequence (fraction 0)");
    }
    if (s.all_ones()) {
        throw std::domain_error(
            "randomness measure is undefined for the all-ones sequence (fraction 1)");
    }
    return r_measure(bits_to_fraction(s));
}

}  // namespace randcf
