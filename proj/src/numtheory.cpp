#include "randcf/numtheory.hpp"

#include <stdexcept>

namespace randcf {

namespace {

void require_nonnegative(const Natural& n, const char* what) {
    if (sgn(n) < 0) {
        throw std::domain_error(std::string(what) + " must be non-negative");
    }
}

}  // namespace

Natural gcd(const Natural& a, const Natural& b) {
    require_nonnegative(a, "gcd argument");
    require_nonnegative(b, "gcd argument");
    if (sgn(a) == 0 && sgn(b) == 0) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
    require_nonnegative(base, "mod_pow base");
    require_nonnegative(exp, "mod_pow exponent");
    if (modulus < 2) {
        throw std::domain_error("mod_pow modulus must be >= 2");
    }
    Natural r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Natural multiplicative_order(const Natural& base, const Natural& modulus) {
    require_nonnegative(base, "multiplicative_order base");
    if (modulus < 2) {
        throw std::domain_error("multiplicative_order modulus must be >= 2");
    }
    if (gcd(base, modulus) != 1) {
        throw std::domain_error("multiplicative_order undefined: base and modulus share a factor");
    }
    Natural r = base % modulus;
    Natural k = 1;
    while (r != 1) {
        r = r * base % modulus;
        ++k;
    }
    return k;
}

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Natural d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_primitive_root(const Natural& base, const Natural& prime_modulus) {
    if (!is_prime(prime_modulus)) {
        throw std::domain_error("is_primitive_root modulus must be prime");
    }
    return multiplicative_order(base, prime_modulus) == prime_modulus - 1;
}

}  // namespace randcf
