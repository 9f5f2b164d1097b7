#pragma once

#include <gmpxx.h>

namespace randcf {

/// Unbounded non-negative integer. Signedness is not restricted by the type
/// itself; operations taking a Natural reject negative arguments.
using Natural = mpz_class;

/// Greatest common divisor. gcd(0, 0) is undefined and rejected.
Natural gcd(const Natural& a, const Natural& b);

/// base^exp mod modulus, with modulus >= 2.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

/// Smallest k >= 1 with base^k = 1 (mod modulus).
/// Requires modulus >= 2 and gcd(base, modulus) == 1.
Natural multiplicative_order(const Natural& base, const Natural& modulus);

/// Deterministic trial division up to sqrt(n); meant for desk-scale moduli.
bool is_prime(const Natural& n);

/// True iff the order of base modulo prime_modulus is prime_modulus - 1.
/// The modulus is checked for primality and rejected if composite.
bool is_primitive_root(const Natural& base, const Natural& prime_modulus);

}  // namespace randcf
