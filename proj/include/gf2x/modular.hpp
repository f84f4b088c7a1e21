// Arithmetic modulo an arbitrary (small) polynomial, used for cofactor work
// where the modulus is no longer a trinomial.
#pragma once

#include "gf2x/poly.hpp"

namespace gf2x {

inline Gf2Poly square_mod(const Gf2Poly& a, const Gf2Poly& modulus) {
    return divrem(square(a), modulus).second;
}

inline Gf2Poly mul_mod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& modulus) {
    return divrem(mul_classical(a, b), modulus).second;
}

/// Rabin irreducibility test: f of degree n is irreducible iff
/// x^(2^n) = x (mod f) and gcd(x^(2^(n/p)) + x, f) = 1 for every prime p | n.
bool is_irreducible(const Gf2Poly& f);

}  // namespace gf2x
