// Schonhage-style multiplication for GF(2)[x] built on a radix-3 transform.
//
// Char-2 rules out 2^k-th roots of unity, so the transform lives in
// D_t = GF(2)[x]/(x^(2T) + x^T + 1) with T = 3^t, where x is a root of unity
// of order 3T and every twiddle factor is a shift followed by a fold.
#pragma once

#include <cstddef>
#include <vector>

#include "gf2x/poly.hpp"

namespace gf2x {

struct MulThresholds;

namespace fft {

/// The ring GF(2)[x]/(x^(2T) + x^T + 1), T = 3^t. Elements are polynomials
/// of degree < 2T; x^(3T) = 1.
struct TriadicRing {
    unsigned t = 0;
    std::size_t T = 1;  // 3^t

    explicit TriadicRing(unsigned level);

    std::size_t element_bits() const { return 2 * T; }
    std::size_t order() const { return 3 * T; }  // multiplicative order of x

    /// Reduce modulo x^(2T) + x^T + 1.
    Gf2Poly reduce(Gf2Poly a) const;

    /// a * x^e in the ring (e taken mod 3T).
    Gf2Poly mul_by_x_pow(const Gf2Poly& a, std::size_t e) const;
};

/// In-place DFT of length |v| = 3^k with root omega = x^omega_exp, which must
/// have multiplicative order |v| in the ring.
void dft(std::vector<Gf2Poly>& v, const TriadicRing& ring, std::size_t omega_exp);

/// Inverse of dft with the same root; length 3^k is odd, so the usual 1/n
/// scaling is the identity in char 2.
void idft(std::vector<Gf2Poly>& v, const TriadicRing& ring, std::size_t omega_exp);

/// Product of two ring elements (degree < 2T each), reduced into the ring.
Gf2Poly mul_in_ring(const TriadicRing& ring, const Gf2Poly& a, const Gf2Poly& b,
                    const MulThresholds& t);

}  // namespace fft
}  // namespace gf2x
