// Polynomial GCD over GF(2): classical Euclid and a subquadratic half-GCD.
#pragma once

#include <cstdint>

#include "gf2x/mul.hpp"
#include "gf2x/poly.hpp"

namespace gf2x {

/// Classical Euclidean GCD. gcd(a, 0) = a; throws when both inputs are zero.
Gf2Poly gcd_euclid(const Gf2Poly& a, const Gf2Poly& b);

/// Divide-and-conquer half-GCD, G(2r) = 2G(r) + O(M(r)). Output identical to
/// gcd_euclid. Inputs below base_degree fall through to Euclid.
Gf2Poly gcd_fast(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gcd_fast(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t,
                 std::size_t base_degree = 512);

/// Instrumentation for the most recent gcd_fast call on this thread.
struct GcdStats {
    std::size_t max_recursion_depth = 0;
    std::uint64_t safety_fallbacks = 0;  // expected to stay 0
};
const GcdStats& last_gcd_stats();

}  // namespace gf2x
