// Arithmetic in GF(2)[x]/(x^r + x^s + 1). Squaring costs O(r) here while
// multiplication costs M(r) >> r; the factorization engine is built around
// that asymmetry.
#pragma once

#include <cstddef>

#include "gf2x/counters.hpp"
#include "gf2x/mul.hpp"
#include "gf2x/poly.hpp"

namespace gf2x {

/// The modulus x^r + x^s + 1, r > s > 0, r and s not both even (otherwise
/// the trinomial is a square). Constructor validates.
struct Trinomial {
    std::size_t r;
    std::size_t s;

    Trinomial(std::size_t r_, std::size_t s_);

    Gf2Poly to_poly() const;
    /// The reciprocal x^r + x^(r-s) + 1, which has the same factor degrees.
    Trinomial reciprocal() const { return Trinomial(r, r - s); }
};

/// Modular arithmetic context for one trinomial. Confined to one worker at a
/// time; distinct contexts are fully independent.
class ModContext {
public:
    ModContext(Trinomial t, MulThresholds thresholds, OpCounters* counters = nullptr)
        : t_(t), thresholds_(thresholds), counters_(counters) {}

    const Trinomial& trinomial() const { return t_; }
    const MulThresholds& thresholds() const { return thresholds_; }
    OpCounters* counters() const { return counters_; }
    Gf2Poly modulus() const { return t_.to_poly(); }

    /// Reduce mod x^r + x^s + 1 using x^r = x^s + 1 folding. Accepts any
    /// degree < 2r-1 (the size of a product of residues); two folds suffice
    /// for s <= r/2, the loop covers larger s as well.
    Gf2Poly reduce(Gf2Poly a) const;

    /// a^2 mod P, a residue of degree < r. Counts one squaring.
    Gf2Poly mod_square(const Gf2Poly& a) const;

    /// a*b mod P, residues of degree < r. Counts one multiplication.
    Gf2Poly mod_mul(const Gf2Poly& a, const Gf2Poly& b) const;

    /// a*x mod P. O(r) shift, not counted as a multiplication.
    Gf2Poly mul_by_x(Gf2Poly a) const;

    /// x^(2^e) mod P by e repeated squarings.
    Gf2Poly frobenius_power(std::size_t e) const;

private:
    Trinomial t_;
    MulThresholds thresholds_;
    OpCounters* counters_;
};

}  // namespace gf2x
