#include "gf2x/trinomial.hpp"

#include <stdexcept>

namespace gf2x {

Trinomial::Trinomial(std::size_t r_, std::size_t s_) : r(r_), s(s_) {
    if (r <= 2) throw std::invalid_argument("Trinomial: r must exceed 2");
    if (s == 0 || s >= r) throw std::invalid_argument("Trinomial: need r > s > 0");
    if (r % 2 == 0 && s % 2 == 0)
        throw std::invalid_argument("Trinomial: r and s both even gives a perfect square");
}

Gf2Poly Trinomial::to_poly() const {
    Gf2Poly p = Gf2Poly::monomial(r);
    p.flip_coefficient(s);
    p.flip_coefficient(0);
    return p;
}

Gf2Poly ModContext::reduce(Gf2Poly a) const {
    if (a.bit_length() > 2 * t_.r - 1)
        throw std::invalid_argument("ModContext::reduce: input degree out of supported range");
    while (a.bit_length() > t_.r) {
        const Gf2Poly high = a >> t_.r;
        a = a.low_bits(t_.r);
        a.xor_shifted(high, t_.s);
        a += high;
    }
    return a;
}

Gf2Poly ModContext::mod_square(const Gf2Poly& a) const {
    if (counters_) ++counters_->squarings;
    return reduce(square(a));
}

Gf2Poly ModContext::mod_mul(const Gf2Poly& a, const Gf2Poly& b) const {
    if (counters_) ++counters_->modmuls;
    return reduce(mul(a, b, thresholds_));
}

Gf2Poly ModContext::mul_by_x(Gf2Poly a) const {
    a <<= 1;
    if (a.bit_length() > t_.r) {
        a.flip_coefficient(t_.r);
        a.flip_coefficient(t_.s);
        a.flip_coefficient(0);
    }
    return a;
}

Gf2Poly ModContext::frobenius_power(std::size_t e) const {
    Gf2Poly v = Gf2Poly::x();
    while (e--) v = mod_square(v);
    return v;
}

}  // namespace gf2x
