// Reference implementations for the test suites, kept deliberately naive and
// independent of the word-packed arithmetic they check: polynomials are
// coefficient vectors, one bool per coefficient.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gf2x/poly.hpp"

namespace testref {

using Bits = std::vector<std::uint8_t>;  // bits[i] = coefficient of x^i, trimmed

inline Bits trim(Bits v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline Bits to_bits(const gf2x::Gf2Poly& p) {
    Bits out(p.bit_length());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i);
    return out;
}

inline gf2x::Gf2Poly from_bits(const Bits& v) {
    gf2x::Gf2Poly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) p.flip_coefficient(i);
    return p;
}

inline Bits add(const Bits& a, const Bits& b) {
    Bits out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (i < a.size() ? a[i] : 0) ^ (i < b.size() ? b[i] : 0);
    return trim(std::move(out));
}

inline Bits mul(const Bits& a, const Bits& b) {
    if (a.empty() || b.empty()) return {};
    Bits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= (a[i] & b[j]);
    return trim(std::move(out));
}

inline std::pair<Bits, Bits> divrem(Bits a, const Bits& b) {
    Bits q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        q[shift] ^= 1;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= b[i];
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

inline Bits gcd(Bits a, Bits b) {
    while (!b.empty()) {
        Bits r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// All irreducible polynomials of degree exactly n, by trial division
/// against every smaller candidate divisor. Exponential; keep n small.
inline std::vector<gf2x::Gf2Poly> irreducibles_of_degree(std::size_t n) {
    std::vector<gf2x::Gf2Poly> out;
    const std::uint64_t lo = std::uint64_t{1} << n;
    for (std::uint64_t bitsv = lo; bitsv < 2 * lo; ++bitsv) {
        if (n >= 1 && (bitsv & 1) == 0) continue;  // divisible by x
        Bits candidate(n + 1);
        for (std::size_t i = 0; i <= n; ++i) candidate[i] = (bitsv >> i) & 1;
        bool irreducible = true;
        for (std::uint64_t divisor = 2; irreducible && divisor < 2 * lo; ++divisor) {
            Bits dv;
            for (std::uint64_t v = divisor; v; v >>= 1) dv.push_back(v & 1);
            dv = trim(std::move(dv));
            if (dv.size() < 2 || dv.size() > n / 2 + 1) continue;
            if (divrem(candidate, dv).second.empty()) irreducible = false;
        }
        if (irreducible) out.push_back(from_bits(candidate));
    }
    return out;
}

}  // namespace testref
