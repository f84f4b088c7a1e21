#include "gf2x/fft.hpp"

#include <cassert>
#include <stdexcept>

#include "gf2x/mul.hpp"

namespace gf2x::fft {

namespace {

std::size_t pow3(unsigned e) {
    std::size_t v = 1;
    while (e--) v *= 3;
    return v;
}

}  // namespace

TriadicRing::TriadicRing(unsigned level) : t(level), T(pow3(level)) {}

Gf2Poly TriadicRing::reduce(Gf2Poly a) const {
    const std::size_t n = 2 * T;
    while (a.bit_length() > n) {
        const Gf2Poly hi = a >> n;
        a = a.low_bits(n);
        a.xor_shifted(hi, T);
        a += hi;
    }
    return a;
}

Gf2Poly TriadicRing::mul_by_x_pow(const Gf2Poly& a, std::size_t e) const {
    e %= order();
    if (e == 0 || a.is_zero()) return a;
    Gf2Poly b = a;
    b <<= e;
    return reduce(std::move(b));
}

void dft(std::vector<Gf2Poly>& v, const TriadicRing& ring, std::size_t omega_exp) {
    const std::size_t K = v.size();
    if (K == 1) return;
    assert(K % 3 == 0);
    const std::size_t K3 = K / 3;
    const std::size_t ord = ring.order();

    std::vector<Gf2Poly> a(K3), b(K3), c(K3);
    for (std::size_t j = 0; j < K3; ++j) {
        a[j] = std::move(v[3 * j]);
        b[j] = std::move(v[3 * j + 1]);
        c[j] = std::move(v[3 * j + 2]);
    }
    const std::size_t sub_exp = (omega_exp * 3) % ord;
    dft(a, ring, sub_exp);
    dft(b, ring, sub_exp);
    dft(c, ring, sub_exp);

    // omega^(K/3) is the cube root pairing the three output thirds.
    const std::size_t w3 = (omega_exp * K3) % ord;
    for (std::size_t j = 0; j < K3; ++j) {
        const Gf2Poly t1 = ring.mul_by_x_pow(b[j], (omega_exp * j) % ord);
        const Gf2Poly t2 = ring.mul_by_x_pow(c[j], (2 * omega_exp * j) % ord);
        v[j] = a[j] + t1 + t2;
        v[j + K3] = a[j] + ring.mul_by_x_pow(t1, w3) + ring.mul_by_x_pow(t2, (2 * w3) % ord);
        v[j + 2 * K3] = a[j] + ring.mul_by_x_pow(t1, (2 * w3) % ord) + ring.mul_by_x_pow(t2, w3);
    }
}

void idft(std::vector<Gf2Poly>& v, const TriadicRing& ring, std::size_t omega_exp) {
    // DFT with the inverse root; |v| = 3^k is odd so the 1/n factor is 1.
    const std::size_t ord = ring.order();
    dft(v, ring, (ord - omega_exp % ord) % ord);
}

Gf2Poly mul_in_ring(const TriadicRing& ring, const Gf2Poly& a, const Gf2Poly& b,
                    const MulThresholds& th) {
    assert(a.bit_length() <= ring.element_bits() && b.bit_length() <= ring.element_bits());
    const std::size_t element_words = (ring.element_bits() + word_bits - 1) / word_bits;
    if (ring.t <= 3 || element_words < th.fft_min)
        return ring.reduce(mul_toom3(a, b, th));

    // Split the 2*3^t coefficients into 2K digits of M bits and reduce the
    // digit polynomial modulo Y^(2K)+Y^K+1 via CRT on its two conjugate
    // halves Y^K = w and Y^K = w^2, w a primitive cube root of unity. Each
    // half is a zeta-weighted cyclic convolution of length K over the ring
    // D_m, m = t - k, where zeta = x^(3^(m-k)) has order 3K.
    const unsigned k = ring.t / 2;
    const unsigned m = ring.t - k;
    const std::size_t K = pow3(k);
    const std::size_t M = pow3(m);
    const TriadicRing inner(m);
    const std::size_t iord = inner.order();       // 3^(m+1)
    const std::size_t zeta = pow3(m - k);         // exponent of zeta
    const std::size_t omega_exp = 3 * zeta;       // order-K root for the DFT
    const std::size_t cube = inner.T;             // x^cube = zeta^K, order 3

    std::vector<Gf2Poly> da(2 * K), db(2 * K);
    for (std::size_t i = 0; i < 2 * K; ++i) {
        da[i] = a.slice(i * M, M);
        db[i] = b.slice(i * M, M);
    }

    auto convolve = [&](unsigned which) {
        const std::size_t w3e = which * cube;  // w or w^2
        std::vector<Gf2Poly> u(K), v(K);
        for (std::size_t i = 0; i < K; ++i) {
            const std::size_t weight = (which * zeta * i) % iord;
            u[i] = inner.mul_by_x_pow(da[i] + inner.mul_by_x_pow(da[i + K], w3e), weight);
            v[i] = inner.mul_by_x_pow(db[i] + inner.mul_by_x_pow(db[i + K], w3e), weight);
        }
        dft(u, inner, omega_exp);
        dft(v, inner, omega_exp);
        for (std::size_t i = 0; i < K; ++i) u[i] = mul_in_ring(inner, u[i], v[i], th);
        idft(u, inner, omega_exp);
        for (std::size_t i = 0; i < K; ++i) {
            const std::size_t weight = (which * zeta * i) % iord;
            u[i] = inner.mul_by_x_pow(u[i], (iord - weight) % iord);
        }
        return u;
    };

    const std::vector<Gf2Poly> r1 = convolve(1);
    const std::vector<Gf2Poly> r2 = convolve(2);

    // r1 = lo + w*hi, r2 = lo + w^2*hi and w + w^2 = 1 in char 2.
    Gf2Poly out;
    for (std::size_t i = 0; i < K; ++i) {
        const Gf2Poly hi = r1[i] + r2[i];
        const Gf2Poly lo = r1[i] + inner.mul_by_x_pow(hi, cube);
        out.xor_shifted(lo, i * M);
        out.xor_shifted(hi, (K + i) * M);
    }
    return ring.reduce(std::move(out));
}

}  // namespace gf2x::fft
