#include "gf2x/mul.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include "gf2x/fft.hpp"

namespace gf2x {

namespace {

MulThresholds g_default_thresholds{};

// Exact quotient by (x+1): q_i is the prefix parity of v_0..v_i. The scan is
// done with shift-xor doubling inside each word plus a carry of the running
// parity across words. Exactness of the division is the caller's contract.
Gf2Poly exact_div_x1(const Gf2Poly& v) {
    if (v.is_zero()) return {};
    std::vector<Word> out(v.word_count());
    Word carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Word w = v.word(i);
        for (std::size_t sh = 1; sh < word_bits; sh *= 2) w ^= w << sh;
        w ^= carry;
        out[i] = w;
        carry = static_cast<Word>(0) - (w >> (word_bits - 1));
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly kara_rec(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    const std::size_t na = a.word_count(), nb = b.word_count();
    if (na == 0 || nb == 0) return {};
    // single-word operands cannot be split further
    if (std::min(na, nb) < t.karatsuba_min || std::max(na, nb) < 2)
        return mul_classical(a, b);

    const std::size_t k = (std::max(na, nb) + 1) / 2;
    const Gf2Poly a0 = a.low_words(k), a1 = a.high_words(k);
    const Gf2Poly b0 = b.low_words(k), b1 = b.high_words(k);

    Gf2Poly z0 = kara_rec(a0, b0, t);
    Gf2Poly z2 = kara_rec(a1, b1, t);
    Gf2Poly z1 = kara_rec(a0 + a1, b0 + b1, t);
    z1 += z0;
    z1 += z2;

    Gf2Poly res = std::move(z0);
    res.xor_shifted(z1, k * word_bits);
    res.xor_shifted(z2, 2 * k * word_bits);
    return res;
}

// Toom-3 over GF(2)[x]. Word-granular 3-way split; evaluation points
// 0, 1, x, x+1, infinity, so interpolation only ever divides by x and x+1,
// both exact here.
Gf2Poly toom3_rec(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    const std::size_t na = a.word_count(), nb = b.word_count();
    if (na == 0 || nb == 0) return {};
    // below 3 words the x-shifted evaluations stop shrinking
    if (std::min(na, nb) < t.toom3_min || std::max(na, nb) < 3)
        return kara_rec(a, b, t);

    const std::size_t k = (std::max(na, nb) + 2) / 3;
    const Gf2Poly a0 = a.low_words(k);
    const Gf2Poly a1 = a.high_words(k).low_words(k);
    const Gf2Poly a2 = a.high_words(2 * k);
    const Gf2Poly b0 = b.low_words(k);
    const Gf2Poly b1 = b.high_words(k).low_words(k);
    const Gf2Poly b2 = b.high_words(2 * k);

    const Gf2Poly v0 = toom3_rec(a0, b0, t);
    const Gf2Poly v4 = toom3_rec(a2, b2, t);
    const Gf2Poly v1 = toom3_rec(a0 + a1 + a2, b0 + b1 + b2, t);

    // Evaluate at Y=x and Y=x+1; the coefficients are whole blocks, so these
    // are one- and two-bit shifts.
    Gf2Poly ax = a0;
    ax.xor_shifted(a1, 1);
    ax.xor_shifted(a2, 2);
    Gf2Poly bx = b0;
    bx.xor_shifted(b1, 1);
    bx.xor_shifted(b2, 2);
    const Gf2Poly v2 = toom3_rec(ax, bx, t);

    Gf2Poly ax1 = a0 + a1 + a2;  // a1*(x+1) = a1<<1 + a1; a2*(x+1)^2 = a2<<2 + a2
    ax1.xor_shifted(a1, 1);
    ax1.xor_shifted(a2, 2);
    Gf2Poly bx1 = b0 + b1 + b2;
    bx1.xor_shifted(b1, 1);
    bx1.xor_shifted(b2, 2);
    const Gf2Poly v3 = toom3_rec(ax1, bx1, t);

    // Interpolation. With c0=v0, c4=v4 known:
    //   w1 = c1+c2+c3
    //   w2 = (c1 x + c2 x^2 + c3 x^3) / x
    //   w3 = ((v3 residue) + w1') / x = c1 + c2 x + c3 (x^2+x+1)
    const Gf2Poly w1 = v1 + v0 + v4;
    Gf2Poly w2 = v2 + v0;
    w2.xor_shifted(v4, 4);
    w2 = w2 >> 1;
    Gf2Poly w3 = v3 + v0 + v4 + w1;
    w3.xor_shifted(v4, 4);
    w3 = w3 >> 1;

    const Gf2Poly c3 = exact_div_x1(w3 + w2);
    const Gf2Poly tt = w1 + c3;
    Gf2Poly u = w2;
    u.xor_shifted(c3, 2);
    const Gf2Poly c2 = exact_div_x1(u + tt);
    const Gf2Poly c1 = tt + c2;

    Gf2Poly res = v0;
    res.xor_shifted(c1, k * word_bits);
    res.xor_shifted(c2, 2 * k * word_bits);
    res.xor_shifted(c3, 3 * k * word_bits);
    res.xor_shifted(v4, 4 * k * word_bits);
    return res;
}

}  // namespace

const MulThresholds& default_thresholds() { return g_default_thresholds; }

void set_default_thresholds(const MulThresholds& t) {
    if (!t.valid()) throw std::invalid_argument("set_default_thresholds: invalid thresholds");
    g_default_thresholds = t;
}

Gf2Poly mul_karatsuba(const Gf2Poly& a, const Gf2Poly& b) {
    return kara_rec(a, b, default_thresholds());
}
Gf2Poly mul_karatsuba(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    return kara_rec(a, b, t);
}

Gf2Poly mul_toom3(const Gf2Poly& a, const Gf2Poly& b) {
    return toom3_rec(a, b, default_thresholds());
}
Gf2Poly mul_toom3(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    return toom3_rec(a, b, t);
}

Gf2Poly mul_fft(const Gf2Poly& a, const Gf2Poly& b) {
    return mul_fft(a, b, default_thresholds());
}

Gf2Poly mul_fft(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t need = a.bit_length() + b.bit_length() - 1;
    unsigned level = 0;
    std::size_t T = 1;
    while (2 * T < need) {
        T *= 3;
        ++level;
    }
    // The product fits strictly inside the ring, so the wrap never fires and
    // the ring product is the plain product.
    const fft::TriadicRing ring(level);
    return fft::mul_in_ring(ring, a, b, t);
}

MulDispatchCounts& mul_dispatch_counts() {
    thread_local MulDispatchCounts counts;
    return counts;
}

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) { return mul(a, b, default_thresholds()); }

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t) {
    const std::size_t n = std::min(a.word_count(), b.word_count());
    auto& counts = mul_dispatch_counts();
    if (n < t.karatsuba_min) {
        ++counts.classical;
        return mul_classical(a, b);
    }
    if (n < t.toom3_min) {
        ++counts.karatsuba;
        return kara_rec(a, b, t);
    }
    if (n < t.fft_min) {
        ++counts.toom3;
        return toom3_rec(a, b, t);
    }
    ++counts.fft;
    return mul_fft(a, b, t);
}

namespace {

using Clock = std::chrono::steady_clock;

// Median-of-5 wall-clock timing with one warmup round.
double time_algo(const Gf2Poly& a, const Gf2Poly& b,
                 Gf2Poly (*algo)(const Gf2Poly&, const Gf2Poly&, const MulThresholds&),
                 const MulThresholds& t) {
    volatile std::size_t sink = 0;
    sink = sink + algo(a, b, t).word_count();
    std::array<double, 5> samples{};
    for (auto& s : samples) {
        const auto t0 = Clock::now();
        sink = sink + algo(a, b, t).word_count();
        const auto t1 = Clock::now();
        s = std::chrono::duration<double>(t1 - t0).count();
    }
    std::sort(samples.begin(), samples.end());
    (void)sink;
    return samples[2];
}

}  // namespace

MulThresholds tune_thresholds(std::size_t max_degree) {
    const MulThresholds fallback{};
    if (max_degree < (1u << 10)) return fallback;

    std::mt19937_64 rng(0xC0FFEE);
    const std::size_t max_words = max_degree / word_bits;
    std::vector<std::size_t> grid;
    for (std::size_t n = 2; n <= max_words; n *= 2) grid.push_back(n);
    if (grid.empty()) return fallback;

    std::size_t kara_min = 0, toom3_min = 0, fft_min = 0;
    const MulThresholds work{};  // recursion bases while probing
    for (std::size_t n : grid) {
        const Gf2Poly a = random_poly(rng, n * word_bits);
        const Gf2Poly b = random_poly(rng, n * word_bits);
        const double tc = time_algo(
            a, b, +[](const Gf2Poly& x, const Gf2Poly& y, const MulThresholds&) {
                return mul_classical(x, y);
            },
            work);
        const double tk = time_algo(a, b, &mul_karatsuba, work);
        const double t3 = time_algo(a, b, &mul_toom3, work);
        const double tf = time_algo(a, b, &mul_fft, work);
        if (!(tc > 0) || !(tk > 0) || !(t3 > 0) || !(tf > 0)) return fallback;
        if (kara_min == 0 && tk < tc) kara_min = n;
        if (toom3_min == 0 && t3 < std::min(tc, tk)) toom3_min = n;
        if (fft_min == 0 && tf < std::min({tc, tk, t3})) fft_min = n;
    }

    MulThresholds out;
    out.karatsuba_min = kara_min ? kara_min : fallback.karatsuba_min;
    out.toom3_min = std::max(out.karatsuba_min, toom3_min ? toom3_min : fallback.toom3_min);
    out.fft_min = std::max(out.toom3_min, fft_min ? fft_min : fallback.fft_min);
    return out.valid() ? out : fallback;
}

std::optional<MulThresholds> read_thresholds_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    MulThresholds t;
    bool seen_k = false, seen_t = false, seen_f = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const unsigned long long value = std::stoull(line.substr(eq + 1));
        if (key == "karatsuba_min") {
            t.karatsuba_min = value;
            seen_k = true;
        } else if (key == "toom3_min") {
            t.toom3_min = value;
            seen_t = true;
        } else if (key == "fft_min") {
            t.fft_min = value;
            seen_f = true;
        }
    }
    if (!(seen_k && seen_t && seen_f) || !t.valid()) return std::nullopt;
    return t;
}

void write_thresholds_file(const std::string& path, const MulThresholds& t) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write tuning file: " + path);
    out << "karatsuba_min=" << t.karatsuba_min << '\n'
        << "toom3_min=" << t.toom3_min << '\n'
        << "fft_min=" << t.fft_min << '\n';
}

}  // namespace gf2x
