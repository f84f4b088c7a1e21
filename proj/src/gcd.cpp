#include "gf2x/gcd.hpp"

#include <tuple>
#include <stdexcept>
#include <utility>

namespace gf2x {

namespace {

thread_local GcdStats g_gcd_stats;

// 2x2 matrix over GF(2)[x] acting on remainder pairs. The identity is kept
// symbolic so trivial reductions never pay for polynomial products.
struct Mat22 {
    bool identity = true;
    Gf2Poly m00, m01, m10, m11;

    static Mat22 I() { return {}; }

    // One Euclid step (a, b) -> (b, a + q*b) is [[0,1],[1,q]]; compose that
    // step on the left of *this.
    void apply_step(const Gf2Poly& q, const MulThresholds& th) {
        if (identity) {
            identity = false;
            m00 = Gf2Poly::zero();
            m01 = Gf2Poly::one();
            m10 = Gf2Poly::one();
            m11 = q;
            return;
        }
        Gf2Poly n10 = m00 + mul(q, m10, th);
        Gf2Poly n11 = m01 + mul(q, m11, th);
        m00 = std::move(m10);
        m01 = std::move(m11);
        m10 = std::move(n10);
        m11 = std::move(n11);
    }

    // *this = other * *this.
    void compose_left(const Mat22& other, const MulThresholds& th) {
        if (other.identity) return;
        if (identity) {
            *this = other;
            return;
        }
        Gf2Poly n00 = mul(other.m00, m00, th) + mul(other.m01, m10, th);
        Gf2Poly n01 = mul(other.m00, m01, th) + mul(other.m01, m11, th);
        Gf2Poly n10 = mul(other.m10, m00, th) + mul(other.m11, m10, th);
        Gf2Poly n11 = mul(other.m10, m01, th) + mul(other.m11, m11, th);
        m00 = std::move(n00);
        m01 = std::move(n01);
        m10 = std::move(n10);
        m11 = std::move(n11);
    }

    std::pair<Gf2Poly, Gf2Poly> apply(const Gf2Poly& a, const Gf2Poly& b,
                                      const MulThresholds& th) const {
        if (identity) return {a, b};
        return {mul(m00, a, th) + mul(m01, b, th), mul(m10, a, th) + mul(m11, b, th)};
    }
};

// Budget contract shared by the iterative base and the recursion: starting
// from (r0, r1) with deg r0 > deg r1, apply Euclid steps while the trailing
// element still has degree >= deg(r0 at entry) - k. On return
// deg r0 >= n0 - k and (r1 = 0 or deg r1 < n0 - k).
Mat22 reduce_iterative(Gf2Poly& r0, Gf2Poly& r1, std::size_t k, const MulThresholds& th) {
    Mat22 acc = Mat22::I();
    const std::size_t n0 = *r0.degree();
    while (!r1.is_zero() && *r1.degree() + k >= n0) {
        auto [q, rem] = divrem(r0, r1);
        acc.apply_step(q, th);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return acc;
}

struct HgcdContext {
    const MulThresholds& th;
    std::size_t base_degree;
    std::size_t depth = 0;
};

// Divide-and-conquer version of reduce_iterative. The first quotients of a
// remainder sequence depend only on the top coefficients of the operands:
// for a budget of d it suffices to keep the top 2d+2, so each half of the
// budget is resolved on truncated operands and replayed on the full pair via
// the accumulated matrix.
Mat22 hgcd_reduce(HgcdContext& ctx, Gf2Poly& r0, Gf2Poly& r1, std::size_t k) {
    if (r1.is_zero()) return Mat22::I();
    const std::size_t n0 = *r0.degree();
    if (*r1.degree() + k < n0) return Mat22::I();
    if (n0 <= ctx.base_degree || k <= 1) return reduce_iterative(r0, r1, k, ctx.th);

    struct DepthGuard {
        HgcdContext& c;
        explicit DepthGuard(HgcdContext& ctx_) : c(ctx_) {
            ++c.depth;
            g_gcd_stats.max_recursion_depth =
                std::max(g_gcd_stats.max_recursion_depth, c.depth);
        }
        ~DepthGuard() { --c.depth; }
    } guard(ctx);

    const Gf2Poly orig0 = r0, orig1 = r1;

    const std::size_t d = (k + 1) / 2;
    {
        const std::size_t cut = n0 > 2 * d + 1 ? n0 - (2 * d + 1) : 0;
        Gf2Poly s = r0 >> cut;
        Gf2Poly t = r1 >> cut;
        Mat22 acc = hgcd_reduce(ctx, s, t, d);
        std::tie(r0, r1) = acc.apply(r0, r1, ctx.th);

        // A malformed pair means the truncated run diverged from the true
        // quotient sequence; redo the whole level iteratively. Tests assert
        // this counter stays at zero.
        if (r0.is_zero() || (!r1.is_zero() && *r1.degree() >= *r0.degree()) ||
            *r0.degree() + d < n0) {
            ++g_gcd_stats.safety_fallbacks;
            r0 = orig0;
            r1 = orig1;
            return reduce_iterative(r0, r1, k, ctx.th);
        }

        if (r1.is_zero() || *r1.degree() + k < n0) return acc;

        auto [q, rem] = divrem(r0, r1);
        acc.apply_step(q, ctx.th);
        r0 = std::move(r1);
        r1 = std::move(rem);
        if (r1.is_zero() || *r1.degree() + k < n0) return acc;

        // Remaining budget after descending from n0 to the new head.
        const std::size_t spent = n0 - *r0.degree();
        const std::size_t k2 = spent <= k ? k - spent : 0;
        const std::size_t m0 = *r0.degree();
        const std::size_t cut2 = m0 > 2 * k2 + 1 ? m0 - (2 * k2 + 1) : 0;
        Gf2Poly s2 = r0 >> cut2;
        Gf2Poly t2 = r1 >> cut2;
        Mat22 tail = hgcd_reduce(ctx, s2, t2, k2);
        std::tie(r0, r1) = tail.apply(r0, r1, ctx.th);
        acc.compose_left(tail, ctx.th);
        return acc;
    }
}

}  // namespace

Gf2Poly gcd_euclid(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both inputs are zero");
    Gf2Poly r0 = a, r1 = b;
    if (r0.bit_length() < r1.bit_length()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Gf2Poly rem = divrem(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return r0;
}

Gf2Poly gcd_fast(const Gf2Poly& a, const Gf2Poly& b) {
    return gcd_fast(a, b, default_thresholds());
}

Gf2Poly gcd_fast(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& th,
                 std::size_t base_degree) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both inputs are zero");
    g_gcd_stats = GcdStats{};
    Gf2Poly r0 = a, r1 = b;
    if (r0.bit_length() < r1.bit_length()) std::swap(r0, r1);

    HgcdContext ctx{th, base_degree};
    while (!r1.is_zero()) {
        if (r0.bit_length() == r1.bit_length()) {
            r1 += r0;  // equal degrees: quotient is exactly 1
            continue;
        }
        const std::size_t n0 = *r0.degree();
        if (n0 <= base_degree) return gcd_euclid(r0, r1);
        const std::size_t budget = (n0 + 1) / 2;
        if (*r1.degree() + budget < n0) {
            Gf2Poly rem = divrem(r0, r1).second;
            r0 = std::move(r1);
            r1 = std::move(rem);
            continue;
        }
        hgcd_reduce(ctx, r0, r1, budget);
    }
    return r0;
}

const GcdStats& last_gcd_stats() { return g_gcd_stats; }

}  // namespace gf2x
