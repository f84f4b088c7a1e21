#include "gf2x/ddf.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2x/gcd.hpp"
#include "gf2x/modular.hpp"

namespace gf2x {

Parity swan_parity(const Trinomial& t) {
    std::size_t r = t.r;
    std::size_t s = t.s;
    // Reciprocal trinomial has reciprocal factors, hence the same count;
    // normalize to the case with exactly one odd exponent.
    if (r % 2 == 1 && s % 2 == 1) s = r - s;

    bool even;
    if (r % 2 == 0) {
        // r even, s odd. r = 2s is special-cased as odd.
        even = (r != 2 * s) && (((r / 2) * s) % 4 <= 1);
    } else {
        // r odd, s even: the discriminant condition splits on s | 2r.
        const bool divides = (2 * r) % s == 0;
        const unsigned rm8 = r % 8;
        even = divides ? (rm8 == 1 || rm8 == 7) : (rm8 == 3 || rm8 == 5);
    }
    return even ? Parity::Even : Parity::Odd;
}

bool squarefree_check(const Trinomial& t) {
    // P' is x^(r-1), x^(s-1) or x^(s-1)(x^(r-s)+1) depending on parities.
    // Monomial parts never share a factor with P since P(0) = 1.
    if (t.r % 2 == 1 && t.s % 2 == 1) {
        Gf2Poly b = Gf2Poly::monomial(t.r - t.s);
        b.flip_coefficient(0);
        return gcd_fast(t.to_poly(), b).is_one();
    }
    return true;
}

std::size_t sieve_bound(std::size_t r) {
    std::size_t d = 1, pow = 4;
    while (pow < r) {
        pow *= 4;
        ++d;
    }
    return d;
}

std::optional<std::pair<std::size_t, Gf2Poly>> sieve_small_factors(const Trinomial& t,
                                                                   OpCounters* counters) {
    const Gf2Poly P = t.to_poly();
    const std::size_t bound = sieve_bound(t.r);
    for (std::size_t d = 2; d <= bound; ++d) {
        const std::size_t D = (std::size_t{1} << d) - 1;
        // x^(r mod D) + x^(s mod D) + 1; coinciding exponents cancel.
        Gf2Poly c;
        c.flip_coefficient(t.r % D);
        c.flip_coefficient(t.s % D);
        c.flip_coefficient(0);
        if (c.is_zero()) continue;

        Gf2Poly cyc = Gf2Poly::monomial(D);
        cyc.flip_coefficient(0);
        if (counters) ++counters->sieve_gcds;
        const Gf2Poly g = gcd_euclid(c, cyc);
        if (g.bit_length() <= 1) continue;

        // Every irreducible factor of g divides P, all of degree >= 2 (g is
        // coprime to x and x+1). Each degree below d came up clean earlier,
        // so the minimal degree inside g is located by a tiny DDF on g.
        Gf2Poly frob = Gf2Poly::x();
        for (std::size_t d0 = 1; d0 <= d; ++d0) {
            frob = square_mod(frob, g);
            const Gf2Poly h = gcd_euclid(frob + Gf2Poly::x(), g);
            if (h.bit_length() <= 1) continue;
            std::mt19937_64 split_rng(0x5eed0000u + d0);
            for (const Gf2Poly& f : equal_degree_split(h, d0, split_rng)) {
                if (divrem(P, f).second.is_zero()) return std::make_pair(d0, f);
            }
            throw std::logic_error("sieve: cofactor does not divide the trinomial");
        }
        throw std::logic_error("sieve: nontrivial gcd but no factor located");
    }
    return std::nullopt;
}

InnerTable InnerTable::init(const ModContext& ctx, unsigned m) {
    if (m < 1 || m > 64) throw std::invalid_argument("InnerTable: m out of range [1, 64]");
    InnerTable tab;
    tab.m_ = m;
    tab.level_ = 0;
    tab.sigma_.assign(m, Gf2Poly::zero());
    auto S = [&tab](unsigned j) -> Gf2Poly& { return tab.sigma_[j - 1]; };

    // Column col turns s_{j,col-1} into s_{j,col} in place, top weight down:
    // each entry is squared (argument x -> x^2) and feeds x times itself into
    // the entry above; the j=0 row contributes the final x.
    for (unsigned col = 1; col <= m; ++col) {
        for (unsigned i = col; i-- > 1;) {
            S(i) = ctx.mod_square(S(i));
            S(i + 1) += ctx.mul_by_x(S(i));
        }
        S(1) += Gf2Poly::x();
    }
    return tab;
}

void InnerTable::fast_forward(const ModContext& ctx, std::size_t target_level) {
    if (target_level < level_)
        throw std::invalid_argument("InnerTable::fast_forward: cannot rewind");
    for (auto& s : sigma_) {
        for (std::size_t i = level_; i < target_level; ++i) s = ctx.mod_square(s);
    }
    level_ = target_level;
}

Gf2Poly InnerTable::assemble(const ModContext& ctx) const {
    Gf2Poly c = Gf2Poly::one();
    for (unsigned j = 1; j <= m_; ++j) {
        c = ctx.mul_by_x(std::move(c));
        c += sigma_[j - 1];
    }
    return c;
}

void InnerTable::advance(const ModContext& ctx) {
    for (auto& s : sigma_) {
        for (unsigned i = 0; i < m_; ++i) s = ctx.mod_square(s);
    }
    level_ += m_;
}

InnerTable init_inner_table(const ModContext& ctx, unsigned m) {
    return InnerTable::init(ctx, m);
}

Gf2Poly advance_inner(const ModContext& ctx, InnerTable& tab) {
    Gf2Poly term = tab.assemble(ctx);
    tab.advance(ctx);
    return term;
}

BlockSchedule BlockSchedule::plan(const Trinomial& t, unsigned m_request, unsigned k0,
                                  Parity parity) {
    BlockSchedule s;
    s.k0 = k0 ? k0 : 1;
    s.d_start = sieve_bound(t.r) + 1;
    s.d_max = parity == Parity::Odd ? t.r / 3 : t.r / 2;
    // Overshoot past d_max is capped at m-1 degrees; keep every tested degree
    // strictly below r so gcd(x^(2^e)+x, P) can never pick up P itself.
    std::size_t m = m_request ? m_request : 20;
    const std::size_t cap = t.r > s.d_max + 1 ? t.r - s.d_max - 1 : 1;
    s.m = static_cast<unsigned>(std::clamp<std::size_t>(m, 1, std::min<std::size_t>(64, cap)));
    return s;
}

Gf2Poly run_outer_block(const ModContext& ctx, InnerTable& tab, unsigned k) {
    Gf2Poly acc;
    for (unsigned i = 0; i < k; ++i) {
        Gf2Poly term = advance_inner(ctx, tab);
        acc = i == 0 ? std::move(term) : ctx.mod_mul(acc, term);
    }
    if (ctx.counters()) ++ctx.counters()->gcds;
    return gcd_fast(acc, ctx.modulus(), ctx.thresholds());
}

std::pair<std::size_t, Gf2Poly> backtrack(const ModContext& ctx, InnerTable tab, unsigned k) {
    const Gf2Poly P = ctx.modulus();
    const unsigned m = tab.m();
    Gf2Poly acc;
    for (unsigned i = 0; i < k; ++i) {
        const std::size_t interval_start = tab.level();
        Gf2Poly term = advance_inner(ctx, tab);
        acc = i == 0 ? std::move(term) : ctx.mod_mul(acc, term);
        if (ctx.counters()) ++ctx.counters()->gcds;
        const Gf2Poly g = gcd_fast(acc, P, ctx.thresholds());
        if (g.bit_length() <= 1) continue;

        // Minimal degree sits in [interval_start, interval_start + m); walk
        // it degree by degree modulo the (small) cofactor g. The first hit is
        // the product of all factors of that degree: smaller degrees were
        // ruled out by the earlier clean gcds.
        Gf2Poly frob = Gf2Poly::x();
        for (std::size_t e = 0; e < interval_start; ++e) frob = square_mod(frob, g);
        for (std::size_t e = interval_start; e < interval_start + m; ++e) {
            if (ctx.counters()) ++ctx.counters()->gcds;
            const Gf2Poly h = gcd_euclid(frob + Gf2Poly::x(), g);
            if (h.bit_length() > 1) return {e, h};
            frob = square_mod(frob, g);
        }
        throw std::logic_error("backtrack: factor not localized inside the hit interval");
    }
    throw std::logic_error("backtrack: block replay disagrees with the block gcd");
}

std::vector<Gf2Poly> equal_degree_split(const Gf2Poly& g, std::size_t d,
                                        std::mt19937_64& rng) {
    if (g.bit_length() < 2 || d == 0 || *g.degree() % d != 0)
        throw std::invalid_argument("equal_degree_split: degree is not a multiple of d");

    std::vector<Gf2Poly> out;
    std::vector<Gf2Poly> work{g};
    while (!work.empty()) {
        Gf2Poly h = std::move(work.back());
        work.pop_back();
        if (*h.degree() == d) {
            out.push_back(std::move(h));
            continue;
        }
        // Trace map T(u) = u + u^2 + ... + u^(2^(d-1)) mod h lands in GF(2)
        // on each degree-d component, so gcd(T(u), h) splits h with
        // probability about 1/2 per random u.
        for (;;) {
            const Gf2Poly u = random_poly(rng, *h.degree());
            Gf2Poly term = u;
            Gf2Poly trace = u;
            for (std::size_t i = 1; i < d; ++i) {
                term = square_mod(term, h);
                trace += term;
            }
            if (trace.is_zero()) continue;
            const Gf2Poly f = gcd_euclid(trace, h);
            if (f.bit_length() > 1 && *f.degree() < *h.degree()) {
                work.push_back(divrem(h, f).first);
                work.push_back(f);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactorResult run_ddf(const ModContext& ctx, const BlockSchedule& sched,
                     std::mt19937_64& rng) {
    FactorResult res;
    if (sched.d_start <= sched.d_max) {
        InnerTable tab = InnerTable::init(ctx, sched.m);
        tab.fast_forward(ctx, sched.d_start);
        std::size_t cursor = sched.d_start;
        for (unsigned j = 1; cursor <= sched.d_max; ++j) {
            const std::size_t remaining = sched.d_max - cursor + 1;
            const std::size_t needed = (remaining + sched.m - 1) / sched.m;
            const unsigned k = static_cast<unsigned>(
                std::min<std::size_t>(static_cast<std::size_t>(sched.k0) * j, needed));
            InnerTable snapshot = tab;
            const Gf2Poly g = run_outer_block(ctx, tab, k);
            if (g.bit_length() > 1) {
                auto [d, product] = backtrack(ctx, std::move(snapshot), k);
                auto factors = equal_degree_split(product, d, rng);
                res.verdict = FactorResult::Verdict::Factor;
                res.d = d;
                res.factor = std::move(factors.front());
                break;
            }
            cursor += static_cast<std::size_t>(k) * sched.m;
        }
    }
    if (ctx.counters()) res.counters = *ctx.counters();
    return res;
}

FactorResult naive_ddf_oracle(const Trinomial& t, std::mt19937_64& rng) {
    OpCounters counters;
    const ModContext ctx(t, default_thresholds(), &counters);
    const Gf2Poly P = ctx.modulus();
    const Gf2Poly x = Gf2Poly::x();
    FactorResult res;
    Gf2Poly frob = x;
    for (std::size_t d = 1; d <= t.r / 2; ++d) {
        frob = ctx.mod_square(frob);
        ++counters.gcds;
        const Gf2Poly g = gcd_euclid(frob + x, P);
        if (g.bit_length() > 1) {
            auto factors = equal_degree_split(g, d, rng);
            res.verdict = FactorResult::Verdict::Factor;
            res.d = d;
            res.factor = std::move(factors.front());
            break;
        }
    }
    res.counters = counters;
    return res;
}

FactorResult smallest_factor(const Trinomial& t, const MulThresholds& thresholds,
                             unsigned m_request, unsigned k0, std::mt19937_64& rng) {
    OpCounters counters;
    const ModContext ctx(t, thresholds, &counters);
    if (!squarefree_check(t))
        throw std::logic_error("smallest_factor: trinomial is not square-free");
    if (auto hit = sieve_small_factors(t, &counters)) {
        FactorResult res;
        res.verdict = FactorResult::Verdict::Factor;
        res.d = hit->first;
        res.factor = std::move(hit->second);
        res.counters = counters;
        return res;
    }
    const BlockSchedule sched = BlockSchedule::plan(t, m_request, k0, swan_parity(t));
    return run_ddf(ctx, sched, rng);
}

}  // namespace gf2x
