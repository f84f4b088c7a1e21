#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "gf2x/ddf.hpp"
#include "gf2x/gcd.hpp"
#include "gf2x/modular.hpp"
#include "gf2x/poly.hpp"
#include "oracles.hpp"

using namespace gf2x;

namespace {

// Full factor count by plain per-degree DDF, independent of swan_parity.
std::size_t factor_count(const Trinomial& t) {
    Gf2Poly rest = t.to_poly();
    std::size_t count = 0;
    Gf2Poly frob = divrem(Gf2Poly::x(), rest).second;
    for (std::size_t d = 1; rest.bit_length() > 1; ++d) {
        if (2 * d > *rest.degree()) {
            ++count;
            break;
        }
        frob = square_mod(frob, rest);
        const Gf2Poly g = gcd_euclid(frob + divrem(Gf2Poly::x(), rest).second, rest);
        if (g.bit_length() > 1) {
            count += *g.degree() / d;
            rest = divrem(rest, g).first;
            if (rest.bit_length() > 1) frob = divrem(frob, rest).second;
        }
    }
    return count;
}

bool same_result(const FactorResult& a, const FactorResult& b) {
    return a.verdict == b.verdict && a.d == b.d && a.factor == b.factor;
}

}  // namespace

TEST_CASE("inner table initial values match the closed forms") {
    const ModContext ctx(Trinomial(101, 7), default_thresholds());
    const InnerTable m3 = init_inner_table(ctx, 3);
    CHECK(m3.sigma(1) == Gf2Poly::from_hex("16"));  // x^4+x^2+x
    CHECK(m3.sigma(2) == Gf2Poly::from_hex("68"));  // x^6+x^5+x^3
    CHECK(m3.sigma(3) == Gf2Poly::from_hex("80"));  // x^7
    CHECK(m3.level() == 0);

    const InnerTable m1 = init_inner_table(ctx, 1);
    CHECK(m1.sigma(1) == Gf2Poly::x());

    const InnerTable m2 = init_inner_table(ctx, 2);
    CHECK(m2.sigma(1) == Gf2Poly::from_hex("6"));  // weight-1 indices {1, 2}
    CHECK(m2.sigma(2) == Gf2Poly::monomial(3));    // weight-2 index {3}

    // small modulus: the same table arrives reduced
    const ModContext small(Trinomial(5, 2), default_thresholds());
    const InnerTable m3s = init_inner_table(small, 3);
    CHECK(m3s.sigma(3) == small.reduce(Gf2Poly::monomial(7)));

    CHECK_THROWS_AS(init_inner_table(ctx, 0), std::invalid_argument);
    CHECK_THROWS_AS(init_inner_table(ctx, 65), std::invalid_argument);
}

TEST_CASE("pascal recurrence equals direct enumeration of the weight sums") {
    // big modulus first: no reduction interferes up to m = 12
    const ModContext big(Trinomial(4099, 2), default_thresholds());
    const ModContext small(Trinomial(17, 3), default_thresholds());
    for (unsigned m = 1; m <= 12; ++m) {
        const InnerTable tab = init_inner_table(big, m);
        const InnerTable tabs = init_inner_table(small, m);
        for (unsigned j = 1; j <= m; ++j) {
            Gf2Poly enumerated;
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k)
                if (static_cast<unsigned>(std::popcount(k)) == j)
                    enumerated.flip_coefficient(static_cast<std::size_t>(k));
            CHECK(tab.sigma(j) == enumerated);
            CHECK(tabs.sigma(j) == divrem(enumerated, small.modulus()).second);
        }
    }
}

TEST_CASE("interval polynomial: product form equals assembled sum form") {
    std::mt19937_64 rng(64);
    const ModContext ctx(Trinomial(211, 8), default_thresholds());
    for (unsigned m = 1; m <= 8; ++m) {
        for (int trial = 0; trial < 4; ++trial) {
            const std::size_t d = rng() % 40;
            InnerTable tab = init_inner_table(ctx, m);
            tab.fast_forward(ctx, d);
            const Gf2Poly sum_form = tab.assemble(ctx);

            Gf2Poly power = ctx.frobenius_power(d);  // X = x^(2^d)
            Gf2Poly product = Gf2Poly::one();
            for (unsigned j = 0; j < m; ++j) {
                product = ctx.mod_mul(product, power + Gf2Poly::x());
                power = ctx.mod_square(power);
            }
            CHECK(sum_form == product);
        }
    }
}

TEST_CASE("frobenius advance equals direct initialization at the new level") {
    const ModContext ctx(Trinomial(89, 38), default_thresholds());
    for (unsigned m : {2u, 3u, 5u}) {
        InnerTable advanced = init_inner_table(ctx, m);
        advanced.fast_forward(ctx, 7);
        advanced.advance(ctx);

        InnerTable direct = init_inner_table(ctx, m);
        direct.fast_forward(ctx, 7 + m);
        CHECK(advanced.level() == direct.level());
        for (unsigned j = 1; j <= m; ++j) CHECK(advanced.sigma(j) == direct.sigma(j));
        CHECK(advanced.assemble(ctx) == direct.assemble(ctx));
    }
}

TEST_CASE("advance_inner costs m^2 squarings and no multiplications") {
    OpCounters counters;
    const ModContext ctx(Trinomial(1009, 4), default_thresholds(), &counters);
    for (unsigned m : {1u, 3u, 20u}) {
        InnerTable tab = init_inner_table(ctx, m);
        const OpCounters before = counters;
        (void)advance_inner(ctx, tab);
        const OpCounters delta = counters.delta_since(before);
        CHECK(delta.squarings == std::uint64_t{m} * m);
        CHECK(delta.modmuls == 0);
    }
    // m = 1 degenerates to the unblocked DDF polynomial x^(2^d) + x
    InnerTable tab = init_inner_table(ctx, 1);
    tab.fast_forward(ctx, 5);
    CHECK(tab.assemble(ctx) == ctx.frobenius_power(5) + Gf2Poly::x());
}

TEST_CASE("sieve examples") {
    OpCounters counters;
    const auto hit5 = sieve_small_factors(Trinomial(5, 1), &counters);
    REQUIRE(hit5.has_value());
    CHECK(hit5->first == 2);
    CHECK(hit5->second == Gf2Poly::from_hex("7"));
    CHECK(counters.sieve_gcds > 0);

    CHECK(!sieve_small_factors(Trinomial(7, 1)).has_value());

    // r = 1 mod 3 with s = 2: divisible by x^2+x+1
    const auto hit7 = sieve_small_factors(Trinomial(7, 2));
    REQUIRE(hit7.has_value());
    CHECK(hit7->first == 2);
    CHECK(hit7->second == Gf2Poly::from_hex("7"));

    CHECK(sieve_bound(5) == 2);
    CHECK(sieve_bound(7) == 2);
    CHECK(sieve_bound(17) == 3);
    CHECK(sieve_bound(1279) == 6);

    // every sieve hit is a genuine minimal factor (oracle cross-check)
    std::mt19937_64 rng(3);
    for (std::size_t r = 5; r <= 64; ++r) {
        for (std::size_t s = 1; s < r; ++s) {
            if (r % 2 == 0 && s % 2 == 0) continue;
            const Trinomial t(r, s);
            const auto hit = sieve_small_factors(t);
            const FactorResult truth = naive_ddf_oracle(t, rng);
            if (hit) {
                CHECK(truth.verdict == FactorResult::Verdict::Factor);
                CHECK(hit->first == truth.d);
                CHECK(hit->second == truth.factor);
            } else if (truth.verdict == FactorResult::Verdict::Factor) {
                CHECK(truth.d > sieve_bound(r));
            }
        }
    }
}

TEST_CASE("swan parity matches brute-force factor counts") {
    for (std::size_t r = 3; r <= 100; ++r) {
        for (std::size_t s = 1; s < r; ++s) {
            if (r % 2 == 0 && s % 2 == 0) continue;
            const Trinomial t(r, s);
            const Parity expect = factor_count(t) % 2 == 0 ? Parity::Even : Parity::Odd;
            REQUIRE(swan_parity(t) == expect);
        }
    }
    // named examples
    CHECK(swan_parity(Trinomial(7, 1)) == Parity::Odd);   // irreducible
    CHECK(swan_parity(Trinomial(5, 2)) == Parity::Odd);   // the s = 2 exception
    CHECK(swan_parity(Trinomial(11, 4)) == Parity::Even); // r = 3 mod 8, s != 2, r-2
}

TEST_CASE("squarefree check") {
    CHECK(squarefree_check(Trinomial(5, 1)));
    CHECK(squarefree_check(Trinomial(9, 4)));  // r odd, s even: derivative monomial
    for (std::size_t r = 3; r <= 200; ++r) {
        for (std::size_t s = 1; s < r; ++s) {
            if (r % 2 == 0 && s % 2 == 0) continue;
            // independent oracle: derivative over coefficient vectors
            testref::Bits p(r + 1, 0);
            p[r] = p[s] = p[0] = 1;
            testref::Bits dp(r, 0);
            for (std::size_t i = 1; i <= r; ++i)
                if (p[i] && i % 2 == 1) dp[i - 1] = 1;
            const bool oracle = testref::gcd(p, testref::trim(dp)).size() == 1;
            REQUIRE(squarefree_check(Trinomial(r, s)) == oracle);
        }
    }
}

TEST_CASE("naive oracle fixed examples") {
    std::mt19937_64 rng(1);
    const FactorResult r5 = naive_ddf_oracle(Trinomial(5, 1), rng);
    CHECK(r5.verdict == FactorResult::Verdict::Factor);
    CHECK(r5.d == 2);
    CHECK(r5.factor == Gf2Poly::from_hex("7"));
    CHECK(divrem(Trinomial(5, 1).to_poly(), r5.factor).second.is_zero());

    CHECK(naive_ddf_oracle(Trinomial(7, 1), rng).verdict ==
          FactorResult::Verdict::Irreducible);
}

TEST_CASE("equal degree splitting") {
    std::mt19937_64 rng(606);
    const Gf2Poly f1 = Gf2Poly::from_hex("b"), f2 = Gf2Poly::from_hex("d");

    auto single = equal_degree_split(f1, 3, rng);
    CHECK(single == std::vector<Gf2Poly>{f1});

    auto pair = equal_degree_split(mul(f1, f2), 3, rng);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == f1);  // x^3+x+1 sorts before x^3+x^2+1
    CHECK(pair[1] == f2);

    auto one2 = equal_degree_split(Gf2Poly::from_hex("7"), 2, rng);
    CHECK(one2 == std::vector<Gf2Poly>{Gf2Poly::from_hex("7")});

    CHECK_THROWS_AS(equal_degree_split(mul(f1, f2), 4, rng), std::invalid_argument);

    // all irreducibles of one degree multiplied together split back exactly
    for (std::size_t d : {2u, 3u, 4u, 5u}) {
        auto irr = testref::irreducibles_of_degree(d);
        Gf2Poly product = Gf2Poly::one();
        for (const auto& f : irr) product = mul(product, f);
        auto parts = equal_degree_split(product, d, rng);
        REQUIRE(parts.size() == irr.size());
        std::sort(irr.begin(), irr.end());
        CHECK(parts == irr);
        Gf2Poly back = Gf2Poly::one();
        for (const auto& f : parts) {
            CHECK(f.degree() == d);
            back = mul(back, f);
        }
        CHECK(back == product);
    }
}

TEST_CASE("block schedule shape") {
    const BlockSchedule sched = BlockSchedule::plan(Trinomial(1279, 216), 20, 1, Parity::Even);
    CHECK(sched.d_start == sieve_bound(1279) + 1);
    CHECK(sched.d_max == 639);
    CHECK(sched.m == 20);
    CHECK(sched.k0 == 1);

    // swan-odd shrinks the range
    CHECK(BlockSchedule::plan(Trinomial(1279, 216), 20, 1, Parity::Odd).d_max == 426);

    // tiny degrees clamp m so no tested degree can reach r
    const BlockSchedule tiny = BlockSchedule::plan(Trinomial(7, 1), 0, 1, Parity::Even);
    CHECK(tiny.d_max + tiny.m <= 7);
    CHECK(tiny.m >= 1);
}

TEST_CASE("counter contract for clean outer blocks") {
    OpCounters counters;
    const ModContext ctx(Trinomial(2003, 6), default_thresholds(), &counters);
    for (auto [k, m] : {std::pair<unsigned, unsigned>{4, 20}, {3, 5}, {1, 7}}) {
        InnerTable tab = init_inner_table(ctx, m);
        tab.fast_forward(ctx, sieve_bound(2003) + 1);
        const OpCounters before = counters;
        (void)run_outer_block(ctx, tab, k);
        const OpCounters delta = counters.delta_since(before);
        CHECK(delta.gcds == 1);
        CHECK(delta.modmuls == k - 1);
        CHECK(delta.squarings == std::uint64_t{k} * m * m);
    }
}

TEST_CASE("backtrack localizes the minimal degree and its full product") {
    // hits land in the 1st, 2nd and later inner intervals respectively;
    // compare against the directly computed product of all minimal-degree
    // factors gcd(x^(2^d) + x, P)
    std::mt19937_64 rng(22);
    for (auto [r, s, m] : {std::tuple<std::size_t, std::size_t, unsigned>{41, 6, 8},
                           {63, 8, 4},
                           {61, 24, 5},
                           {62, 3, 6}}) {
        const Trinomial t(r, s);
        const FactorResult truth = naive_ddf_oracle(t, rng);
        REQUIRE(truth.verdict == FactorResult::Verdict::Factor);
        REQUIRE(truth.d >= sieve_bound(r) + 1);

        OpCounters counters;
        const ModContext ctx(t, default_thresholds(), &counters);
        InnerTable tab = init_inner_table(ctx, m);
        tab.fast_forward(ctx, sieve_bound(r) + 1);
        InnerTable snapshot = tab;
        const Gf2Poly g = run_outer_block(ctx, tab, 5);
        REQUIRE(g.bit_length() > 1);

        const auto [d, product] = backtrack(ctx, snapshot, 5);
        CHECK(d == truth.d);
        const Gf2Poly expect_product =
            gcd_euclid(ctx.frobenius_power(d) + Gf2Poly::x(), ctx.modulus());
        CHECK(product == expect_product);
    }
}

TEST_CASE("synthetic: two factor degrees in one block returns the smaller") {
    // x^20 + x^17 + 1 = (deg 3)(deg 17)? look for any (r, s) whose two
    // smallest degrees land inside one 8-wide block starting past the sieve.
    std::mt19937_64 rng(77);
    bool exercised = false;
    for (std::size_t r = 24; r <= 60 && !exercised; ++r) {
        for (std::size_t s = 1; s < r / 2; ++s) {
            if (r % 2 == 0 && s % 2 == 0) continue;
            const Trinomial t(r, s);
            if (sieve_small_factors(t).has_value()) continue;
            const FactorResult truth = naive_ddf_oracle(t, rng);
            if (truth.verdict != FactorResult::Verdict::Factor) continue;
            const std::size_t d1 = truth.d;
            // does a second factor degree live within [d1, d1+8)?
            const ModContext probe(t, default_thresholds());
            Gf2Poly rest = divrem(t.to_poly(),
                                  gcd_euclid(probe.frobenius_power(d1) + Gf2Poly::x(),
                                             t.to_poly()))
                               .first;
            if (rest.bit_length() <= 1) continue;
            bool second_nearby = false;
            for (std::size_t d2 = d1 + 1; d2 < d1 + 8 && 2 * d2 <= r; ++d2) {
                Gf2Poly fr = divrem(Gf2Poly::x(), rest).second;
                for (std::size_t i = 0; i < d2; ++i) fr = square_mod(fr, rest);
                if (gcd_euclid(fr + divrem(Gf2Poly::x(), rest).second, rest).bit_length() > 1) {
                    second_nearby = true;
                    break;
                }
            }
            if (!second_nearby) continue;

            OpCounters counters;
            const ModContext ctx(t, default_thresholds(), &counters);
            InnerTable tab = init_inner_table(ctx, 8);
            tab.fast_forward(ctx, sieve_bound(r) + 1);
            InnerTable snapshot = tab;
            const Gf2Poly g = run_outer_block(ctx, tab, 4);
            REQUIRE(g.bit_length() > 1);
            const auto [d, product] = backtrack(ctx, snapshot, 4);
            CHECK(d == d1);  // only the smaller degree comes back
            for (const Gf2Poly& f : equal_degree_split(product, d, rng))
                CHECK(f.degree() == d1);
            exercised = true;
            break;
        }
    }
    CHECK(exercised);
}

TEST_CASE("run_ddf matches the oracle across a small exhaustive sweep") {
    std::mt19937_64 rng_o(500), rng_e(501);
    for (std::size_t r = 4; r <= 80; ++r) {
        for (std::size_t s = 1; s <= r / 2; ++s) {
            if (r % 2 == 0 && s % 2 == 0) continue;
            const Trinomial t(r, s);
            const FactorResult truth = naive_ddf_oracle(t, rng_o);
            const FactorResult engine = smallest_factor(t, default_thresholds(), 0, 1, rng_e);
            REQUIRE(same_result(truth, engine));
            // alternate schedule shapes must not change the answer
            const FactorResult engine2 = smallest_factor(t, default_thresholds(), 3, 2, rng_e);
            REQUIRE(same_result(truth, engine2));
        }
    }
}

TEST_CASE("factor results carry valid invariants") {
    std::mt19937_64 rng(808);
    for (auto [r, s] : {std::pair<std::size_t, std::size_t>{17, 3}, {33, 13}, {91, 2}}) {
        const Trinomial t(r, s);
        const FactorResult res = smallest_factor(t, default_thresholds(), 0, 1, rng);
        if (res.verdict == FactorResult::Verdict::Factor) {
            CHECK(res.factor.degree() == res.d);
            CHECK(divrem(t.to_poly(), res.factor).second.is_zero());
            CHECK(is_irreducible(res.factor));
            // minimality: no factor of smaller degree
            const ModContext ctx(t, default_thresholds());
            Gf2Poly frob = Gf2Poly::x();
            for (std::size_t d = 1; d < res.d; ++d) {
                frob = ctx.mod_square(frob);
                CHECK(gcd_euclid(frob + Gf2Poly::x(), ctx.modulus()).is_one());
            }
        }
    }
}
