// Smallest-factor search for square-free trinomials over GF(2).
//
// Degrees below the sieve bound are handled by reducing the trinomial mod
// x^D + 1, D = 2^d - 1. Above it, distinct-degree factorization runs with
// two levels of blocking: the outer level trades GCDs for modular products,
// the inner level trades products for squarings via the weight-indexed table
// sigma[j] = s_{j,m}(x^(2^d)) mod P, which is closed under squaring.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gf2x/counters.hpp"
#include "gf2x/poly.hpp"
#include "gf2x/trinomial.hpp"

namespace gf2x {

/// Parity of the number of irreducible factors, from the trinomial case
/// analysis of Swan's theorem. An odd count means testing degrees up to r/3
/// suffices for an irreducibility proof.
enum class Parity { Odd, Even };
Parity swan_parity(const Trinomial& t);

/// gcd(P, P') = 1. True for every valid trinomial (r, s not both even); the
/// check exists to assert the square-free precondition rather than trust it.
bool squarefree_check(const Trinomial& t);

/// Largest degree covered by the sieve: the smallest d with 4^d >= r.
std::size_t sieve_bound(std::size_t r);

/// Scan d = 2..sieve_bound(r) via gcd(x^(r mod D) + x^(s mod D) + 1, x^D + 1),
/// D = 2^d - 1. Returns the smallest factor degree with the least factor of
/// that degree, or nothing when no factor of degree <= sieve_bound exists.
std::optional<std::pair<std::size_t, Gf2Poly>> sieve_small_factors(
    const Trinomial& t, OpCounters* counters = nullptr);

/// The m+1 residues sigma[j] = s_{j,m}(x^(2^level)) mod P, j = 1..m
/// (s_{0,m} = 1 is implicit). Advancing the level by one squares every entry
/// once; the table is built by the Pascal-triangle recurrence
/// s_{j,m}(X) = s_{j,m-1}(X^2) + X s_{j-1,m-1}(X^2), never by enumerating
/// the 2^m terms of the defining sum.
class InnerTable {
public:
    static InnerTable init(const ModContext& ctx, unsigned m);

    unsigned m() const { return m_; }
    std::size_t level() const { return level_; }
    /// sigma[j], 1 <= j <= m.
    const Gf2Poly& sigma(unsigned j) const { return sigma_[j - 1]; }

    /// Square every entry until the table sits at x^(2^target).
    void fast_forward(const ModContext& ctx, std::size_t target_level);

    /// p_m(x^(2^level), x) = sum_{j=0..m} x^(m-j) sigma[j], assembled with m
    /// multiply-by-x steps; O(m r) bit operations, no counted work.
    Gf2Poly assemble(const ModContext& ctx) const;

    /// m squarings of each entry: level += m. Costs m^2 squarings.
    void advance(const ModContext& ctx);

private:
    unsigned m_ = 0;
    std::size_t level_ = 0;
    std::vector<Gf2Poly> sigma_;
};

InnerTable init_inner_table(const ModContext& ctx, unsigned m);

/// One inner step: the interval polynomial for degrees
/// [tab.level, tab.level + m), after which the table advances m levels.
Gf2Poly advance_inner(const ModContext& ctx, InnerTable& tab);

/// Outer blocking plan. Block j = 1, 2, ... spans k0*j inner blocks, so the
/// block boundaries follow a quadratic polynomial in j; the final block is
/// truncated to overshoot d_max by less than one inner block.
struct BlockSchedule {
    unsigned m = 20;
    unsigned k0 = 1;
    std::size_t d_start = 0;
    std::size_t d_max = 0;

    /// m_request = 0 picks the default (20) before safety clamps.
    static BlockSchedule plan(const Trinomial& t, unsigned m_request, unsigned k0,
                              Parity parity);
};

struct FactorResult {
    enum class Verdict { Irreducible, Factor };
    Verdict verdict = Verdict::Irreducible;
    std::size_t d = 0;       // smallest factor degree, when Factor
    Gf2Poly factor;          // least factor of that degree
    OpCounters counters;

    bool operator==(const FactorResult&) const = default;
};

/// Execute one outer block of k inner steps against the current table:
/// accumulator = product of k interval polynomials, then one GCD with P.
/// A clean (non-final, miss) block costs exactly 1 gcd, k-1 modmuls and
/// k*m^2 squarings.
Gf2Poly run_outer_block(const ModContext& ctx, InnerTable& tab, unsigned k);

/// Replay a hit block at inner-step granularity from the saved table, then
/// degree by degree inside the hit interval with cheap arithmetic modulo the
/// extracted cofactor. Returns the minimal degree d and the product of all
/// degree-d factors. Throws std::logic_error if the replay disagrees with
/// the block gcd.
std::pair<std::size_t, Gf2Poly> backtrack(const ModContext& ctx, InnerTable table_snapshot,
                                          unsigned k);

/// Cantor-Zassenhaus splitting in characteristic 2: g must be a product of
/// distinct irreducibles of degree exactly d. Repeatedly splits with
/// gcd(Tr(u), g) for random u, Tr(u) = sum_{i<d} u^(2^i) mod g. Returns the
/// factors sorted ascending (coefficient string as integer, x^0 least
/// significant).
std::vector<Gf2Poly> equal_degree_split(const Gf2Poly& g, std::size_t d,
                                        std::mt19937_64& rng);

/// Blocked DDF over [sched.d_start, sched.d_max]. Preconditions: the
/// trinomial passed the sieve (no factor of degree <= sieve_bound) and is
/// square-free.
FactorResult run_ddf(const ModContext& ctx, const BlockSchedule& sched,
                     std::mt19937_64& rng);

/// Reference result by per-degree GCDs with no blocking, d = 1..r/2.
/// Quadratic; test and verification use only.
FactorResult naive_ddf_oracle(const Trinomial& t, std::mt19937_64& rng);

/// Sieve + Swan-gated blocked DDF, the full per-trinomial pipeline.
FactorResult smallest_factor(const Trinomial& t, const MulThresholds& thresholds,
                             unsigned m_request, unsigned k0, std::mt19937_64& rng);

}  // namespace gf2x
