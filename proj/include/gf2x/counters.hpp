#pragma once

#include <cstdint>

namespace gf2x {

/// Operation counts for the factorization cost model. Injected into a
/// ModContext; never global. Monotone non-decreasing within one run.
struct OpCounters {
    std::uint64_t squarings = 0;
    std::uint64_t modmuls = 0;
    std::uint64_t gcds = 0;
    std::uint64_t sieve_gcds = 0;

    OpCounters delta_since(const OpCounters& earlier) const {
        return {squarings - earlier.squarings, modmuls - earlier.modmuls,
                gcds - earlier.gcds, sieve_gcds - earlier.sieve_gcds};
    }
};

}  // namespace gf2x
