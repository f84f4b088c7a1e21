// Batch driver: enumerate all trinomials of one degree, factor them in
// parallel with checkpointing, and report the smallest-factor statistics.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gf2x/certificate.hpp"
#include "gf2x/mul.hpp"

namespace gf2x {

struct SearchConfig {
    std::size_t r = 0;
    std::size_t s_min = 1;
    std::size_t s_max = 0;  // 0: full range up to r/2
    unsigned workers = 1;
    unsigned m = 0;   // 0: default inner block length
    unsigned k0 = 1;  // outer growth coefficient
    std::uint64_t seed = 1;
    std::string certificate_path;  // empty: in-memory only, no checkpointing
    std::string tuning_path;       // empty: compiled-in thresholds
};

/// Smallest-factor degree distribution over the searched trinomials,
/// counting x^r + x^s + 1 and its reciprocal alike (weight 2 per s < r/2).
struct StatsReport {
    std::size_t r = 0;
    std::uint64_t total_weight = 0;
    std::uint64_t irreducible_weight = 0;
    std::map<std::size_t, std::uint64_t> smallest_degree_weight;

    /// Fraction with no nontrivial factor of degree <= d.
    double pi(std::size_t d) const;
    std::uint64_t survivor_weight(std::size_t d) const;
};

struct SearchResult {
    Certificate certificate;
    StatsReport stats;
};

/// Results are deterministic for a fixed (r, seed) regardless of worker
/// count, ordered by s. The certificate file doubles as the checkpoint, with
/// a "<path>.progress" sidecar of completed s values; a restart resumes
/// after the last completed entries.
SearchResult search(const SearchConfig& cfg);

/// Throws std::invalid_argument unless the certificate covers s = 1..r/2
/// with no skipped entries.
StatsReport stats_from_certificate(const Certificate& c);

struct TuneResult {
    unsigned m = 20;
    MulThresholds thresholds;
    double square_seconds = 0;
    double mul_seconds = 0;
    double gcd_seconds = 0;
};

/// Measure mod_square / mod_mul / gcd_fast at degree r, derive the inner
/// block length m ~ sqrt(M/S) (clamped to [4, 40]), tune the multiplication
/// thresholds, and write the tuning file when a path is given.
TuneResult tune(std::size_t r, const std::string& tuning_path,
                std::size_t mul_grid_max_degree = 1u << 17);

/// Timing probe only: S, M, G at degree r with the given thresholds.
TuneResult bench(std::size_t r, const MulThresholds& thresholds);

}  // namespace gf2x
