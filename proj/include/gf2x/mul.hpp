// Subquadratic multiplication ladder: classical -> Karatsuba -> Toom-3 ->
// ternary FFT, with word-count thresholds deciding the switchovers.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gf2x/poly.hpp"

namespace gf2x {

/// Switchover points in operand words. Invariant:
/// 0 < karatsuba_min <= toom3_min <= fft_min.
struct MulThresholds {
    std::size_t karatsuba_min = 10;
    std::size_t toom3_min = 64;
    std::size_t fft_min = 2500;

    bool valid() const {
        return karatsuba_min > 0 && karatsuba_min <= toom3_min && toom3_min <= fft_min;
    }
    bool operator==(const MulThresholds&) const = default;
};

/// Process-wide defaults, read-only once workers are running.
const MulThresholds& default_thresholds();
void set_default_thresholds(const MulThresholds& t);

Gf2Poly mul_karatsuba(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul_karatsuba(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t);

Gf2Poly mul_toom3(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul_toom3(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t);

Gf2Poly mul_fft(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul_fft(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t);

/// Threshold dispatch on the smaller operand's word count.
Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b, const MulThresholds& t);

inline Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) { return mul(a, b); }

/// Which top-level path `mul` took, for dispatch tests. Thread-local.
struct MulDispatchCounts {
    std::uint64_t classical = 0;
    std::uint64_t karatsuba = 0;
    std::uint64_t toom3 = 0;
    std::uint64_t fft = 0;
};
MulDispatchCounts& mul_dispatch_counts();

/// Empirical switchover search over a size grid up to max_degree. Falls back
/// to compiled defaults if the clock misbehaves.
MulThresholds tune_thresholds(std::size_t max_degree);

/// Tuning file: three lines "karatsuba_min=<int>", "toom3_min=<int>",
/// "fft_min=<int>".
std::optional<MulThresholds> read_thresholds_file(const std::string& path);
void write_thresholds_file(const std::string& path, const MulThresholds& t);

}  // namespace gf2x
