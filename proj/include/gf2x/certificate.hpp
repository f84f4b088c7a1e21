// Per-trinomial verdict records and their independent verification.
//
// File format (UTF-8, LF line endings):
//   trinomial-certificate v1 r=<r>
//   <s> <d> <factor_hex>      one reducible trinomial, smallest factor
//   <s> irreducible           one irreducible trinomial
//   <s> skipped-even          r and s both even (perfect square, not searched)
// Entries are sorted by s ascending, s in (0, r/2].
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gf2x/mul.hpp"
#include "gf2x/poly.hpp"

namespace gf2x {

enum class Verdict { Irreducible, Factor, SkippedEven };

struct CertEntry {
    std::size_t s = 0;
    Verdict verdict = Verdict::Irreducible;
    std::size_t d = 0;  // smallest factor degree, Factor only
    Gf2Poly factor;     // least factor of that degree, Factor only

    bool operator==(const CertEntry&) const = default;
};

struct Certificate {
    std::size_t r = 0;
    std::vector<CertEntry> entries;  // sorted by s ascending

    bool operator==(const Certificate&) const = default;
};

void write_certificate(const Certificate& c, std::ostream& out);
/// Crash-safe file write: temp file in the same directory, then rename.
void write_certificate_file(const Certificate& c, const std::string& path);

/// Throws std::runtime_error on malformed input.
Certificate read_certificate(std::istream& in);
Certificate read_certificate_file(const std::string& path);

struct VerifyIssue {
    std::size_t s = 0;
    std::string message;
};

struct VerifyReport {
    bool ok = true;
    std::size_t entries_checked = 0;
    std::vector<VerifyIssue> issues;
};

/// Check every Factor entry: the factor divides x^r + x^s + 1 and is
/// irreducible of the stated degree; plus the structural invariants
/// (ordering, s range). Strict mode re-proves minimality and lexicographic
/// leastness by re-running the search engine per entry (and a full run for
/// Irreducible entries), and requires contiguous coverage of s = 1..r/2.
VerifyReport verify_certificate(const Certificate& c, bool strict,
                                const MulThresholds& thresholds = default_thresholds());

}  // namespace gf2x
