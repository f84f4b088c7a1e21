#include "gf2x/certificate.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gf2x/ddf.hpp"
#include "gf2x/modular.hpp"

namespace gf2x {

void write_certificate(const Certificate& c, std::ostream& out) {
    out << "trinomial-certificate v1 r=" << c.r << '\n';
    for (const CertEntry& e : c.entries) {
        switch (e.verdict) {
            case Verdict::Irreducible:
                out << e.s << " irreducible\n";
                break;
            case Verdict::SkippedEven:
                out << e.s << " skipped-even\n";
                break;
            case Verdict::Factor:
                out << e.s << ' ' << e.d << ' ' << e.factor.to_hex() << '\n';
                break;
        }
    }
}

void write_certificate_file(const Certificate& c, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        write_certificate(c, out);
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

Certificate read_certificate(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("certificate: empty input");
    Certificate c;
    {
        std::istringstream hdr(line);
        std::string magic, version, rfield;
        hdr >> magic >> version >> rfield;
        if (magic != "trinomial-certificate" || version != "v1" ||
            rfield.rfind("r=", 0) != 0)
            throw std::runtime_error("certificate: bad header: " + line);
        c.r = std::stoull(rfield.substr(2));
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        CertEntry e;
        std::string tok;
        if (!(ls >> e.s >> tok))
            throw std::runtime_error("certificate: malformed line " + std::to_string(lineno));
        if (tok == "irreducible") {
            e.verdict = Verdict::Irreducible;
        } else if (tok == "skipped-even") {
            e.verdict = Verdict::SkippedEven;
        } else {
            e.verdict = Verdict::Factor;
            e.d = std::stoull(tok);
            std::string hex;
            if (!(ls >> hex))
                throw std::runtime_error("certificate: missing factor on line " +
                                         std::to_string(lineno));
            e.factor = Gf2Poly::from_hex(hex);
            // exact tokens: only the canonical encoding is a certificate
            if (e.factor.to_hex() != hex)
                throw std::runtime_error("certificate: non-canonical factor on line " +
                                         std::to_string(lineno));
        }
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("certificate: trailing tokens on line " +
                                     std::to_string(lineno));
        c.entries.push_back(std::move(e));
    }
    return c;
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open certificate: " + path);
    return read_certificate(in);
}

namespace {

void add_issue(VerifyReport& report, std::size_t s, std::string message) {
    report.ok = false;
    report.issues.push_back({s, std::move(message)});
}

}  // namespace

VerifyReport verify_certificate(const Certificate& c, bool strict,
                                const MulThresholds& thresholds) {
    VerifyReport report;
    if (c.r <= 2) {
        add_issue(report, 0, "r must exceed 2");
        return report;
    }

    std::size_t prev_s = 0;
    for (const CertEntry& e : c.entries) {
        ++report.entries_checked;
        if (e.s <= prev_s) {
            add_issue(report, e.s, "entries not strictly ascending in s");
            continue;
        }
        prev_s = e.s;
        if (e.s == 0 || 2 * e.s > c.r) {
            add_issue(report, e.s, "s outside (0, r/2]");
            continue;
        }

        if (e.verdict == Verdict::SkippedEven) {
            if (c.r % 2 != 0 || e.s % 2 != 0)
                add_issue(report, e.s, "skipped-even entry but r, s not both even");
            continue;
        }
        if (c.r % 2 == 0 && e.s % 2 == 0) {
            add_issue(report, e.s, "r and s both even must be skipped-even");
            continue;
        }

        if (e.verdict == Verdict::Factor) {
            if (e.d == 0 || e.factor.is_zero()) {
                add_issue(report, e.s, "factor entry missing degree or polynomial");
                continue;
            }
            if (e.factor.degree() != e.d) {
                add_issue(report, e.s, "stated degree does not match the factor");
                continue;
            }
            Gf2Poly trinomial = Gf2Poly::monomial(c.r);
            trinomial.flip_coefficient(e.s);
            trinomial.flip_coefficient(0);
            if (!divrem(trinomial, e.factor).second.is_zero()) {
                add_issue(report, e.s, "factor does not divide the trinomial");
                continue;
            }
            if (!is_irreducible(e.factor)) {
                add_issue(report, e.s, "factor is not irreducible");
                continue;
            }
        }

        if (strict) {
            // Minimality and lexicographic leastness are claims about every
            // smaller degree, so strict mode re-runs the engine.
            std::mt19937_64 rng(0xF1A9 + e.s);
            const FactorResult res =
                smallest_factor(Trinomial(c.r, e.s), thresholds, 0, 1, rng);
            if (e.verdict == Verdict::Irreducible) {
                if (res.verdict != FactorResult::Verdict::Irreducible)
                    add_issue(report, e.s, "irreducible claim refuted by re-search");
            } else {
                if (res.verdict != FactorResult::Verdict::Factor || res.d != e.d)
                    add_issue(report, e.s, "smallest-degree claim refuted by re-search");
                else if (res.factor != e.factor)
                    add_issue(report, e.s, "factor is not the least one of its degree");
            }
        }
    }

    if (strict) {
        // A strict pass certifies a complete search record.
        const std::size_t expected = c.r / 2;
        if (c.entries.size() != expected ||
            (expected > 0 && (c.entries.front().s != 1 || c.entries.back().s != expected)))
            add_issue(report, 0, "entries do not cover s = 1..r/2 contiguously");
    }
    return report;
}

}  // namespace gf2x
