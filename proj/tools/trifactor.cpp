// Trinomial factorization driver: batch search with checkpointing,
// certificate verification, statistics, tuning and the naive reference.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "gf2x/certificate.hpp"
#include "gf2x/ddf.hpp"
#include "gf2x/search.hpp"

namespace {

constexpr const char* kTuningEnvVar = "TRIFACTOR_TUNING";

std::string resolve_tuning_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kTuningEnvVar)) return env;
    return {};
}

gf2x::MulThresholds load_thresholds(const std::string& tuning_path) {
    if (!tuning_path.empty()) {
        if (auto t = gf2x::read_thresholds_file(tuning_path)) return *t;
        std::fprintf(stderr, "note: tuning file %s missing or invalid, using defaults\n",
                     tuning_path.c_str());
    }
    return gf2x::default_thresholds();
}

void warn_if_uninteresting_degree(std::size_t r) {
    const unsigned rm8 = r % 8;
    if (rm8 != 1 && rm8 != 7)
        std::fprintf(stderr,
                     "note: r = %zu is %u mod 8; irreducible trinomials of this degree are "
                     "ruled out except for s = 2 or r-2\n",
                     r, rm8);
}

void print_stats(const gf2x::StatsReport& stats, std::size_t max_d) {
    std::printf("# r=%zu trinomials=%llu irreducible=%llu (reciprocals counted)\n",
                stats.r, (unsigned long long)stats.total_weight,
                (unsigned long long)stats.irreducible_weight);
    std::printf("%4s %10s %10s %10s\n", "d", "p_d", "pi_d", "d*pi_d");
    for (std::size_t d = 1; d <= max_d; ++d) {
        const auto it = stats.smallest_degree_weight.find(d);
        const unsigned long long pd =
            it == stats.smallest_degree_weight.end() ? 0 : it->second;
        std::printf("%4zu %10llu %10.4f %10.4f\n", d, pd, stats.pi(d), d * stats.pi(d));
    }
}

int cmd_search(const gf2x::SearchConfig& cfg, std::size_t stats_max_d) {
    warn_if_uninteresting_degree(cfg.r);
    const gf2x::SearchResult res = gf2x::search(cfg);
    if (!cfg.certificate_path.empty())
        std::printf("certificate: %s (%zu entries)\n", cfg.certificate_path.c_str(),
                    res.certificate.entries.size());
    if (res.stats.total_weight > 0) print_stats(res.stats, stats_max_d);
    for (const auto& e : res.certificate.entries)
        if (e.verdict == gf2x::Verdict::Irreducible)
            std::printf("irreducible: x^%zu + x^%zu + 1\n", cfg.r, e.s);
    return 0;
}

int cmd_oracle(std::size_t r, std::size_t s_min, std::size_t s_max, std::uint64_t seed,
               const std::string& cert_path) {
    if (s_max == 0) s_max = r / 2;
    gf2x::Certificate cert;
    cert.r = r;
    for (std::size_t s = s_min; s <= s_max; ++s) {
        gf2x::CertEntry e;
        e.s = s;
        if (r % 2 == 0 && s % 2 == 0) {
            e.verdict = gf2x::Verdict::SkippedEven;
        } else {
            std::mt19937_64 rng(seed + s);
            const gf2x::FactorResult res =
                gf2x::naive_ddf_oracle(gf2x::Trinomial(r, s), rng);
            if (res.verdict == gf2x::FactorResult::Verdict::Factor) {
                e.verdict = gf2x::Verdict::Factor;
                e.d = res.d;
                e.factor = res.factor;
            }
        }
        cert.entries.push_back(std::move(e));
    }
    if (cert_path.empty()) {
        for (const auto& e : cert.entries)
            if (e.verdict == gf2x::Verdict::Irreducible)
                std::printf("%zu irreducible\n", e.s);
            else if (e.verdict == gf2x::Verdict::Factor)
                std::printf("%zu %zu %s\n", e.s, e.d, e.factor.to_hex().c_str());
            else
                std::printf("%zu skipped-even\n", e.s);
    } else {
        gf2x::write_certificate_file(cert, cert_path);
        std::printf("oracle certificate: %s (%zu entries)\n", cert_path.c_str(),
                    cert.entries.size());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trifactor: smallest irreducible factors of x^r + x^s + 1 over GF(2)"};
    app.require_subcommand(1);

    gf2x::SearchConfig cfg;
    std::string tuning_flag;
    std::size_t stats_max_d = 10;

    CLI::App* search = app.add_subcommand("search", "factor all trinomials of degree r");
    search->add_option("--r", cfg.r, "trinomial degree")->required();
    search->add_option("--s-min", cfg.s_min, "first s to test (default 1)");
    search->add_option("--s-max", cfg.s_max, "last s to test (default r/2)");
    search->add_option("--workers", cfg.workers, "parallel workers (default 1)");
    search->add_option("--m", cfg.m, "inner block length (default: auto)");
    search->add_option("--k0", cfg.k0, "outer block growth coefficient (default 1)");
    search->add_option("--seed", cfg.seed, "randomness seed (default 1)");
    search->add_option("--cert", cfg.certificate_path, "certificate/checkpoint file");
    search->add_option("--tuning", tuning_flag, "tuning file (or $TRIFACTOR_TUNING)");
    search->add_option("--max-d", stats_max_d, "largest d in the stats table");

    std::string verify_cert;
    bool strict = false;
    CLI::App* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("--cert", verify_cert, "certificate file")->required();
    verify->add_flag("--strict", strict, "re-prove minimality and leastness per entry");
    verify->add_option("--tuning", tuning_flag, "tuning file (or $TRIFACTOR_TUNING)");

    std::string stats_cert;
    CLI::App* stats =
        app.add_subcommand("stats", "smallest-factor statistics of a certificate");
    stats->add_option("--cert", stats_cert, "certificate file")->required();
    stats->add_option("--max-d", stats_max_d, "largest d in the table (default 10)");

    std::size_t tune_r = 0;
    std::string tune_out;
    CLI::App* tune = app.add_subcommand("tune", "measure S/M/G and write a tuning file");
    tune->add_option("--r", tune_r, "degree to tune at")->required();
    tune->add_option("--tuning", tune_out, "tuning file to write (or $TRIFACTOR_TUNING)");

    std::size_t bench_r = 0;
    CLI::App* bench =
        app.add_subcommand("bench", "time mod_square / mod_mul / gcd at degree r");
    bench->add_option("--r", bench_r, "degree to time at")->required();
    bench->add_option("--tuning", tuning_flag, "tuning file (or $TRIFACTOR_TUNING)");

    std::size_t oracle_r = 0, oracle_smin = 1, oracle_smax = 0;
    std::uint64_t oracle_seed = 1;
    std::string oracle_cert;
    CLI::App* oracle =
        app.add_subcommand("oracle", "naive per-degree reference (small r; test baseline)");
    oracle->add_option("--r", oracle_r, "trinomial degree")->required();
    oracle->add_option("--s-min", oracle_smin, "first s (default 1)");
    oracle->add_option("--s-max", oracle_smax, "last s (default r/2)");
    oracle->add_option("--seed", oracle_seed, "randomness seed");
    oracle->add_option("--cert", oracle_cert, "write certificate here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (search->parsed()) {
            cfg.tuning_path = resolve_tuning_path(tuning_flag);
            return cmd_search(cfg, stats_max_d);
        }
        if (verify->parsed()) {
            const gf2x::Certificate cert = gf2x::read_certificate_file(verify_cert);
            const gf2x::MulThresholds th =
                load_thresholds(resolve_tuning_path(tuning_flag));
            const gf2x::VerifyReport report = gf2x::verify_certificate(cert, strict, th);
            for (const auto& issue : report.issues)
                std::printf("FAIL s=%zu: %s\n", issue.s, issue.message.c_str());
            std::printf("%s: %zu entries checked, %zu issue(s)\n",
                        report.ok ? "OK" : "FAILED", report.entries_checked,
                        report.issues.size());
            return report.ok ? 0 : 1;
        }
        if (stats->parsed()) {
            const gf2x::Certificate cert = gf2x::read_certificate_file(stats_cert);
            print_stats(gf2x::stats_from_certificate(cert), stats_max_d);
            return 0;
        }
        if (tune->parsed()) {
            const std::string out_path = resolve_tuning_path(tune_out);
            const gf2x::TuneResult res = gf2x::tune(tune_r, out_path);
            std::printf("S=%.6fs M=%.6fs G=%.6fs M/S=%.1f\n", res.square_seconds,
                        res.mul_seconds, res.gcd_seconds,
                        res.mul_seconds / res.square_seconds);
            std::printf("m=%u karatsuba_min=%zu toom3_min=%zu fft_min=%zu\n", res.m,
                        res.thresholds.karatsuba_min, res.thresholds.toom3_min,
                        res.thresholds.fft_min);
            if (!out_path.empty()) std::printf("tuning file: %s\n", out_path.c_str());
            return 0;
        }
        if (bench->parsed()) {
            const gf2x::MulThresholds th =
                load_thresholds(resolve_tuning_path(tuning_flag));
            const gf2x::TuneResult res = gf2x::bench(bench_r, th);
            std::printf("S=%.6fs M=%.6fs G=%.6fs M/S=%.1f m*=%u\n", res.square_seconds,
                        res.mul_seconds, res.gcd_seconds,
                        res.mul_seconds / res.square_seconds, res.m);
            return 0;
        }
        if (oracle->parsed())
            return cmd_oracle(oracle_r, oracle_smin, oracle_smax, oracle_seed, oracle_cert);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 0;
}
