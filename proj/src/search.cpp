#include "gf2x/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gf2x/ddf.hpp"
#include "gf2x/gcd.hpp"
#include "gf2x/trinomial.hpp"

namespace gf2x {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::size_t s) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (s + 1));
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    return z;
}

CertEntry compute_entry(std::size_t r, std::size_t s, const MulThresholds& th, unsigned m,
                        unsigned k0, std::uint64_t seed) {
    CertEntry entry;
    entry.s = s;
    if (r % 2 == 0 && s % 2 == 0) {
        entry.verdict = Verdict::SkippedEven;
        return entry;
    }
    std::mt19937_64 rng(mix_seed(seed, s));
    const FactorResult res = smallest_factor(Trinomial(r, s), th, m, k0, rng);
    if (res.verdict == FactorResult::Verdict::Factor) {
        entry.verdict = Verdict::Factor;
        entry.d = res.d;
        entry.factor = res.factor;
    } else {
        entry.verdict = Verdict::Irreducible;
    }
    return entry;
}

void write_progress_file(const std::string& path, const std::set<std::size_t>& done) {
    namespace fs = std::filesystem;
    const fs::path tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        for (std::size_t s : done) out << s << '\n';
    }
    fs::rename(tmp, path);
}

std::set<std::size_t> read_progress_file(const std::string& path) {
    std::set<std::size_t> done;
    std::ifstream in(path, std::ios::binary);
    if (!in) return done;
    std::size_t s;
    while (in >> s) done.insert(s);
    return done;
}

}  // namespace

double StatsReport::pi(std::size_t d) const {
    if (total_weight == 0) return 0.0;
    return static_cast<double>(survivor_weight(d)) / static_cast<double>(total_weight);
}

std::uint64_t StatsReport::survivor_weight(std::size_t d) const {
    std::uint64_t w = irreducible_weight;
    for (const auto& [degree, weight] : smallest_degree_weight)
        if (degree > d) w += weight;
    return w;
}

StatsReport stats_from_certificate(const Certificate& c) {
    const std::size_t expected = c.r / 2;
    if (c.entries.size() != expected)
        throw std::invalid_argument("stats: certificate does not cover s = 1..r/2");
    StatsReport report;
    report.r = c.r;
    std::size_t want = 1;
    for (const CertEntry& e : c.entries) {
        if (e.s != want++)
            throw std::invalid_argument("stats: certificate entries not contiguous in s");
        if (e.verdict == Verdict::SkippedEven)
            throw std::invalid_argument(
                "stats: skipped-even entries carry no smallest-factor degree");
        // Both the trinomial and its reciprocal are counted; they share the
        // same factor degrees. s = r/2 is self-reciprocal.
        const std::uint64_t weight = (2 * e.s == c.r) ? 1 : 2;
        report.total_weight += weight;
        if (e.verdict == Verdict::Irreducible)
            report.irreducible_weight += weight;
        else
            report.smallest_degree_weight[e.d] += weight;
    }
    return report;
}

SearchResult search(const SearchConfig& cfg) {
    if (cfg.r <= 2) throw std::invalid_argument("search: r must exceed 2");
    const std::size_t s_hi = cfg.s_max == 0 ? cfg.r / 2 : cfg.s_max;
    if (cfg.s_min == 0 || s_hi > cfg.r / 2 || cfg.s_min > s_hi)
        throw std::invalid_argument("search: s range outside (0, r/2]");
    if (cfg.workers == 0) throw std::invalid_argument("search: workers must be >= 1");

    MulThresholds th = default_thresholds();
    if (!cfg.tuning_path.empty()) {
        if (auto file_th = read_thresholds_file(cfg.tuning_path)) th = *file_th;
    }

    // Resume state: an entry counts as completed only if it is recorded in
    // both the certificate and the progress sidecar.
    std::map<std::size_t, CertEntry> results;
    if (!cfg.certificate_path.empty()) {
        const std::string progress_path = cfg.certificate_path + ".progress";
        std::set<std::size_t> done = read_progress_file(progress_path);
        if (!done.empty() && std::filesystem::exists(cfg.certificate_path)) {
            const Certificate existing = read_certificate_file(cfg.certificate_path);
            if (existing.r != cfg.r)
                throw std::runtime_error("search: checkpoint is for a different r");
            for (const CertEntry& e : existing.entries)
                if (done.count(e.s)) results[e.s] = e;
        }
    }

    std::vector<std::size_t> pending;
    for (std::size_t s = cfg.s_min; s <= s_hi; ++s)
        if (!results.count(s)) pending.push_back(s);

    std::mutex sink_mutex;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto flush_locked = [&]() {
        if (cfg.certificate_path.empty()) return;
        Certificate snapshot;
        snapshot.r = cfg.r;
        std::set<std::size_t> done;
        for (const auto& [s, e] : results) {
            snapshot.entries.push_back(e);
            done.insert(s);
        }
        write_certificate_file(snapshot, cfg.certificate_path);
        write_progress_file(cfg.certificate_path + ".progress", done);
    };

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            const std::size_t s = pending[i];
            try {
                CertEntry e = compute_entry(cfg.r, s, th, cfg.m, cfg.k0, cfg.seed);
                std::lock_guard<std::mutex> lock(sink_mutex);
                results[s] = std::move(e);
                flush_locked();
            } catch (...) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (cfg.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < cfg.workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    SearchResult out;
    out.certificate.r = cfg.r;
    for (auto& [s, e] : results) out.certificate.entries.push_back(std::move(e));

    const bool full_range = cfg.s_min == 1 && s_hi == cfg.r / 2;
    if (full_range && cfg.r % 2 == 1) out.stats = stats_from_certificate(out.certificate);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double median_seconds(F&& op) {
    op();  // warmup
    std::array<double, 5> samples{};
    for (auto& s : samples) {
        const auto t0 = Clock::now();
        op();
        const auto t1 = Clock::now();
        s = std::chrono::duration<double>(t1 - t0).count();
    }
    std::sort(samples.begin(), samples.end());
    return samples[2];
}

std::size_t pick_probe_s(std::size_t r) {
    // Any valid s works for timing; aim near r/2 and keep r, s not both even.
    std::size_t s = r / 2;
    if (s == 0) s = 1;
    if (r % 2 == 0 && s % 2 == 0) --s;
    return s;
}

TuneResult measure(std::size_t r, const MulThresholds& th) {
    TuneResult out;
    out.thresholds = th;
    const Trinomial t(r, pick_probe_s(r));
    const ModContext ctx(t, th);
    std::mt19937_64 rng(0xBE9C4);
    const Gf2Poly a = random_poly(rng, r);
    const Gf2Poly b = random_poly(rng, r);
    volatile std::size_t sink = 0;

    out.square_seconds = median_seconds([&] { sink = sink + ctx.mod_square(a).word_count(); });
    out.mul_seconds = median_seconds([&] { sink = sink + ctx.mod_mul(a, b).word_count(); });
    const Gf2Poly P = ctx.modulus();
    out.gcd_seconds = median_seconds([&] { sink = sink + gcd_fast(a, P, th).word_count(); });
    (void)sink;

    if (out.square_seconds > 0 && out.mul_seconds > 0) {
        const double ratio = out.mul_seconds / out.square_seconds;
        const long m = std::lround(std::sqrt(ratio));
        out.m = static_cast<unsigned>(std::clamp(m, 4l, 40l));
    }
    return out;
}

}  // namespace

TuneResult tune(std::size_t r, const std::string& tuning_path,
                std::size_t mul_grid_max_degree) {
    if (r < (1u << 10)) throw std::invalid_argument("tune: r must be at least 2^10");
    const MulThresholds th = tune_thresholds(std::min(r, mul_grid_max_degree));
    TuneResult out = measure(r, th);
    if (!tuning_path.empty()) write_thresholds_file(tuning_path, th);
    return out;
}

TuneResult bench(std::size_t r, const MulThresholds& thresholds) {
    return measure(r, thresholds);
}

}  // namespace gf2x
