#pragma once

#include <cstdint>
#include <random>

namespace dqtrader {

/// splitmix64 finalizer. Used to derive independent per-run seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for run `run_index` of an experiment. Depends only on the pair, so the
/// stream a run sees is the same whatever worker executes it.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return mix64(mix64(master_seed) ^ mix64(run_index + 0x632BE59BD9B4E019ULL));
}

/// Seeded random source. Conversions to doubles and bounded integers are done
/// here rather than through <random> distributions, whose output is not
/// specified bit-for-bit across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive, without modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace dqtrader
