#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace pm {

// Seed with cheap derivation of independent sub-streams. Deriving mixes the
// index through an avalanche finalizer, so nearby indices (0, 1, 2, ...)
// yield unrelated generator states. Derivation is pure: the same (seed,
// index) pair always gives the same sub-seed, which is what makes trial
// results independent of evaluation order and thread count.
class Seed {
public:
    explicit Seed(std::uint64_t value) : value_(value) {}

    std::uint64_t value() const { return value_; }

    Seed at(std::uint64_t index) const {
        return Seed(mix(value_ + (index + 1) * 0x9E3779B97F4A7C15ull));
    }

private:
    // splitmix64 finalizer; bijective on 64-bit values.
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t value_;
};

// Deterministic random generator: a seeded mt19937_64 with hand-rolled,
// unbiased integer draws. std::uniform_int_distribution and std::shuffle
// are implementation-defined, so bounded draws and shuffles are done here
// explicitly to keep output identical across platforms and compilers.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed.value()) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound) by rejection below the largest multiple
    // of bound.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty draw range");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle using this generator's draws.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace pm
