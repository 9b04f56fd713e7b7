#include "ambt/random.hpp"

#include <stdexcept>

namespace ambt {

namespace {

std::mt19937_64 seeded(std::initializer_list<std::uint32_t> words) {
    std::seed_seq seq(words);
    return std::mt19937_64(seq);
}

std::uint32_t lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seeded({lo(seed), hi(seed)})) {}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
    Rng r;
    // The trailing tag keeps stream 0 distinct from the plain Rng(seed) sequence.
    r.engine_ = seeded({lo(seed), hi(seed), lo(stream), hi(stream), 0x5354524du});
    return r;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace ambt
