#pragma once

#include <cstdint>
#include <random>

namespace ambt {

/// Seedable random stream with a platform-independent output sequence.
///
/// Built on std::mt19937_64 (whose output is fixed by the standard) and its
/// std::seed_seq initialisation; bounded draws use rejection sampling rather
/// than the implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0);

    /// Independent stream `stream` of the generator family keyed by `seed`.
    /// Solver trial i uses for_stream(seed, i).
    static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit();

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace ambt
