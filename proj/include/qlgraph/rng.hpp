#pragma once

#include <array>
#include <cstdint>

namespace qlgraph {

// Independent draw purposes. A pipeline that needs several kinds of
// randomness from one seed uses a different stream for each, so changing
// e.g. the coupling probability never perturbs the generated basis graphs.
enum class Stream : std::uint64_t {
    graph_generation = 0,
    edge_deletion = 1,
    coupling = 2,
    disorder = 3,
};

struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    RngSeed() = default;
    constexpr RngSeed(std::uint64_t s, std::uint64_t stream = 0) : seed(s), stream_id(stream) {}
    constexpr RngSeed(std::uint64_t s, Stream stream)
        : seed(s), stream_id(static_cast<std::uint64_t>(stream)) {}

    // Same seed, different purpose.
    constexpr RngSeed with_stream(Stream stream) const { return {seed, stream}; }

    // A statistically independent child seed, e.g. one per ensemble sample or
    // per product factor. Deterministic in (seed, stream_id, index).
    RngSeed child(std::uint64_t index) const;

    friend constexpr bool operator==(const RngSeed&, const RngSeed&) = default;
};

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** with portable derived distributions. The std:: distributions
// are implementation-defined, so none are used anywhere a result must be
// reproducible.
class Rng {
public:
    explicit Rng(RngSeed seed);

    std::uint64_t next();

    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p);

    // Standard normal via Box-Muller; the spare value is cached.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    template <class RandomIt>
    void shuffle(RandomIt first, RandomIt last) {
        auto n = last - first;
        for (decltype(n) i = n - 1; i > 0; --i) {
            auto j = static_cast<decltype(n)>(uniform_below(static_cast<std::uint64_t>(i) + 1));
            using std::swap;
            swap(first[i], first[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> s_{};
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qlgraph
