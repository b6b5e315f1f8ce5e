#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace difflab {

// All randomness in the library flows through RngStream so that runs are
// reproducible from (seed, draw index) alone. The generator is mt19937_64;
// uniforms come from the top 53 bits and normals from a non-caching
// Box-Muller transform (one normal consumes exactly two uniforms), so the
// draw sequence does not depend on library internals.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    // Uniform on (0, 1]: (x >> 11) + 1 scaled by 2^-53. Never returns 0,
    // which keeps log() in the normal transform finite.
    double uniform() {
        const std::uint64_t x = gen_();
        return static_cast<double>((x >> 11) + 1) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (cosine branch).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t next_u64() { return gen_(); }

    static constexpr const char* algorithm_name() { return "mt19937_64/box-muller"; }

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer; used to derive independent child-stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Child seed from (seed, tag). FNV-1a over the tag, folded into the seed.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(seed ^ h);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index));
}

}  // namespace difflab
