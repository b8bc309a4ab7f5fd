#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qmono {

/// One SplitMix64 step: advances `state` and returns the next output word.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Seedable, splittable PRNG with a fully documented sample path: the raw
/// stream is std::mt19937_64 (bit-exact everywhere by the standard), uniforms
/// take the top 53 bits of each word, and Gaussians come from Box-Muller on
/// those uniforms. The distribution adapters from <random> are avoided since
/// their algorithms are implementation-defined and would break cross-platform
/// reproducibility of fuzz failures.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Child generator for worker `index`. Child seeds are SplitMix64 hashes
    /// of (seed, index), so streams are independent of scheduling order.
    Rng split(std::uint64_t index) const;

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller; generates pairs, caches the spare.
    double normal();
    /// Independent standard normals in the real and imaginary parts.
    std::complex<double> complex_normal();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace qmono
