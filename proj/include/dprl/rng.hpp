#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace dprl {

// Self-contained xoshiro256++ stream with splitmix64 seeding. <random>
// distributions are implementation-defined, which would break the
// byte-identical-rerun guarantee across toolchains, so everything is
// generated here. Normal draws use Box-Muller without caching: each call
// consumes exactly two uniforms, so stream parity never depends on the
// interleaving of draw kinds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    // Derives an independent substream from (seed, words...). Used for the
    // documented split: replication r -> base_seed + r, then one word per
    // purpose ("env", "agent", class index, ...).
    static Rng derive(std::uint64_t base, std::initializer_list<std::uint64_t> words) {
        std::uint64_t x = base;
        std::uint64_t acc = splitmix64(x);
        for (std::uint64_t w : words) {
            x ^= w + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
            acc ^= splitmix64(x);
        }
        return Rng(acc);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Samples an index from an (unnormalized is tolerated within eps)
    // probability row by CDF inversion; the last index absorbs rounding.
    int categorical(std::span<const double> probs) {
        if (probs.empty()) throw std::invalid_argument("categorical: empty row");
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size() - 1);
    }

    int uniform_int(int n) {  // in [0, n)
        return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

}  // namespace dprl
