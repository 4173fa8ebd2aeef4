#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qmeter {

// Deterministic random source: mt19937_64 plus hand-rolled variate
// transforms, so a given seed produces the same stream on every platform
// and standard library.  No global generator exists anywhere in the
// library; every randomized operation takes a seed or one of these.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (two uniforms per draw).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    // Binomial(n, p) as a sum of Bernoulli draws.
    long long binomial(long long n, double p) {
        long long count = 0;
        for (long long i = 0; i < n; ++i) {
            if (uniform() < p) ++count;
        }
        return count;
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static constexpr double kPi = 3.141592653589793;
    std::mt19937_64 gen_;
};

}  // namespace qmeter
