#pragma once

#include <cstdint>
#include <random>

#include "frobalg/matrix.hpp"

namespace frobalg {

/// Seeded source of small random rationals. Deterministic for a fixed seed,
/// so every randomized search in the library is reproducible.
class RatRng {
public:
    explicit RatRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform numerator in [-bound, bound], denominator in [1, den_bound].
    Rat rational(long bound = 9, long den_bound = 4) {
        std::uniform_int_distribution<long> num(-bound, bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return Rat(num(gen_), den(gen_));
    }

    Vec vector(std::size_t n, long bound = 9, long den_bound = 4) {
        Vec v(n);
        for (auto& x : v) x = rational(bound, den_bound);
        return v;
    }

    std::uint64_t integer() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace frobalg
