#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyper/core.hpp"

namespace hyper {

/// Seeded generator with platform-independent draws: uniform doubles are
/// built from the raw 64-bit output and normals use Box-Muller, so identical
/// seeds give identical streams under any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();
    /// Standard complex Gaussian: real and imaginary parts are N(0, 1).
    Complex complex_normal();
    std::vector<Complex> complex_normals(std::size_t count);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace hyper
