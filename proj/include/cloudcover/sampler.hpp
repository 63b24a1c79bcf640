#pragma once

#include "cloudcover/geom.hpp"

#include <cstdint>

namespace cloudcover {

/// Deterministic seeded generator of small rationals, points, lines and
/// invertible maps. Uses splitmix64 steps so sequences are identical across
/// platforms and standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform-ish integer in [lo, hi] (modulo reduction; bias is irrelevant
    /// for test sampling).
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);
    /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
    Scalar next_scalar(std::int64_t bound = 10);
    Scalar next_nonzero_scalar(std::int64_t bound = 10);
    /// Rational strictly inside (-radius, radius).
    Scalar next_in_window(const Scalar& radius);

    Point next_point(std::size_t dim, std::int64_t bound = 10);
    Point next_nonzero_point(std::size_t dim, std::int64_t bound = 10);
    Line next_line(std::size_t dim, std::int64_t bound = 10);
    Matrix next_invertible_matrix(std::size_t n, std::int64_t bound = 5);
    AffineMap next_invertible_affine(std::size_t n, std::int64_t bound = 5);

private:
    std::uint64_t state_;
};

}  // namespace cloudcover
