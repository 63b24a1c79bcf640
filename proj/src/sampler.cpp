#include "cloudcover/sampler.hpp"

namespace cloudcover {

std::uint64_t Sampler::next_u64() {
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t Sampler::next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

Scalar Sampler::next_scalar(std::int64_t bound) {
    std::int64_t num = next_int(-bound, bound);
    std::int64_t den = next_int(1, bound);
    return Scalar(num, den);
}

Scalar Sampler::next_nonzero_scalar(std::int64_t bound) {
    for (;;) {
        Scalar s = next_scalar(bound);
        if (s != 0) return s;
    }
}

Scalar Sampler::next_in_window(const Scalar& radius) {
    std::int64_t num = next_int(-999, 999);
    return Scalar(num, 1000) * radius;
}

Point Sampler::next_point(std::size_t dim, std::int64_t bound) {
    Point p = Point::zero(dim);
    for (auto& c : p.coords) c = next_scalar(bound);
    return p;
}

Point Sampler::next_nonzero_point(std::size_t dim, std::int64_t bound) {
    for (;;) {
        Point p = next_point(dim, bound);
        if (!p.is_zero()) return p;
    }
}

Line Sampler::next_line(std::size_t dim, std::int64_t bound) {
    return Line(next_point(dim, bound), next_nonzero_point(dim, bound));
}

Matrix Sampler::next_invertible_matrix(std::size_t n, std::int64_t bound) {
    for (;;) {
        Matrix m(n, n);
        for (auto& e : m.data) e = next_scalar(bound);
        if (mat_rank(m) == n) return m;
    }
}

AffineMap Sampler::next_invertible_affine(std::size_t n, std::int64_t bound) {
    return AffineMap(next_invertible_matrix(n, bound), next_point(n, bound));
}

}  // namespace cloudcover
