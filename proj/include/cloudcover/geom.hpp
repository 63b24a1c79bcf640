#pragma once

#include "cloudcover/errors.hpp"
#include "cloudcover/scalar.hpp"

#include <cstddef>
#include <vector>

namespace cloudcover {

struct Point {
    std::vector<Scalar> coords;

    Point() = default;
    explicit Point(std::vector<Scalar> c) : coords(std::move(c)) {}
    static Point zero(std::size_t dim) { return Point(std::vector<Scalar>(dim)); }
    static Point unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const { return coords.size(); }
    const Scalar& operator[](std::size_t i) const { return coords[i]; }
    Scalar& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const;
    bool operator==(const Point&) const = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& c, const Point& p);
Scalar dot(const Point& a, const Point& b);

/// Squared Euclidean norm; exact over the rationals.
Scalar norm_sq(const Point& p);
/// Max-norm |p|_inf.
Scalar norm_inf(const Point& p);

/// First k coordinates.
Point head(const Point& p, std::size_t k);
/// Coordinates from index k onward.
Point tail(const Point& p, std::size_t k);
Point concat(const Point& a, const Point& b);

/// Exact collinearity of a point set: all 2x2 minors of the difference
/// vectors vanish.
bool points_collinear(const std::vector<Point>& pts);

/// A line in canonical form: dir's first nonzero coordinate is 1 and base
/// is the foot of the perpendicular from the origin, so equal point sets
/// compare equal structurally.
struct Line {
    Point base;
    Point dir;

    /// Canonicalizes; throws if dir is zero or dims mismatch.
    Line(Point base_pt, Point direction);

    std::size_t dim() const { return base.dim(); }
    Point at(const Scalar& t) const { return base + t * dir; }
    /// Parameter of x on this line, if x lies on it.
    std::optional<Scalar> param_of(const Point& x) const;
    bool contains_point(const Point& x) const { return param_of(x).has_value(); }

    bool operator==(const Line&) const = default;
};

Line line_through(const Point& p, const Point& q);

/// Dense rational matrix, row-major.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static Matrix identity(std::size_t n);

    const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }

    bool operator==(const Matrix&) const = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Point mat_vec(const Matrix& m, const Point& x);
std::size_t mat_rank(const Matrix& m);
Scalar mat_det(const Matrix& m);
/// Gauss-Jordan inverse; throws NotInvertible.
Matrix mat_inverse(const Matrix& m);

/// Affine map x -> matrix*x + translation. Immutable; rank is computed at
/// construction.
struct AffineMap {
    Matrix matrix;
    Point translation;
    std::size_t rank = 0;

    AffineMap() = default;
    AffineMap(Matrix m, Point t);

    static AffineMap identity(std::size_t n);
    static AffineMap translation_by(const Point& v);
    static AffineMap linear(Matrix m);

    std::size_t in_dim() const { return matrix.cols; }
    std::size_t out_dim() const { return matrix.rows; }
    bool invertible() const { return in_dim() == out_dim() && rank == in_dim(); }

    bool operator==(const AffineMap&) const = default;
};

Point apply_affine(const AffineMap& f, const Point& x);
/// Image of a line under an invertible map (still a line, canonicalized).
Line apply_affine(const AffineMap& f, const Line& line);
/// compose(f,g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap invert(const AffineMap& f);

/// Invertible linear map sending vs[k] to e_{k+1}; the basis is completed
/// with standard basis vectors in index order, skipping dependent ones.
AffineMap extend_to_basis(const std::vector<Point>& vs, std::size_t dim);

}  // namespace cloudcover
