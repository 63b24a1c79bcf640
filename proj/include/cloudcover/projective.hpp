#pragma once

#include "cloudcover/geom.hpp"

#include <vector>

namespace cloudcover {

/// A point of P_m(R) in canonical homogeneous coordinates: m+1 entries, not
/// all zero, scaled so the first nonzero coordinate is 1. Equality is
/// component-wise on the canonical form.
struct ProjectivePoint {
    Point homog;

    explicit ProjectivePoint(Point representative);

    std::size_t proj_dim() const { return homog.dim() - 1; }
    bool operator==(const ProjectivePoint&) const = default;
};

/// A line of P_m(R), stored as a spanning pair of distinct points
/// (lexicographically smallest pair among the supplied generators).
struct ProjectiveLine {
    ProjectivePoint p, q;

    ProjectiveLine(std::vector<ProjectivePoint> generators);

    bool contains(const ProjectivePoint& x) const;
};

/// An invertible collineation of P_m(R), acting by [x] -> [Mx]. The matrix
/// is stored with its first nonzero entry scaled to 1.
struct ProjectiveMap {
    Matrix matrix;

    explicit ProjectiveMap(Matrix m);

    std::size_t proj_dim() const { return matrix.rows - 1; }
    static ProjectiveMap identity(std::size_t m);
    bool operator==(const ProjectiveMap&) const = default;
};

/// E : R^m -> P_m(R), x -> [x, 1].
ProjectivePoint embed(const Point& x);

/// Inverse of the embedding on the affine chart; AtInfinity when the last
/// homogeneous coordinate is zero.
Point unembed(const ProjectivePoint& p);

bool is_at_infinity(const ProjectivePoint& p);

/// [dir, 0]: the projective point completing the embedded image of a line.
ProjectivePoint point_at_infinity(const Line& line);
/// The point at infinity on the i-th coordinate axis of R^m (0-based).
ProjectivePoint axis_infinity(std::size_t m, std::size_t axis);

ProjectivePoint proj_apply(const ProjectiveMap& map, const ProjectivePoint& p);

ProjectiveMap proj_invert(const ProjectiveMap& map);
ProjectiveMap proj_compose(const ProjectiveMap& f, const ProjectiveMap& g);

/// The collineation with M xs[i] = ys[i] (up to the canonical matrix
/// scaling), i.e. M = Y X^{-1}; both input families must be linearly
/// independent sets of m+1 vectors in R^{m+1}.
ProjectiveMap build_proj_collineation(const std::vector<Point>& xs, const std::vector<Point>& ys);

/// True iff the three points span at most a projective line (rank <= 2).
bool proj_collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

}  // namespace cloudcover
