#pragma once

#include "cloudcover/cloud.hpp"
#include "cloudcover/geom.hpp"

#include <vector>

namespace cloudcover {

/// Result of the restriction-collineation construction: an invertible map T
/// on R^N whose images of the (reordered) input points have pairwise
/// distinct planar restrictions, with the first three landing on
/// (0,0), (1,0), (0,1).
struct RestrictionCertificate {
    AffineMap map;
    std::vector<Scalar> lambda;       // the shear parameters, length N-2
    std::vector<std::size_t> reorder;  // certificate slot k <- original index reorder[k]
    std::vector<Point> projected;      // projected[k] = project2(map(points[reorder[k]]))
};

/// First two coordinates.
Point project2(const Point& x);

/// Builds the collineation T = shear(lambda) . basis_change . translation
/// making the planar restrictions of the input points distinct and
/// noncollinear. Inputs must be >= 3 distinct noncollinear points.
RestrictionCertificate build_restriction_collineation(const std::vector<Point>& points);

/// Lifts a planar cloud family to R^N through the certificate of `points`:
/// extend each planar cloud at the matching projected center, then pull back
/// through the inverse collineation. Output cloud k is centered at
/// points[reorder[k]].
std::vector<Cloud> lift_cover(const std::vector<Cloud>& planar, const std::vector<Point>& points);

}  // namespace cloudcover
