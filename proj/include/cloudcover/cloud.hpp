#pragma once

#include "cloudcover/geom.hpp"
#include "cloudcover/roots.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cloudcover {

struct Cloud;
using CloudPtr = std::shared_ptr<const Cloud>;

struct FiniteSetBody {
    std::vector<Point> points;
};

/// Exact sphere |x - center|^2 = radius_sq. radius_sq = 0 is a one-point set.
struct SphereBody {
    Point center;
    Scalar radius_sq;
};

struct UnionBody {
    std::vector<CloudPtr> parts;
};

/// C' = {(x, y) : x in base} lifted from dim K to a higher dimension.
struct CylinderBody {
    CloudPtr base;
    Point offset;  // dim - K coordinates; the declared center is (base.center, offset)
};

struct AffineImageBody {
    AffineMap map;  // invertible
    CloudPtr base;
};

using CloudBody = std::variant<FiniteSetBody, SphereBody, UnionBody, CylinderBody, AffineImageBody>;

/// A symbolic candidate cloud with a declared center and a finite puncture
/// list (points removed from the body).
struct Cloud {
    std::size_t dim = 0;
    Point center;
    CloudBody body;
    std::vector<Point> punctures;

    static Cloud finite_set(std::vector<Point> points, Point center);
    static Cloud sphere(Point sph_center, Scalar radius_sq, Point center);
    static Cloud union_of(std::vector<Cloud> parts, Point center);
    static Cloud affine_image(AffineMap map, Cloud base);

    Cloud with_puncture(Point p) const;
    Cloud without_puncture(const Point& p) const;
};

/// Exact intersection of a cloud with a line (or rational curve): a finite
/// list of distinct parameter witnesses, or a witness of infinitude.
struct LineIntersection {
    bool infinite = false;
    std::string reason;               // set when infinite
    std::vector<RootWitness> witnesses;  // sorted, distinct parameters

    std::size_t count() const { return witnesses.size(); }
    static LineIntersection make_infinite(std::string why) {
        LineIntersection r;
        r.infinite = true;
        r.reason = std::move(why);
        return r;
    }
};

/// Point-valued rational curve t -> (u + t v) / (d0 + d1 t). A line is the
/// special case d0 = 1, d1 = 0.
struct RationalCurve {
    Point u, v;
    Scalar d0 = 1, d1 = 0;

    std::size_t dim() const { return u.dim(); }
    Point at(const Scalar& t) const;
    bool is_constant() const;
    Point constant_value() const;
};

bool contains(const Cloud& c, const Point& x);

LineIntersection intersect_line(const Cloud& c, const Line& line);

/// Exact intersection parameters t in the open interval (lo, hi) with the
/// curve's denominator nonvanishing there; absent bounds mean the whole line.
LineIntersection intersect_curve(const Cloud& c, const RationalCurve& curve,
                                 const std::optional<Scalar>& lo,
                                 const std::optional<Scalar>& hi);

/// Structural cloud decision; on failure carries a line through `a` whose
/// intersection with the cloud is infinite.
struct CloudDecision {
    bool ok = true;
    std::optional<Line> witness;
    std::string reason;
};

CloudDecision is_cloud_around(const Cloud& c, const Point& a);

/// Cylinder extension of a cloud in R^K to target_dim, centered
/// at (c.center, offset). If the declared center lies in the body it is
/// punctured away first (or rejected when auto_puncture is off).
Cloud extend(const Cloud& c, std::size_t target_dim, const Point& offset, bool auto_puncture = true);

/// Element-wise extension of a planar family with offset 0.
std::vector<Cloud> extend_family(const std::vector<Cloud>& cs, std::size_t target_dim);

}  // namespace cloudcover
