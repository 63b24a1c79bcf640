#include "cloudcover/cloud.hpp"

#include <algorithm>

namespace cloudcover {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* ctx) {
    if (got != want) throw Error(ErrorKind::DimensionMismatch, ctx);
}

}  // namespace

Cloud Cloud::finite_set(std::vector<Point> points, Point center) {
    Cloud c;
    c.dim = center.dim();
    for (const auto& p : points) require_dim(p.dim(), c.dim, "finite set point");
    c.center = std::move(center);
    c.body = FiniteSetBody{std::move(points)};
    return c;
}

Cloud Cloud::sphere(Point sph_center, Scalar radius_sq, Point center) {
    if (radius_sq < 0) throw Error(ErrorKind::BadDimensions, "negative radius_sq");
    require_dim(sph_center.dim(), center.dim(), "sphere center");
    Cloud c;
    c.dim = center.dim();
    c.center = std::move(center);
    c.body = SphereBody{std::move(sph_center), std::move(radius_sq)};
    return c;
}

Cloud Cloud::union_of(std::vector<Cloud> parts, Point center) {
    Cloud c;
    c.dim = center.dim();
    UnionBody u;
    for (auto& p : parts) {
        require_dim(p.dim, c.dim, "union part");
        u.parts.push_back(std::make_shared<Cloud>(std::move(p)));
    }
    c.center = std::move(center);
    c.body = std::move(u);
    return c;
}

Cloud Cloud::affine_image(AffineMap map, Cloud base) {
    if (!map.invertible()) throw Error(ErrorKind::NotInvertible, "affine image map");
    require_dim(map.in_dim(), base.dim, "affine image base");
    Cloud c;
    c.dim = map.out_dim();
    c.center = apply_affine(map, base.center);
    c.body = AffineImageBody{std::move(map), std::make_shared<Cloud>(std::move(base))};
    return c;
}

Cloud Cloud::with_puncture(Point p) const {
    require_dim(p.dim(), dim, "puncture point");
    Cloud c = *this;
    if (std::find(c.punctures.begin(), c.punctures.end(), p) == c.punctures.end())
        c.punctures.push_back(std::move(p));
    return c;
}

Cloud Cloud::without_puncture(const Point& p) const {
    Cloud c = *this;
    std::erase(c.punctures, p);
    return c;
}

bool contains(const Cloud& c, const Point& x) {
    require_dim(x.dim(), c.dim, "contains");
    for (const auto& p : c.punctures)
        if (p == x) return false;
    return std::visit(
        [&](const auto& body) -> bool {
            using B = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<B, FiniteSetBody>) {
                return std::find(body.points.begin(), body.points.end(), x) != body.points.end();
            } else if constexpr (std::is_same_v<B, SphereBody>) {
                return norm_sq(x - body.center) == body.radius_sq;
            } else if constexpr (std::is_same_v<B, UnionBody>) {
                for (const auto& part : body.parts)
                    if (contains(*part, x)) return true;
                return false;
            } else if constexpr (std::is_same_v<B, CylinderBody>) {
                return contains(*body.base, head(x, body.base->dim));
            } else {
                return contains(*body.base, apply_affine(invert(body.map), x));
            }
        },
        c.body);
}

Point RationalCurve::at(const Scalar& t) const {
    Scalar den = d0 + d1 * t;
    return Scalar(1) / den * (u + t * v);
}

bool RationalCurve::is_constant() const {
    if (d1 == 0) return v.is_zero();
    // (u + t v)/(d0 + d1 t) constant c requires v = c d1 and u = c d0.
    return d1 * u == d0 * v;
}

Point RationalCurve::constant_value() const {
    if (d1 != 0) return Scalar(1) / d1 * v;
    return Scalar(1) / d0 * u;
}

namespace {

// Parameters t with curve(t) = p: per-coordinate linear equations
// (v_r - p_r d1) t = p_r d0 - u_r. Returns the unique solution, nullopt if
// none. The all-t case cannot occur for a non-constant curve.
std::optional<Scalar> solve_point_on_curve(const RationalCurve& curve, const Point& p) {
    std::optional<Scalar> t;
    bool any_nonzero = false;
    for (std::size_t r = 0; r < p.dim(); ++r) {
        Scalar a = curve.v[r] - p[r] * curve.d1;
        Scalar b = p[r] * curve.d0 - curve.u[r];
        if (a == 0) {
            if (b != 0) return std::nullopt;
            continue;
        }
        any_nonzero = true;
        Scalar cand = b / a;
        if (t && *t != cand) return std::nullopt;
        t = cand;
    }
    if (!any_nonzero) return std::nullopt;
    return t;
}

void merge_witnesses(std::vector<RootWitness>& into, std::vector<RootWitness> more) {
    for (auto& w : more) {
        bool dup = false;
        for (const auto& have : into)
            if (compare_witness(have, w) == 0) {
                dup = true;
                break;
            }
        if (!dup) into.push_back(std::move(w));
    }
}

RationalCurve pullback(const AffineMap& inv_map, const RationalCurve& curve) {
    RationalCurve out;
    out.u = mat_vec(inv_map.matrix, curve.u) + curve.d0 * inv_map.translation;
    out.v = mat_vec(inv_map.matrix, curve.v) + curve.d1 * inv_map.translation;
    out.d0 = curve.d0;
    out.d1 = curve.d1;
    return out;
}

LineIntersection intersect_body(const Cloud& c, const RationalCurve& curve,
                                const std::optional<Scalar>& lo, const std::optional<Scalar>& hi);

}  // namespace

LineIntersection intersect_curve(const Cloud& c, const RationalCurve& curve,
                                 const std::optional<Scalar>& lo,
                                 const std::optional<Scalar>& hi) {
    require_dim(curve.dim(), c.dim, "intersect_curve");
    if (curve.is_constant()) {
        if (contains(c, curve.constant_value()))
            return LineIntersection::make_infinite("constant curve lies in the cloud");
        return {};
    }
    LineIntersection result = intersect_body(c, curve, lo, hi);
    if (result.infinite) return result;
    // Punctures remove single parameters.
    for (const auto& p : c.punctures) {
        auto t = solve_point_on_curve(curve, p);
        if (!t) continue;
        std::erase_if(result.witnesses,
                      [&](const RootWitness& w) { return compare_witness_to_scalar(w, *t) == 0; });
    }
    return result;
}

namespace {

LineIntersection intersect_body(const Cloud& c, const RationalCurve& curve,
                                const std::optional<Scalar>& lo, const std::optional<Scalar>& hi) {
    auto in_window = [&](const Scalar& t) {
        return (!lo || t > *lo) && (!hi || t < *hi);
    };
    return std::visit(
        [&](const auto& body) -> LineIntersection {
            using B = std::decay_t<decltype(body)>;
            LineIntersection result;
            if constexpr (std::is_same_v<B, FiniteSetBody>) {
                std::vector<RootWitness> ws;
                for (const auto& p : body.points) {
                    auto t = solve_point_on_curve(curve, p);
                    if (t && in_window(*t)) ws.push_back(RootWitness::exact_root(*t));
                }
                merge_witnesses(result.witnesses, std::move(ws));
            } else if constexpr (std::is_same_v<B, SphereBody>) {
                // |curve(t) - m|^2 = rho, denominators cleared:
                // sum (A_r t + B_r)^2 - rho (d1 t + d0)^2 = 0.
                Scalar c2 = -body.radius_sq * curve.d1 * curve.d1;
                Scalar c1 = -2 * body.radius_sq * curve.d0 * curve.d1;
                Scalar c0 = -body.radius_sq * curve.d0 * curve.d0;
                for (std::size_t r = 0; r < curve.dim(); ++r) {
                    Scalar a = curve.v[r] - body.center[r] * curve.d1;
                    Scalar b = curve.u[r] - body.center[r] * curve.d0;
                    c2 += a * a;
                    c1 += 2 * a * b;
                    c0 += b * b;
                }
                RootReport roots = quadratic_roots_in_interval(c2, c1, c0, lo, hi);
                if (roots.identically_zero)
                    return LineIntersection::make_infinite("curve lies on the sphere");
                result.witnesses = std::move(roots.roots);
            } else if constexpr (std::is_same_v<B, UnionBody>) {
                for (const auto& part : body.parts) {
                    LineIntersection sub = intersect_curve(*part, curve, lo, hi);
                    if (sub.infinite) return sub;
                    merge_witnesses(result.witnesses, std::move(sub.witnesses));
                }
            } else if constexpr (std::is_same_v<B, CylinderBody>) {
                std::size_t k = body.base->dim;
                RationalCurve projected{head(curve.u, k), head(curve.v, k), curve.d0, curve.d1};
                LineIntersection sub = intersect_curve(*body.base, projected, lo, hi);
                if (sub.infinite)
                    return LineIntersection::make_infinite("cylinder fiber: " + sub.reason);
                result.witnesses = std::move(sub.witnesses);
            } else {
                return intersect_curve(*body.base, pullback(invert(body.map), curve), lo, hi);
            }
            std::sort(result.witnesses.begin(), result.witnesses.end(),
                      [](const RootWitness& a, const RootWitness& b) {
                          return compare_witness(a, b) < 0;
                      });
            return result;
        },
        c.body);
}

}  // namespace

LineIntersection intersect_line(const Cloud& c, const Line& line) {
    RationalCurve curve{line.base, line.dir, 1, 0};
    return intersect_curve(c, curve, std::nullopt, std::nullopt);
}

CloudDecision is_cloud_around(const Cloud& c, const Point& a) {
    require_dim(a.dim(), c.dim, "is_cloud_around");
    return std::visit(
        [&](const auto& body) -> CloudDecision {
            using B = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<B, FiniteSetBody> || std::is_same_v<B, SphereBody>) {
                return {};
            } else if constexpr (std::is_same_v<B, UnionBody>) {
                for (const auto& part : body.parts) {
                    CloudDecision d = is_cloud_around(*part, a);
                    if (!d.ok) return d;
                }
                return {};
            } else if constexpr (std::is_same_v<B, CylinderBody>) {
                std::size_t k = body.base->dim;
                Point a_head = head(a, k);
                if (contains(*body.base, a_head)) {
                    CloudDecision d;
                    d.ok = false;
                    d.reason = "vertical fiber through the query point lies in the cylinder";
                    d.witness = Line(a, Point::unit(c.dim, k));
                    return d;
                }
                CloudDecision sub = is_cloud_around(*body.base, a_head);
                if (sub.ok) return {};
                CloudDecision d;
                d.ok = false;
                d.reason = "base cloud failure: " + sub.reason;
                if (sub.witness) {
                    Point lifted_base = concat(sub.witness->base, tail(a, k));
                    Point lifted_dir = concat(sub.witness->dir, Point::zero(c.dim - k));
                    d.witness = Line(lifted_base, lifted_dir);
                }
                return d;
            } else {
                CloudDecision sub = is_cloud_around(*body.base, apply_affine(invert(body.map), a));
                if (sub.ok) return {};
                CloudDecision d;
                d.ok = false;
                d.reason = "affine preimage failure: " + sub.reason;
                if (sub.witness) d.witness = apply_affine(body.map, *sub.witness);
                return d;
            }
        },
        c.body);
}

Cloud extend(const Cloud& c, std::size_t target_dim, const Point& offset, bool auto_puncture) {
    std::size_t k = c.dim;
    if (k < 2 || k >= target_dim) throw Error(ErrorKind::BadDimensions, "extend needs 2 <= K < N");
    require_dim(offset.dim(), target_dim - k, "extension offset");
    CloudDecision d = is_cloud_around(c, c.center);
    if (!d.ok) throw Error(ErrorKind::NotACloud, "extend base: " + d.reason);
    Cloud base = c;
    if (contains(base, base.center)) {
        if (!auto_puncture) throw Error(ErrorKind::CenterInCloud, "extend base contains its center");
        base = base.with_puncture(base.center);
    }
    Cloud out;
    out.dim = target_dim;
    out.center = concat(base.center, offset);
    out.body = CylinderBody{std::make_shared<Cloud>(std::move(base)), offset};
    return out;
}

std::vector<Cloud> extend_family(const std::vector<Cloud>& cs, std::size_t target_dim) {
    std::vector<Cloud> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(extend(c, target_dim, Point::zero(target_dim - c.dim)));
    return out;
}

}  // namespace cloudcover
