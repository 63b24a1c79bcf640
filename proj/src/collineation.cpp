#include "cloudcover/collineation.hpp"

#include <algorithm>
#include <numeric>

namespace cloudcover {

Point project2(const Point& x) {
    if (x.dim() < 2) throw Error(ErrorKind::DimensionMismatch, "project2 needs dim >= 2");
    return head(x, 2);
}

namespace {

void validate_inputs(const std::vector<Point>& points) {
    if (points.size() < 3)
        throw Error(ErrorKind::CollinearInput, "need at least 3 points");
    std::size_t n_dim = points[0].dim();
    if (n_dim < 2) throw Error(ErrorKind::DimensionMismatch, "points must live in dim >= 2");
    for (const auto& p : points)
        if (p.dim() != n_dim) throw Error(ErrorKind::DimensionMismatch, "mixed point dimensions");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw Error(ErrorKind::DuplicateInput, "duplicate point");
    if (points_collinear(points)) throw Error(ErrorKind::CollinearInput, "collinear points");
}

bool independent_pair(const Point& a, const Point& b) {
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = r + 1; c < a.dim(); ++c)
            if (a[r] * b[c] - a[c] * b[r] != 0) return true;
    return false;
}

}  // namespace

RestrictionCertificate build_restriction_collineation(const std::vector<Point>& points) {
    validate_inputs(points);
    std::size_t n = points.size();
    std::size_t dim = points[0].dim();

    RestrictionCertificate cert;
    cert.reorder.resize(n);
    std::iota(cert.reorder.begin(), cert.reorder.end(), 0);

    if (dim == 2) {
        cert.map = AffineMap::identity(2);
        cert.projected = points;
        return cert;
    }

    AffineMap t1 = AffineMap::translation_by(Scalar(-1) * points[0]);
    std::vector<Point> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = apply_affine(t1, points[i]);

    // First b_i (i > 1) off the line through 0 and b_1 takes the third slot.
    std::size_t third = 0;
    for (std::size_t i = 2; i < n; ++i) {
        if (independent_pair(b[1], b[i])) {
            third = i;
            break;
        }
    }
    if (third == 0) throw Error(ErrorKind::CollinearInput, "no independent third point");
    std::rotate(cert.reorder.begin() + 2, cert.reorder.begin() + third,
                cert.reorder.begin() + third + 1);

    AffineMap t2 = extend_to_basis({b[1], b[third]}, dim);
    std::vector<Point> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = apply_affine(t2, b[cert.reorder[k]]);

    // Deterministic lambda search on the moment curve (t, t^2, ...). Each
    // colliding pair contributes a nonzero polynomial in t, so only finitely
    // many t fail.
    std::vector<Scalar> lambda(dim - 2);
    for (Scalar t = 1;; t += 1) {
        Scalar power = t;
        for (auto& l : lambda) {
            l = power;
            power *= t;
        }
        auto project = [&](const Point& p) {
            Scalar first = p[0];
            for (std::size_t m = 0; m < lambda.size(); ++m) first += lambda[m] * p[m + 2];
            return Point({first, p[1]});
        };
        bool ok = true;
        std::vector<Point> proj(n);
        for (std::size_t k = 0; k < n && ok; ++k) {
            proj[k] = project(c[k]);
            for (std::size_t j = 0; j < k && ok; ++j)
                if (proj[j] == proj[k]) ok = false;
        }
        if (!ok) continue;
        cert.lambda = lambda;
        cert.projected = std::move(proj);
        break;
    }

    Matrix shear = Matrix::identity(dim);
    for (std::size_t i = 2; i < dim; ++i) shear.at(0, i) = cert.lambda[i - 2];
    cert.map = compose(AffineMap::linear(std::move(shear)), compose(t2, t1));
    return cert;
}

std::vector<Cloud> lift_cover(const std::vector<Cloud>& planar, const std::vector<Point>& points) {
    if (planar.size() != points.size())
        throw Error(ErrorKind::DimensionMismatch, "one planar cloud per point");
    RestrictionCertificate cert = build_restriction_collineation(points);
    std::size_t dim = points[0].dim();
    std::vector<Cloud> lifted;
    lifted.reserve(planar.size());
    AffineMap inv = invert(cert.map);
    for (std::size_t k = 0; k < planar.size(); ++k) {
        if (planar[k].dim != 2)
            throw Error(ErrorKind::DimensionMismatch, "planar clouds must live in the plane");
        if (planar[k].center != cert.projected[k])
            throw Error(ErrorKind::CenterMismatch,
                        "planar cloud center must equal the certificate projection");
        CloudDecision d = is_cloud_around(planar[k], planar[k].center);
        if (!d.ok) throw Error(ErrorKind::NotACloud, "planar input: " + d.reason);
        if (dim == 2) {
            lifted.push_back(planar[k]);
            continue;
        }
        Point image = apply_affine(cert.map, points[cert.reorder[k]]);
        Cloud extended = extend(planar[k], dim, tail(image, 2));
        lifted.push_back(Cloud::affine_image(inv, std::move(extended)));
    }
    return lifted;
}

}  // namespace cloudcover
