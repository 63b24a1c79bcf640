#include "cloudcover/projective.hpp"

#include <algorithm>

namespace cloudcover {

namespace {

void canonicalize(Point& v) {
    std::size_t lead = 0;
    while (lead < v.dim() && v[lead] == 0) ++lead;
    if (lead == v.dim())
        throw Error(ErrorKind::DimensionMismatch, "zero vector has no projective class");
    Scalar scale = v[lead];
    for (auto& c : v.coords) c /= scale;
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
}

std::size_t span_rank(const std::vector<const Point*>& vs) {
    Matrix m(vs.size(), vs[0]->dim());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs[0]->dim(); ++j) m.at(i, j) = (*vs[i])[j];
    return mat_rank(m);
}

}  // namespace

ProjectivePoint::ProjectivePoint(Point representative) : homog(std::move(representative)) {
    if (homog.dim() < 2)
        throw Error(ErrorKind::DimensionMismatch, "projective point needs m >= 1");
    canonicalize(homog);
}

ProjectiveLine::ProjectiveLine(std::vector<ProjectivePoint> generators)
    : p(generators.at(0)), q(generators.at(1)) {
    // Pick the lexicographically smallest independent spanning pair.
    bool found = false;
    for (std::size_t i = 0; i < generators.size() && !found; ++i)
        for (std::size_t j = i + 1; j < generators.size() && !found; ++j) {
            if (span_rank({&generators[i].homog, &generators[j].homog}) == 2) {
                p = generators[i];
                q = generators[j];
                found = true;
            }
        }
    if (!found) throw Error(ErrorKind::DependentInput, "projective line needs two distinct points");
    if (lex_less(q.homog, p.homog)) std::swap(p, q);
    std::vector<const Point*> all{&p.homog, &q.homog};
    for (const auto& g : generators) all.push_back(&g.homog);
    if (span_rank(all) != 2)
        throw Error(ErrorKind::DependentInput, "generators do not span a single line");
}

bool ProjectiveLine::contains(const ProjectivePoint& x) const {
    return span_rank({&p.homog, &q.homog, &x.homog}) == 2;
}

ProjectiveMap::ProjectiveMap(Matrix m) : matrix(std::move(m)) {
    if (matrix.rows != matrix.cols || matrix.rows < 2)
        throw Error(ErrorKind::DimensionMismatch, "projective map matrix must be square, m >= 1");
    if (mat_det(matrix) == 0) throw Error(ErrorKind::NotInvertible, "projective map");
    auto lead = std::find_if(matrix.data.begin(), matrix.data.end(),
                             [](const Scalar& s) { return s != 0; });
    Scalar scale = *lead;
    for (auto& e : matrix.data) e /= scale;
}

ProjectiveMap ProjectiveMap::identity(std::size_t m) {
    return ProjectiveMap(Matrix::identity(m + 1));
}

ProjectivePoint embed(const Point& x) {
    Point h = x;
    h.coords.push_back(1);
    return ProjectivePoint(std::move(h));
}

bool is_at_infinity(const ProjectivePoint& p) { return p.homog[p.proj_dim()] == 0; }

Point unembed(const ProjectivePoint& p) {
    std::size_t m = p.proj_dim();
    const Scalar& last = p.homog[m];
    if (last == 0) throw Error(ErrorKind::AtInfinity, "point outside the affine chart");
    Point out = head(p.homog, m);
    for (auto& c : out.coords) c /= last;
    return out;
}

ProjectivePoint point_at_infinity(const Line& line) {
    Point h = line.dir;
    h.coords.push_back(0);
    return ProjectivePoint(std::move(h));
}

ProjectivePoint axis_infinity(std::size_t m, std::size_t axis) {
    Point h = Point::zero(m + 1);
    h[axis] = 1;
    return ProjectivePoint(std::move(h));
}

ProjectivePoint proj_apply(const ProjectiveMap& map, const ProjectivePoint& p) {
    if (map.proj_dim() != p.proj_dim())
        throw Error(ErrorKind::DimensionMismatch, "proj_apply");
    return ProjectivePoint(mat_vec(map.matrix, p.homog));
}

ProjectiveMap proj_invert(const ProjectiveMap& map) {
    return ProjectiveMap(mat_inverse(map.matrix));
}

ProjectiveMap proj_compose(const ProjectiveMap& f, const ProjectiveMap& g) {
    return ProjectiveMap(mat_mul(f.matrix, g.matrix));
}

ProjectiveMap build_proj_collineation(const std::vector<Point>& xs, const std::vector<Point>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw Error(ErrorKind::DimensionMismatch, "need matching vector families");
    std::size_t n = xs.size();
    for (const auto& v : xs)
        if (v.dim() != n) throw Error(ErrorKind::DimensionMismatch, "need m+1 vectors in R^{m+1}");
    for (const auto& v : ys)
        if (v.dim() != n) throw Error(ErrorKind::DimensionMismatch, "need m+1 vectors in R^{m+1}");
    Matrix x(n, n), y(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            x.at(i, j) = xs[j][i];
            y.at(i, j) = ys[j][i];
        }
    if (mat_rank(x) != n || mat_rank(y) != n)
        throw Error(ErrorKind::DependentInput, "input families must be linearly independent");
    return ProjectiveMap(mat_mul(y, mat_inverse(x)));
}

bool proj_collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    if (p.proj_dim() != q.proj_dim() || p.proj_dim() != r.proj_dim())
        throw Error(ErrorKind::DimensionMismatch, "proj_collinear");
    return span_rank({&p.homog, &q.homog, &r.homog}) <= 2;
}

}  // namespace cloudcover
