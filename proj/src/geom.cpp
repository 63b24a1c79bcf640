#include "cloudcover/geom.hpp"

#include <algorithm>

namespace cloudcover {

namespace {

void require_same_dim(const Point& a, const Point& b, const char* ctx) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, ctx);
}

}  // namespace

Point Point::unit(std::size_t dim, std::size_t axis) {
    Point p = zero(dim);
    p[axis] = 1;
    return p;
}

bool Point::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return c == 0; });
}

Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b, "point addition");
    Point r = a;
    for (std::size_t i = 0; i < b.dim(); ++i) r[i] += b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b, "point subtraction");
    Point r = a;
    for (std::size_t i = 0; i < b.dim(); ++i) r[i] -= b[i];
    return r;
}

Point operator*(const Scalar& c, const Point& p) {
    Point r = p;
    for (auto& x : r.coords) x *= c;
    return r;
}

Scalar dot(const Point& a, const Point& b) {
    require_same_dim(a, b, "dot product");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Scalar norm_sq(const Point& p) { return dot(p, p); }

Scalar norm_inf(const Point& p) {
    Scalar m = 0;
    for (const auto& c : p.coords) m = std::max(m, scalar_abs(c));
    return m;
}

Point head(const Point& p, std::size_t k) {
    return Point(std::vector<Scalar>(p.coords.begin(), p.coords.begin() + k));
}

Point tail(const Point& p, std::size_t k) {
    return Point(std::vector<Scalar>(p.coords.begin() + k, p.coords.end()));
}

Point concat(const Point& a, const Point& b) {
    Point r = a;
    r.coords.insert(r.coords.end(), b.coords.begin(), b.coords.end());
    return r;
}

bool points_collinear(const std::vector<Point>& pts) {
    if (pts.size() <= 2) return true;
    // Find a nonzero difference to anchor the direction.
    const Point& p0 = pts[0];
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i] - p0).is_zero()) {
            anchor = i;
            break;
        }
    }
    if (anchor == 0) return true;  // all points equal
    Point d = pts[anchor] - p0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Point e = pts[i] - p0;
        for (std::size_t r = 0; r < d.dim(); ++r) {
            for (std::size_t c = r + 1; c < d.dim(); ++c) {
                if (d[r] * e[c] - d[c] * e[r] != 0) return false;
            }
        }
    }
    return true;
}

Line::Line(Point base_pt, Point direction) : base(std::move(base_pt)), dir(std::move(direction)) {
    if (base.dim() != dir.dim()) throw Error(ErrorKind::DimensionMismatch, "line base vs dir");
    if (dir.is_zero()) throw Error(ErrorKind::CoincidentPoints, "line needs a nonzero direction");
    std::size_t lead = 0;
    while (dir[lead] == 0) ++lead;
    Scalar scale = dir[lead];
    for (auto& c : dir.coords) c /= scale;
    // Foot of the perpendicular from the origin.
    Scalar t = dot(base, dir) / dot(dir, dir);
    base = base - t * dir;
}

std::optional<Scalar> Line::param_of(const Point& x) const {
    if (x.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "point vs line");
    Point d = x - base;
    // t is forced by any coordinate where dir is nonzero.
    std::size_t lead = 0;
    while (dir[lead] == 0) ++lead;
    Scalar t = d[lead] / dir[lead];
    if (x == at(t)) return t;
    return std::nullopt;
}

Line line_through(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "line_through");
    if (p == q) throw Error(ErrorKind::CoincidentPoints, "line_through needs distinct points");
    return Line(p, q - p);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Point mat_vec(const Matrix& m, const Point& x) {
    if (m.cols != x.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix times vector");
    Point r = Point::zero(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * x[j];
    return r;
}

std::size_t mat_rank(const Matrix& m) {
    Matrix w = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w.cols && rank < w.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < w.rows && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows) continue;
        for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
        for (std::size_t i = rank + 1; i < w.rows; ++i) {
            if (w.at(i, col) == 0) continue;
            Scalar f = w.at(i, col) / w.at(rank, col);
            for (std::size_t j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Scalar mat_det(const Matrix& m) {
    if (m.rows != m.cols) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
    Matrix w = m;
    Scalar det = 1;
    for (std::size_t col = 0; col < w.cols; ++col) {
        std::size_t pivot = col;
        while (pivot < w.rows && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(col, j), w.at(pivot, j));
            det = -det;
        }
        det *= w.at(col, col);
        for (std::size_t i = col + 1; i < w.rows; ++i) {
            if (w.at(i, col) == 0) continue;
            Scalar f = w.at(i, col) / w.at(col, col);
            for (std::size_t j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return det;
}

Matrix mat_inverse(const Matrix& m) {
    if (m.rows != m.cols) throw Error(ErrorKind::NotInvertible, "non-square matrix");
    std::size_t n = m.rows;
    Matrix w = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Error(ErrorKind::NotInvertible, "singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(w.at(col, j), w.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Scalar p = w.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            Scalar f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

AffineMap::AffineMap(Matrix m, Point t) : matrix(std::move(m)), translation(std::move(t)) {
    if (matrix.rows != translation.dim())
        throw Error(ErrorKind::DimensionMismatch, "affine map matrix vs translation");
    rank = mat_rank(matrix);
}

AffineMap AffineMap::identity(std::size_t n) {
    return AffineMap(Matrix::identity(n), Point::zero(n));
}

AffineMap AffineMap::translation_by(const Point& v) {
    return AffineMap(Matrix::identity(v.dim()), v);
}

AffineMap AffineMap::linear(Matrix m) {
    std::size_t rows = m.rows;
    return AffineMap(std::move(m), Point::zero(rows));
}

Point apply_affine(const AffineMap& f, const Point& x) {
    if (x.dim() != f.in_dim()) throw Error(ErrorKind::DimensionMismatch, "apply_affine");
    return mat_vec(f.matrix, x) + f.translation;
}

Line apply_affine(const AffineMap& f, const Line& line) {
    if (!f.invertible()) throw Error(ErrorKind::NotInvertible, "line image needs an invertible map");
    return Line(apply_affine(f, line.base), mat_vec(f.matrix, line.dir));
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (g.out_dim() != f.in_dim()) throw Error(ErrorKind::DimensionMismatch, "compose");
    return AffineMap(mat_mul(f.matrix, g.matrix), mat_vec(f.matrix, g.translation) + f.translation);
}

AffineMap invert(const AffineMap& f) {
    if (!f.invertible()) throw Error(ErrorKind::NotInvertible, "invert");
    Matrix inv = mat_inverse(f.matrix);
    Point t = Scalar(-1) * mat_vec(inv, f.translation);
    return AffineMap(std::move(inv), std::move(t));
}

AffineMap extend_to_basis(const std::vector<Point>& vs, std::size_t dim) {
    if (vs.size() > dim) throw Error(ErrorKind::DependentInput, "more vectors than dimension");
    // Columns of B: the given vectors, then standard basis vectors that keep
    // the set independent, in index order. The map is B^{-1}.
    std::vector<Point> cols = vs;
    auto rank_of = [&](const std::vector<Point>& c) {
        Matrix m(dim, c.size());
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = c[j][i];
        return mat_rank(m);
    };
    for (const auto& v : vs)
        if (v.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "extend_to_basis");
    if (rank_of(cols) != cols.size()) throw Error(ErrorKind::DependentInput, "extend_to_basis");
    for (std::size_t e = 0; e < dim && cols.size() < dim; ++e) {
        cols.push_back(Point::unit(dim, e));
        if (rank_of(cols) != cols.size()) cols.pop_back();
    }
    Matrix b(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) b.at(i, j) = cols[j][i];
    return AffineMap::linear(mat_inverse(b));
}

}  // namespace cloudcover
