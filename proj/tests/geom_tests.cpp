#include "cloudcover/geom.hpp"
#include "cloudcover/sampler.hpp"

#include <doctest.h>

using namespace cloudcover;

namespace {
Point pt(std::initializer_list<int> xs) {
    std::vector<Scalar> c;
    for (int x : xs) c.emplace_back(x);
    return Point(std::move(c));
}
}  // namespace

TEST_CASE("line_through canonical form") {
    Line a = line_through(pt({0, 0}), pt({2, 0}));
    CHECK(a.base == pt({0, 0}));
    CHECK(a.dir == pt({1, 0}));

    Line b = line_through(pt({0, 0}), pt({2, 4}));
    CHECK(b.base == pt({0, 0}));
    CHECK(b.dir == pt({1, 2}));

    // Base is the foot of the perpendicular from the origin.
    Line c = line_through(pt({1, 1}), pt({3, 2}));
    CHECK(c.base == Point(std::vector<Scalar>{Scalar(-1, 5), Scalar(2, 5)}));
    CHECK(c.contains_point(pt({1, 1})));
    CHECK(c.contains_point(pt({3, 2})));
    CHECK(dot(c.base, c.dir) == 0);
}

TEST_CASE("line_through rejects coincident points and dim mismatch") {
    CHECK_THROWS_AS(line_through(pt({1, 1}), pt({1, 1})), Error);
    CHECK_THROWS_AS(line_through(pt({1, 1}), pt({1, 1, 1})), Error);
}

TEST_CASE("canonical line equality over random pairs") {
    Sampler rng(101);
    for (int i = 0; i < 200; ++i) {
        std::size_t dim = 2 + static_cast<std::size_t>(rng.next_int(0, 2));
        Point p = rng.next_point(dim), q = rng.next_point(dim);
        if (p == q) continue;
        Line l1 = line_through(p, q);
        CHECK(l1 == line_through(q, p));
        CHECK(l1 == line_through(p, p + Scalar(3) * (q - p)));
    }
}

TEST_CASE("param_of recovers parameters and rejects off-line points") {
    Line l = line_through(pt({0, 0}), pt({1, 2}));
    CHECK(*l.param_of(pt({1, 2})) == 1);
    CHECK(*l.param_of(pt({0, 0})) == 0);
    CHECK(!l.param_of(pt({1, 3})).has_value());
}

TEST_CASE("points_collinear exact minors") {
    CHECK(points_collinear({pt({0, 0, 0}), pt({1, 0, 0}), pt({2, 0, 0}), pt({3, 0, 0})}));
    CHECK(!points_collinear({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
    CHECK(points_collinear({pt({1, 1}), pt({1, 1})}));
}

TEST_CASE("apply_affine matches stated examples") {
    CHECK(apply_affine(AffineMap::identity(2), pt({3, 4})) == pt({3, 4}));

    AffineMap t1 = AffineMap::translation_by(pt({-1, -2}));
    CHECK(apply_affine(t1, pt({1, 2})) == pt({0, 0}));

    // Shear sending e3 to e3 + 2 e1.
    Matrix shear = Matrix::identity(3);
    shear.at(0, 2) = 2;
    AffineMap f = AffineMap::linear(shear);
    CHECK(apply_affine(f, pt({0, 0, 1})) == pt({2, 0, 1}));
    CHECK(apply_affine(compose(invert(f), f), pt({5, 6, 7})) == pt({5, 6, 7}));
}

TEST_CASE("invert basics") {
    CHECK(invert(AffineMap::identity(3)) == AffineMap::identity(3));
    AffineMap t = AffineMap::translation_by(pt({2, -5}));
    CHECK(invert(t) == AffineMap::translation_by(pt({-2, 5})));
    Matrix sing(2, 2);
    sing.at(0, 0) = 1;
    CHECK_THROWS_AS(invert(AffineMap::linear(sing)), Error);
}

TEST_CASE("affine round trips on random invertible maps") {
    Sampler rng(202);
    for (int i = 0; i < 200; ++i) {
        std::size_t dim = 2 + static_cast<std::size_t>(rng.next_int(0, 2));
        AffineMap f = rng.next_invertible_affine(dim);
        Point x = rng.next_point(dim);
        CHECK(apply_affine(invert(f), apply_affine(f, x)) == x);
    }
}

TEST_CASE("apply_affine on lines preserves point sets") {
    Sampler rng(303);
    for (int i = 0; i < 100; ++i) {
        AffineMap f = rng.next_invertible_affine(3);
        Point p = rng.next_point(3), q = rng.next_point(3);
        if (p == q) continue;
        Line img = apply_affine(f, line_through(p, q));
        CHECK(img == line_through(apply_affine(f, p), apply_affine(f, q)));
    }
}

TEST_CASE("extend_to_basis stated examples") {
    AffineMap f1 = extend_to_basis({pt({1, 0, 0}), pt({0, 1, 0})}, 3);
    CHECK(apply_affine(f1, pt({1, 0, 0})) == pt({1, 0, 0}));
    CHECK(apply_affine(f1, pt({0, 1, 0})) == pt({0, 1, 0}));

    AffineMap f2 = extend_to_basis({pt({1, 1}), pt({0, 1})}, 2);
    CHECK(apply_affine(f2, pt({1, 1})) == pt({1, 0}));
    CHECK(apply_affine(f2, pt({0, 1})) == pt({0, 1}));

    AffineMap f3 = extend_to_basis({pt({2, 0, 0})}, 3);
    CHECK(apply_affine(f3, pt({2, 0, 0})) == pt({1, 0, 0}));
    CHECK(f3.invertible());

    CHECK_THROWS_AS(extend_to_basis({pt({1, 0}), pt({2, 0})}, 2), Error);
}

TEST_CASE("extend_to_basis always full rank on random independent inputs") {
    Sampler rng(404);
    for (int i = 0; i < 100; ++i) {
        std::size_t dim = 3 + static_cast<std::size_t>(rng.next_int(0, 2));
        std::vector<Point> vs;
        for (int k = 0; k < 2; ++k) vs.push_back(rng.next_nonzero_point(dim));
        if (points_collinear({Point::zero(dim), vs[0], vs[1]})) continue;
        AffineMap f = extend_to_basis(vs, dim);
        CHECK(f.rank == dim);
        CHECK(apply_affine(f, vs[0]) == Point::unit(dim, 0));
        CHECK(apply_affine(f, vs[1]) == Point::unit(dim, 1));
    }
}

TEST_CASE("matrix det, rank and inverse agree") {
    Sampler rng(505);
    for (int i = 0; i < 50; ++i) {
        Matrix m = rng.next_invertible_matrix(3);
        CHECK(mat_det(m) != 0);
        CHECK(mat_rank(m) == 3);
        CHECK(mat_mul(m, mat_inverse(m)) == Matrix::identity(3));
    }
    Matrix z(3, 3);
    CHECK(mat_det(z) == 0);
    CHECK(mat_rank(z) == 0);
    CHECK_THROWS_AS(mat_inverse(z), Error);
}
