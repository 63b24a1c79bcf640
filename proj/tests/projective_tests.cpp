#include "cloudcover/projective.hpp"
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

TEST_CASE("embed canonical form and round trip") {
    ProjectivePoint p = embed(pt({3, 4}));
    CHECK(p.homog == Point({Scalar(1), Scalar(4, 3), Scalar(1, 3)}));
    CHECK(embed(pt({0, 0})).homog == pt({0, 0, 1}));
    CHECK(unembed(embed(pt({3, 4}))) == pt({3, 4}));
}

TEST_CASE("unembed examples and the affine chart boundary") {
    CHECK(unembed(ProjectivePoint(pt({3, 4, 1}))) == pt({3, 4}));
    CHECK(unembed(ProjectivePoint(pt({2, 2, 2}))) == pt({1, 1}));
    CHECK_THROWS_AS(unembed(ProjectivePoint(pt({1, 2, 0}))), Error);
    CHECK(is_at_infinity(ProjectivePoint(pt({1, 2, 0}))));
    CHECK(!is_at_infinity(embed(pt({1, 2}))));
}

TEST_CASE("scaling invariance of canonical form") {
    Sampler rng(1515);
    for (int i = 0; i < 300; ++i) {
        Point v = rng.next_nonzero_point(3, 8);
        Scalar c = rng.next_nonzero_scalar(8);
        CHECK(ProjectivePoint(v) == ProjectivePoint(c * v));
    }
}

TEST_CASE("point_at_infinity examples") {
    CHECK(point_at_infinity(line_through(pt({0, 0}), pt({1, 2}))).homog == pt({1, 2, 0}));
    CHECK(point_at_infinity(line_through(pt({5, 5}), pt({6, 7}))).homog == pt({1, 2, 0}));
    CHECK(axis_infinity(3, 1).homog == pt({0, 1, 0, 0}));

    // Joint collinearity with two embedded line points (rank 2).
    Sampler rng(1616);
    for (int i = 0; i < 100; ++i) {
        Point p = rng.next_point(2, 8), q = rng.next_point(2, 8);
        if (p == q) continue;
        Line l = line_through(p, q);
        CHECK(proj_collinear(embed(p), embed(q), point_at_infinity(l)));
    }
}

TEST_CASE("proj_collinear examples") {
    CHECK(proj_collinear(ProjectivePoint(pt({1, 0, 0})), ProjectivePoint(pt({0, 1, 0})),
                         ProjectivePoint(pt({1, 1, 0}))));
    CHECK(!proj_collinear(ProjectivePoint(pt({1, 0, 0})), ProjectivePoint(pt({0, 1, 0})),
                          ProjectivePoint(pt({0, 0, 1}))));
}

TEST_CASE("projective line membership") {
    ProjectiveLine l({ProjectivePoint(pt({1, 0, 0})), ProjectivePoint(pt({0, 1, 0}))});
    CHECK(l.contains(ProjectivePoint(pt({3, 4, 0}))));
    CHECK(!l.contains(ProjectivePoint(pt({0, 0, 1}))));
    CHECK_THROWS_AS(ProjectiveLine({ProjectivePoint(pt({1, 0, 0})), ProjectivePoint(pt({2, 0, 0}))}),
                    Error);
}

TEST_CASE("proj_apply, inverse and composition") {
    ProjectiveMap id = ProjectiveMap::identity(2);
    ProjectivePoint p(pt({1, 2, 3}));
    CHECK(proj_apply(id, p) == p);

    Sampler rng(1717);
    for (int i = 0; i < 100; ++i) {
        ProjectiveMap m(rng.next_invertible_matrix(3));
        ProjectivePoint q(rng.next_nonzero_point(3, 8));
        CHECK(proj_apply(proj_invert(m), proj_apply(m, q)) == q);
        CHECK(proj_apply(proj_compose(proj_invert(m), m), q) == q);
    }
}

TEST_CASE("collineations preserve collinearity") {
    Sampler rng(1818);
    for (int i = 0; i < 300; ++i) {
        ProjectiveMap m(rng.next_invertible_matrix(3));
        Point a = rng.next_nonzero_point(3, 6), b = rng.next_nonzero_point(3, 6);
        Scalar s = rng.next_scalar(6), t = rng.next_scalar(6);
        Point c = s * a + t * b;
        if (c.is_zero()) continue;
        ProjectivePoint pa(a), pb(b), pc(c);
        REQUIRE(proj_collinear(pa, pb, pc));
        CHECK(proj_collinear(proj_apply(m, pa), proj_apply(m, pb), proj_apply(m, pc)));
    }
}

TEST_CASE("build_proj_collineation examples") {
    std::vector<Point> basis = {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    CHECK(build_proj_collineation(basis, basis) == ProjectiveMap::identity(2));

    std::vector<Point> swapped = {pt({0, 1, 0}), pt({1, 0, 0}), pt({0, 0, 1})};
    ProjectiveMap perm = build_proj_collineation(basis, swapped);
    CHECK(proj_apply(perm, ProjectivePoint(basis[0])) == ProjectivePoint(swapped[0]));

    // The Schmerl-style frame: (e_i, 1) -> (e_i, 0), (0,1) -> (0,1) gives
    // (x, s) -> (x, s - sum x_j).
    std::vector<Point> xs = {pt({1, 0, 1}), pt({0, 1, 1}), pt({0, 0, 1})};
    std::vector<Point> ys = {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    ProjectiveMap s = build_proj_collineation(xs, ys);
    CHECK(proj_apply(s, ProjectivePoint(pt({1, 0, 1}))) == ProjectivePoint(pt({1, 0, 0})));
    CHECK(proj_apply(s, ProjectivePoint(pt({0, 0, 1}))) == ProjectivePoint(pt({0, 0, 1})));
    CHECK(proj_apply(s, embed(pt({2, 3}))).homog == ProjectivePoint(pt({2, 3, -4})).homog);

    CHECK_THROWS_AS(build_proj_collineation({pt({1, 0, 0}), pt({2, 0, 0}), pt({0, 0, 1})}, basis),
                    Error);
}

TEST_CASE("postcondition exact on random independent frames") {
    Sampler rng(1919);
    int done = 0;
    while (done < 200) {
        std::size_t m = 3 + static_cast<std::size_t>(rng.next_int(0, 1));
        Matrix x = rng.next_invertible_matrix(m), y = rng.next_invertible_matrix(m);
        std::vector<Point> xs, ys;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Scalar> cx, cy;
            for (std::size_t j = 0; j < m; ++j) {
                cx.push_back(x.at(j, i));
                cy.push_back(y.at(j, i));
            }
            xs.emplace_back(std::move(cx));
            ys.emplace_back(std::move(cy));
        }
        ProjectiveMap s = build_proj_collineation(xs, ys);
        for (std::size_t i = 0; i < m; ++i)
            CHECK(proj_apply(s, ProjectivePoint(xs[i])) == ProjectivePoint(ys[i]));
        ++done;
    }
}

TEST_CASE("embedding is injective on random points") {
    Sampler rng(2020);
    for (int i = 0; i < 500; ++i) {
        Point p = rng.next_point(3, 10), q = rng.next_point(3, 10);
        if (p == q) continue;
        CHECK(embed(p) != embed(q));
    }
}
