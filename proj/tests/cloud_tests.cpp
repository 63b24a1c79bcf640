#include "cloudcover/cloud.hpp"
#include "cloudcover/sampler.hpp"

#include <doctest.h>

using namespace cloudcover;

namespace {
Point pt(std::initializer_list<int> xs) {
    std::vector<Scalar> c;
    for (int x : xs) c.emplace_back(x);
    return Point(std::move(c));
}

Cloud unit_circle() { return Cloud::sphere(pt({0, 0}), 1, pt({0, 0})); }
}  // namespace

TEST_CASE("contains: sphere and cylinder examples") {
    Cloud circle = unit_circle();
    CHECK(contains(circle, pt({1, 0})));
    CHECK(!contains(circle, Point(std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2)})));

    Cloud cyl = extend(circle, 3, pt({0}));
    CHECK(contains(cyl, pt({1, 0, 7})));
    CHECK(!contains(cyl, pt({2, 0, 7})));
}

TEST_CASE("intersect_line: circle along the x axis") {
    auto r = intersect_line(unit_circle(), line_through(pt({0, 0}), pt({1, 0})));
    REQUIRE(r.count() == 2);
    CHECK(*r.witnesses[0].exact == -1);
    CHECK(*r.witnesses[1].exact == 1);
}

TEST_CASE("intersect_line: cylinder extension branches") {
    Cloud cyl = extend(unit_circle(), 3, pt({0}));

    // Vertical line over the center: base center excluded, empty.
    auto vertical = intersect_line(cyl, line_through(pt({0, 0, 0}), pt({0, 0, 1})));
    CHECK(!vertical.infinite);
    CHECK(vertical.count() == 0);

    // Vertical line over a circle point: an infinite fiber.
    auto fiber = intersect_line(cyl, line_through(pt({1, 0, 0}), pt({1, 0, 1})));
    CHECK(fiber.infinite);

    // Slanted line matches the projected planar count exactly.
    Line slanted = line_through(pt({0, 0, 0}), pt({1, 0, 1}));
    auto lifted = intersect_line(cyl, slanted);
    auto planar = intersect_line(unit_circle(), line_through(pt({0, 0}), pt({1, 0})));
    CHECK(!lifted.infinite);
    CHECK(lifted.count() == 2);
    CHECK(lifted.count() == planar.count());
}

TEST_CASE("intersect_line: finite sets, unions and dedup") {
    Cloud fin = Cloud::finite_set({pt({1, 1}), pt({2, 2}), pt({5, 0})}, pt({0, 0}));
    auto r = intersect_line(fin, line_through(pt({0, 0}), pt({1, 1})));
    CHECK(r.count() == 2);

    // Union of two circles sharing intersection points dedups parameters.
    Cloud u = Cloud::union_of({unit_circle(), Cloud::sphere(pt({0, 0}), 1, pt({0, 0}))}, pt({0, 0}));
    CHECK(intersect_line(u, line_through(pt({0, 0}), pt({1, 0}))).count() == 2);

    // Two distinct circles on one line give four parameters.
    Cloud u2 = Cloud::union_of({unit_circle(), Cloud::sphere(pt({5, 0}), 1, pt({0, 0}))}, pt({0, 0}));
    CHECK(intersect_line(u2, line_through(pt({0, 0}), pt({1, 0}))).count() == 4);

    // Irrational parameters dedup across union parts too.
    Cloud u3 = Cloud::union_of({Cloud::sphere(pt({0, 0}), 2, pt({1, 0})),
                                Cloud::sphere(pt({0, 0}), 2, pt({1, 0}))},
                               pt({1, 0}));
    CHECK(intersect_line(u3, line_through(pt({0, 0}), pt({1, 1}))).count() == 2);
}

TEST_CASE("punctures remove single intersection parameters") {
    Cloud c = unit_circle().with_puncture(pt({1, 0}));
    CHECK(!contains(c, pt({1, 0})));
    CHECK(contains(c, pt({-1, 0})));
    auto r = intersect_line(c, line_through(pt({0, 0}), pt({1, 0})));
    REQUIRE(r.count() == 1);
    CHECK(*r.witnesses[0].exact == -1);
}

TEST_CASE("puncture add/remove is identity on contains") {
    Sampler rng(707);
    Cloud base = unit_circle();
    Point punct = pt({0, 1});
    Cloud round = base.with_puncture(punct).without_puncture(punct);
    for (int i = 0; i < 100; ++i) {
        Point probe = rng.next_point(2, 3);
        CHECK(contains(base, probe) == contains(round, probe));
    }
}

TEST_CASE("degenerate sphere is a one-point set") {
    Cloud dot = Cloud::sphere(pt({2, 3}), 0, pt({0, 0}));
    CHECK(contains(dot, pt({2, 3})));
    CHECK(!contains(dot, pt({2, 4})));
    CHECK(intersect_line(dot, line_through(pt({0, 0}), pt({2, 3}))).count() == 1);
}

TEST_CASE("is_cloud_around: positive cases") {
    CHECK(is_cloud_around(unit_circle(), pt({0, 0})).ok);
    Cloud cyl = extend(unit_circle(), 3, pt({5}));
    CHECK(is_cloud_around(cyl, pt({0, 0, 5})).ok);
}

TEST_CASE("is_cloud_around: base center inside base is rejected with a witness") {
    // Circle with the center re-added, so the declared center lies in the body.
    Cloud bad_base = Cloud::union_of({unit_circle(), Cloud::finite_set({pt({0, 0})}, pt({0, 0}))},
                                     pt({0, 0}));
    Cloud bad = Cloud{3, pt({0, 0, 0}),
                      CylinderBody{std::make_shared<Cloud>(bad_base), pt({0})},
                      {}};
    auto decision = is_cloud_around(bad, pt({0, 0, 0}));
    REQUIRE(!decision.ok);
    REQUIRE(decision.witness.has_value());
    CHECK(intersect_line(bad, *decision.witness).infinite);
}

TEST_CASE("extend validates dimensions and auto-punctures") {
    Cloud circle = unit_circle();
    CHECK_THROWS_AS(extend(circle, 2, pt({})), Error);
    CHECK_THROWS_AS(extend(circle, 1, pt({})), Error);

    // Center lies in the body: auto-puncture by default, error when disabled.
    Cloud through_center = Cloud::sphere(pt({1, 0}), 1, pt({0, 0}));
    Cloud ext = extend(through_center, 3, pt({0}));
    CHECK(is_cloud_around(ext, pt({0, 0, 0})).ok);
    CHECK_THROWS_AS(extend(through_center, 3, pt({0}), false), Error);

    // Existing puncture propagates.
    Cloud punctured = through_center.with_puncture(pt({0, 0}));
    Cloud ext2 = extend(punctured, 3, pt({0}));
    CHECK(is_cloud_around(ext2, pt({0, 0, 0})).ok);
}

TEST_CASE("extend: finite-set example meets the diagonal once") {
    Cloud fin = Cloud::finite_set({pt({1, 1})}, pt({0, 0}));
    Cloud ext = extend(fin, 3, pt({0}));
    auto r = intersect_line(ext, line_through(pt({0, 0, 0}), pt({1, 1, 1})));
    REQUIRE(r.count() == 1);
    CHECK(*r.witnesses[0].exact == 1);
}

TEST_CASE("extend_family covers projected samples") {
    std::vector<Cloud> family = {Cloud::sphere(pt({0, 0}), 1, pt({0, 0})),
                                 Cloud::sphere(pt({0, 0}), 4, pt({0, 0})),
                                 Cloud::sphere(pt({0, 0}), 9, pt({0, 0}))};
    auto lifted = extend_family(family, 3);
    REQUIRE(lifted.size() == 3);
    CHECK(contains(lifted[1], pt({2, 0, 5})));
    CHECK(extend_family({}, 3).empty());

    auto single = extend_family({Cloud::finite_set({pt({0, 1})}, pt({0, 0}))}, 3);
    CHECK(contains(single[0], pt({0, 1, -3})));
}

TEST_CASE("extension count identity on random lines through extension centers") {
    Sampler rng(808);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t K = 2 + static_cast<std::size_t>(rng.next_int(0, 1));
        std::size_t N = K + 1 + static_cast<std::size_t>(rng.next_int(0, 3 - K + 1));
        if (N > 5) N = 5;
        Point sph_center = rng.next_point(K, 4);
        Scalar r_sq = scalar_abs(rng.next_nonzero_scalar(4)) + 1;
        Point a = rng.next_point(K, 4);
        Cloud base = Cloud::sphere(sph_center, r_sq, a);
        if (contains(base, a)) base = base.with_puncture(a);
        Point offset = rng.next_point(N - K, 4);
        Cloud ext = extend(base, N, offset);
        Point center = concat(a, offset);

        Point dir = rng.next_nonzero_point(N, 4);
        Line line(center, dir);
        auto lifted = intersect_line(ext, line);
        Point v = head(line.dir, K);
        if (v.is_zero()) {
            CHECK(!lifted.infinite);
            CHECK(lifted.count() == 0);
        } else {
            Line projected(head(line.base, K), v);
            auto planar = intersect_line(base, projected);
            CHECK(lifted.infinite == planar.infinite);
            if (!lifted.infinite) CHECK(lifted.count() == planar.count());
        }
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("collineation transport preserves intersection counts") {
    Sampler rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        AffineMap f = rng.next_invertible_affine(2);
        Point sc = rng.next_point(2, 4);
        Cloud c = Cloud::sphere(sc, scalar_abs(rng.next_nonzero_scalar(4)) + 1, sc);
        Cloud fc = Cloud::affine_image(f, c);
        Point p = rng.next_point(2, 4), q = rng.next_point(2, 4);
        if (p == q) continue;
        Line line = line_through(p, q);
        auto before = intersect_line(c, line);
        auto after = intersect_line(fc, apply_affine(f, line));
        CHECK(before.infinite == after.infinite);
        if (!before.infinite) CHECK(before.count() == after.count());
    }
}

TEST_CASE("cloud predicate implies finite on random lines through the center") {
    Sampler rng(1010);
    Cloud c = extend(unit_circle().with_puncture(pt({0, 1})), 3, pt({2}));
    Point center = pt({0, 0, 2});
    REQUIRE(is_cloud_around(c, center).ok);
    for (int i = 0; i < 500; ++i) {
        Point dir = rng.next_nonzero_point(3, 6);
        CHECK(!intersect_line(c, Line(center, dir)).infinite);
    }
}

TEST_CASE("affine image recursion and center transport") {
    Sampler rng(1111);
    AffineMap f = rng.next_invertible_affine(2);
    Cloud img = Cloud::affine_image(f, unit_circle());
    CHECK(img.center == apply_affine(f, pt({0, 0})));
    CHECK(contains(img, apply_affine(f, pt({1, 0}))));
    CHECK(is_cloud_around(img, img.center).ok);
}
