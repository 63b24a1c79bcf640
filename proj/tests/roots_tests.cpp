#include "cloudcover/roots.hpp"
#include "cloudcover/sampler.hpp"

#include <doctest.h>

using namespace cloudcover;

namespace {

// Independent oracle: count real roots of c2 t^2 + c1 t + c0 in (lo, hi) by
// rational factoring when the discriminant is a perfect square, otherwise by
// locating each irrational root with its own bisection certificate.
std::size_t oracle_count(const Scalar& c2, const Scalar& c1, const Scalar& c0, const Scalar& lo,
                         const Scalar& hi) {
    auto in = [&](const Scalar& t) { return lo < t && t < hi; };
    if (c2 == 0) {
        if (c1 == 0) return 0;  // constant (identically-zero handled by caller)
        return in(-c0 / c1) ? 1 : 0;
    }
    Scalar disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return 0;
    if (auto r = exact_sqrt(disc)) {
        Scalar r1 = (-c1 - *r) / (2 * c2), r2 = (-c1 + *r) / (2 * c2);
        std::size_t n = in(r1) ? 1 : 0;
        if (r2 != r1 && in(r2)) ++n;
        return n;
    }
    // Two irrational roots around the vertex; bracket sqrt(disc) tightly
    // enough that each root is strictly classified against lo and hi.
    auto eval = [&](const Scalar& t) { return (c2 * t + c1) * t + c0; };
    std::size_t n = 0;
    Scalar tol(1, 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto [sl, sh] = sqrt_bracket(disc, tol);
        bool decided = true;
        n = 0;
        for (int branch : {-1, 1}) {
            Scalar a = (-c1 + branch * sl) / (2 * c2);
            Scalar b = (-c1 + branch * sh) / (2 * c2);
            if (a > b) std::swap(a, b);
            if (b <= lo || a >= hi) continue;        // clearly outside
            if (a > lo && b < hi) {                  // clearly inside
                ++n;
                continue;
            }
            // Root straddles an endpoint bracket; endpoints are rational so
            // eval(endpoint) != 0 for an irrational root — refine further.
            if (eval(lo) == 0 || eval(hi) == 0) return n;  // unreachable for irrational roots
            decided = false;
        }
        if (decided) return n;
        tol /= 4096;
    }
    return n;
}

}  // namespace

TEST_CASE("stated quadratic examples") {
    auto r1 = quadratic_roots_in_interval(1, 0, -1, Scalar(-2), Scalar(2));
    REQUIRE(r1.count() == 2);
    CHECK(*r1.roots[0].exact == -1);
    CHECK(*r1.roots[1].exact == 1);

    CHECK(quadratic_roots_in_interval(1, 0, 1, Scalar(-2), Scalar(2)).count() == 0);

    auto r3 = quadratic_roots_in_interval(1, 0, -2, Scalar(0), Scalar(2));
    REQUIRE(r3.count() == 1);
    CHECK(!r3.roots[0].is_exact());
    CHECK(r3.roots[0].lo >= 1);
    CHECK(r3.roots[0].hi <= 2);
    CHECK(r3.roots[0].lo * r3.roots[0].lo < 2);
    CHECK(r3.roots[0].hi * r3.roots[0].hi > 2);
}

TEST_CASE("degenerate cases") {
    CHECK(quadratic_roots_in_interval(0, 0, 0, std::nullopt, std::nullopt).identically_zero);
    CHECK(quadratic_roots_in_interval(0, 0, 5, std::nullopt, std::nullopt).count() == 0);
    auto lin = quadratic_roots_in_interval(0, 2, -3, std::nullopt, std::nullopt);
    REQUIRE(lin.count() == 1);
    CHECK(*lin.roots[0].exact == Scalar(3, 2));
    // Double root counts once; open interval excludes endpoint roots.
    CHECK(quadratic_roots_in_interval(1, -2, 1, Scalar(0), Scalar(2)).count() == 1);
    CHECK(quadratic_roots_in_interval(1, 0, -1, Scalar(-1), Scalar(1)).count() == 0);
    CHECK(quadratic_roots_in_interval(1, 0, -1, Scalar(-1), std::nullopt).count() == 1);
}

TEST_CASE("root counting matches brute-force oracle on random quadratics") {
    Sampler rng(606);
    int nontrivial = 0;
    for (int i = 0; i < 500; ++i) {
        Scalar c2 = rng.next_scalar(6), c1 = rng.next_scalar(6), c0 = rng.next_scalar(6);
        if (c2 == 0 && c1 == 0 && c0 == 0) continue;
        Scalar lo = rng.next_scalar(8), hi = lo + scalar_abs(rng.next_nonzero_scalar(8));
        auto report = quadratic_roots_in_interval(c2, c1, c0, lo, hi);
        CHECK(!report.identically_zero);
        CHECK(report.count() == oracle_count(c2, c1, c0, lo, hi));
        ++nontrivial;
        // Each witness must actually lie in the open interval.
        for (const auto& w : report.roots) {
            if (w.is_exact()) {
                CHECK(((c2 * *w.exact + c1) * *w.exact + c0) == 0);
                CHECK(lo < *w.exact);
                CHECK(*w.exact < hi);
            } else {
                CHECK(w.poly.eval(w.lo) * w.poly.eval(w.hi) < 0);
                CHECK(w.lo >= lo);
                CHECK(w.hi <= hi);
            }
        }
    }
    CHECK(nontrivial > 400);
}

TEST_CASE("witness comparison is an exact algebraic order") {
    // sqrt(2) from two different scaled polynomials compares equal.
    auto a = quadratic_roots_in_interval(1, 0, -2, Scalar(0), Scalar(2)).roots[0];
    auto b = quadratic_roots_in_interval(3, 0, -6, Scalar(1), Scalar(3)).roots[0];
    CHECK(compare_witness(a, b) == 0);

    // sqrt(2) vs sqrt(3), and vs rationals.
    auto c = quadratic_roots_in_interval(1, 0, -3, Scalar(0), Scalar(2)).roots[0];
    CHECK(compare_witness(a, c) == -1);
    CHECK(compare_witness(c, a) == 1);
    CHECK(compare_witness_to_scalar(a, Scalar(1)) == 1);
    CHECK(compare_witness_to_scalar(a, Scalar(3, 2)) == -1);
    CHECK(compare_witness_to_scalar(RootWitness::exact_root(Scalar(7)), Scalar(7)) == 0);

    // Conjugate branches of one polynomial are distinct.
    auto both = quadratic_roots_in_interval(1, 0, -2, Scalar(-2), Scalar(2));
    REQUIRE(both.count() == 2);
    CHECK(compare_witness(both.roots[0], both.roots[1]) == -1);
}

TEST_CASE("refine_witness shrinks the isolating interval") {
    auto w = quadratic_roots_in_interval(1, 0, -2, Scalar(0), Scalar(2)).roots[0];
    Scalar width = w.hi - w.lo;
    refine_witness(w);
    CHECK(w.hi - w.lo < width);
    CHECK(w.poly.eval(w.lo) * w.poly.eval(w.hi) < 0);
}
