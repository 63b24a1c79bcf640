#include "cloudcover/roots.hpp"

#include <cassert>

namespace cloudcover {

namespace {

// sign(sqrt(d) - m) for rational d >= 0.
int cmp_sqrt_vs(const Scalar& d, const Scalar& m) {
    if (m < 0) return 1;
    return scalar_sign(d - m * m);
}

// sign of (-c1 + branch*sqrt(disc))/(2*c2) - b, with c2 > 0 and disc > 0
// not a perfect square (so equality is impossible).
int cmp_root_vs_rational(const Quadratic& p, const Scalar& disc, int branch, const Scalar& b) {
    Scalar a = -p.c1 - 2 * p.c2 * b;
    if (branch > 0) {
        if (a >= 0) return 1;
        return cmp_sqrt_vs(disc, -a);
    }
    if (a <= 0) return -1;
    return -cmp_sqrt_vs(disc, a);
}

RootWitness make_irrational(const Quadratic& p, const Scalar& disc, int branch, const Scalar& s_lo,
                            const Scalar& s_hi) {
    RootWitness w;
    w.poly = p;
    w.branch = branch;
    Scalar two_c2 = 2 * p.c2;
    if (branch > 0) {
        w.lo = (-p.c1 + s_lo) / two_c2;
        w.hi = (-p.c1 + s_hi) / two_c2;
    } else {
        w.lo = (-p.c1 - s_hi) / two_c2;
        w.hi = (-p.c1 - s_lo) / two_c2;
    }
    assert(scalar_sign(p.eval(w.lo)) * scalar_sign(p.eval(w.hi)) < 0);
    return w;
}

bool in_open_interval(const RootWitness& w, const std::optional<Scalar>& lo,
                      const std::optional<Scalar>& hi) {
    if (lo && compare_witness_to_scalar(w, *lo) <= 0) return false;
    if (hi && compare_witness_to_scalar(w, *hi) >= 0) return false;
    return true;
}

void clip_interval(RootWitness& w, const std::optional<Scalar>& lo, const std::optional<Scalar>& hi) {
    if (w.is_exact()) return;
    if (lo && *lo > w.lo) w.lo = *lo;
    if (hi && *hi < w.hi) w.hi = *hi;
}

}  // namespace

void refine_witness(RootWitness& w) {
    if (w.is_exact()) return;
    Scalar mid = (w.lo + w.hi) / 2;
    int sm = scalar_sign(w.poly.eval(mid));
    assert(sm != 0);  // isolated roots are irrational here
    if (sm == scalar_sign(w.poly.eval(w.lo)))
        w.lo = mid;
    else
        w.hi = mid;
}

int compare_witness_to_scalar(const RootWitness& w, const Scalar& s) {
    if (w.is_exact()) return scalar_sign(*w.exact - s);
    Scalar disc = w.poly.c1 * w.poly.c1 - 4 * w.poly.c2 * w.poly.c0;
    return cmp_root_vs_rational(w.poly, disc, w.branch, s);
}

int compare_witness(const RootWitness& a, const RootWitness& b) {
    if (a.is_exact() && b.is_exact()) return scalar_sign(*a.exact - *b.exact);
    if (a.is_exact()) return -compare_witness_to_scalar(b, *a.exact);
    if (b.is_exact()) return compare_witness_to_scalar(a, *b.exact);
    // Two irrational quadratic roots share a value only if the polynomials
    // are proportional (a common root forces a degree-2 gcd).
    const Quadratic &p = a.poly, &q = b.poly;
    bool proportional = p.c1 * q.c2 == q.c1 * p.c2 && p.c0 * q.c2 == q.c0 * p.c2;
    if (proportional) {
        if (a.branch == b.branch) return 0;
        return a.branch > b.branch ? 1 : -1;  // c2 > 0: +branch is the larger root
    }
    RootWitness wa = a, wb = b;
    while (!(wa.hi <= wb.lo || wb.hi <= wa.lo)) {
        refine_witness(wa);
        refine_witness(wb);
    }
    return wa.hi <= wb.lo ? -1 : 1;
}

RootReport quadratic_roots_in_interval(const Scalar& c2_in, const Scalar& c1_in, const Scalar& c0_in,
                                       const std::optional<Scalar>& lo,
                                       const std::optional<Scalar>& hi) {
    RootReport report;
    Scalar c2 = c2_in, c1 = c1_in, c0 = c0_in;
    if (c2 == 0 && c1 == 0 && c0 == 0) {
        report.identically_zero = true;
        return report;
    }
    auto admit = [&](RootWitness w) {
        if (!in_open_interval(w, lo, hi)) return;
        clip_interval(w, lo, hi);
        report.roots.push_back(std::move(w));
    };
    if (c2 == 0) {
        if (c1 != 0) admit(RootWitness::exact_root(-c0 / c1));
        return report;
    }
    if (c2 < 0) {
        c2 = -c2;
        c1 = -c1;
        c0 = -c0;
    }
    Quadratic p{c2, c1, c0};
    Scalar disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return report;
    if (disc == 0) {
        admit(RootWitness::exact_root(-c1 / (2 * c2)));
        return report;
    }
    if (auto s = exact_sqrt(disc)) {
        admit(RootWitness::exact_root((-c1 - *s) / (2 * c2)));
        admit(RootWitness::exact_root((-c1 + *s) / (2 * c2)));
        return report;
    }
    // Irrational pair: bracket sqrt(disc) tightly enough that the two root
    // intervals are disjoint (root gap is sqrt(disc)/c2, interval width
    // tol/(2*c2)).
    Scalar tol = 1;
    auto [s_lo, s_hi] = sqrt_bracket(disc, tol);
    while (s_lo == 0) {
        tol /= 2;
        std::tie(s_lo, s_hi) = sqrt_bracket(disc, tol);
    }
    std::tie(s_lo, s_hi) = sqrt_bracket(disc, s_lo / 2);
    admit(make_irrational(p, disc, -1, s_lo, s_hi));
    admit(make_irrational(p, disc, +1, s_lo, s_hi));
    return report;
}

}  // namespace cloudcover
