#pragma once

#include "cloudcover/scalar.hpp"

#include <optional>
#include <vector>

namespace cloudcover {

/// c2*t^2 + c1*t + c0 with rational coefficients.
struct Quadratic {
    Scalar c2, c1, c0;

    Scalar eval(const Scalar& t) const { return (c2 * t + c1) * t + c0; }
    bool is_identically_zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }
    bool operator==(const Quadratic&) const = default;
};

/// One counted real root: either an exact rational, or an isolating open
/// interval (lo, hi) for an irrational root of `poly`, with a strict sign
/// change of `poly` at the endpoints.
struct RootWitness {
    std::optional<Scalar> exact;
    Scalar lo, hi;
    Quadratic poly;
    // For irrational roots: +1 means (-c1 + sqrt(disc))/(2*c2), -1 the other.
    int branch = 0;

    static RootWitness exact_root(Scalar r) {
        RootWitness w;
        w.exact = std::move(r);
        return w;
    }
    bool is_exact() const { return exact.has_value(); }
};

struct RootReport {
    bool identically_zero = false;
    std::vector<RootWitness> roots;  // sorted ascending, distinct

    std::size_t count() const { return roots.size(); }
};

/// Exact count of the distinct real roots of c2 t^2 + c1 t + c0 in the open
/// interval (lo, hi); absent bounds mean the whole line. The all-zero
/// polynomial is reported as identically_zero, not an error.
RootReport quadratic_roots_in_interval(const Scalar& c2, const Scalar& c1, const Scalar& c0,
                                       const std::optional<Scalar>& lo,
                                       const std::optional<Scalar>& hi);

/// Three-way comparison of the real numbers two witnesses denote.
/// Exact: equality of algebraic values, decided rationally.
int compare_witness(const RootWitness& a, const RootWitness& b);

/// Witness value vs a rational, exact.
int compare_witness_to_scalar(const RootWitness& w, const Scalar& s);

/// Shrink an irrational witness's isolating interval (one bisection step).
void refine_witness(RootWitness& w);

}  // namespace cloudcover
