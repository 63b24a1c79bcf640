#pragma once

#include "cloudcover/cloud.hpp"
#include "cloudcover/projective.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cloudcover {

/// Closed-form rational window certificate. Condition 1 (the transformed
/// window stays inside the affine chart) holds when epsilon < 1/(n+2).
/// Condition 2 (T injective on lines through e_i and transformed window
/// points) holds when maxAbsRowSum(T) * eps/(1 - (n+2) eps) < min_i |p_i|_inf.
struct WindowCertificate {
    Scalar cond1_bound;       // 1/(n+2)
    Scalar cond2_bound;       // m / (R + m (n+2)), the solved form of condition 2
    Scalar max_abs_row_sum;   // R
    Scalar min_center_inf;    // m
    Scalar epsilon;
    bool cond1_ok = false;
    bool cond2_ok = false;

    bool certified() const { return cond1_ok && cond2_ok; }
};

/// The assembled transform machine: clouds C_i in R^N with nonzero centers
/// p_i, the linear map T(e_i) = p_i, the projective collineation
/// S: (x, s) -> (x, s - sum x_j), and a certified window (-epsilon, epsilon).
struct SchmerlInstance {
    std::size_t n = 0;        // number of clouds is n + 2
    std::size_t ambient = 0;  // N
    std::vector<Cloud> clouds;
    std::vector<Point> centers;  // shifted, all nonzero
    Point shift;
    AffineMap transform;  // T, linear, N x (n+2)
    ProjectiveMap collineation;      // S
    ProjectiveMap collineation_inv;  // S^{-1}: (x, s) -> (x, s + sum x_j)
    Scalar epsilon;
    WindowCertificate certificate;

    std::size_t tuple_dim() const { return n + 2; }
};

/// Line in the window cube parallel to a coordinate axis: all other
/// coordinates fixed strictly inside (-epsilon, epsilon).
struct AxisLine {
    std::size_t axis = 0;        // 0-based
    std::vector<Scalar> fixed;  // n+1 values

    Point at(const Scalar& t) const;
    Scalar fixed_sum() const;
};

/// Builds and certifies an instance from n+2 clouds with declared centers.
/// An epsilon override skips the default choice but is still checked; the
/// certificate then records any violated condition.
SchmerlInstance build_instance(const std::vector<Cloud>& clouds,
                               const std::optional<Scalar>& epsilon_override = std::nullopt);

/// Membership oracle core: phi(q) = T(q / (1 + sum q_j)), defined on the
/// open window cube.
Point phi(const SchmerlInstance& inst, const Point& q);

/// q in D_i iff phi(q) in C_i.
bool d_membership(const SchmerlInstance& inst, std::size_t i, const Point& q);

/// Exact count of {t in (-eps, eps) : phi(line(t)) in C_i}.
LineIntersection axis_line_intersection(const SchmerlInstance& inst, std::size_t i,
                                        const AxisLine& line);

/// Checks that the inverse collineation turns the axis-parallel window line
/// into a line through E(e_i), and that its phi image extends to a line
/// through p_i.
bool parallel_to_point_check(const SchmerlInstance& inst, std::size_t i, const AxisLine& line);

struct SchmerlVerifyReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool cond1_certified = true;
    bool cond2_certified = true;
    std::optional<Point> cond1_witness;  // boundary corner when certification fails
    std::size_t chart_checks = 0, chart_failures = 0;
    std::size_t injectivity_checks = 0, injectivity_failures = 0;
    std::size_t phi_checks = 0, phi_failures = 0;
    std::size_t line_checks = 0;
    bool all_sections_finite = true;
    std::vector<std::size_t> max_section;  // per cloud index
    std::size_t parallel_checks = 0, parallel_failures = 0;

    bool pass() const {
        return cond1_certified && cond2_certified && chart_failures == 0 &&
               injectivity_failures == 0 && phi_failures == 0 && all_sections_finite &&
               parallel_failures == 0;
    }
};

/// Spot-checks every proof obligation on `samples` seeded window points and
/// matching-axis lines. Failures are report entries, never exceptions.
SchmerlVerifyReport verify_instance(const SchmerlInstance& inst, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace cloudcover
