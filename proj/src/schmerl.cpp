#include "cloudcover/schmerl.hpp"

#include "cloudcover/sampler.hpp"

#include <algorithm>
#include <cassert>

namespace cloudcover {

Point AxisLine::at(const Scalar& t) const {
    Point q = Point::zero(fixed.size() + 1);
    std::size_t src = 0;
    for (std::size_t j = 0; j < q.dim(); ++j) q[j] = (j == axis) ? t : fixed[src++];
    return q;
}

Scalar AxisLine::fixed_sum() const {
    Scalar s = 0;
    for (const auto& c : fixed) s += c;
    return s;
}

namespace {

void check_window(const SchmerlInstance& inst, const Point& q) {
    if (q.dim() != inst.tuple_dim())
        throw Error(ErrorKind::DimensionMismatch, "window point dimension");
    for (const auto& c : q.coords)
        if (scalar_abs(c) >= inst.epsilon) throw Error(ErrorKind::OutOfWindow, "window point");
}

void check_axis_line(const SchmerlInstance& inst, const AxisLine& line) {
    if (line.axis >= inst.tuple_dim() || line.fixed.size() + 1 != inst.tuple_dim())
        throw Error(ErrorKind::DimensionMismatch, "axis line shape");
    for (const auto& c : line.fixed)
        if (scalar_abs(c) >= inst.epsilon) throw Error(ErrorKind::OutOfWindow, "axis line");
}

}  // namespace

SchmerlInstance build_instance(const std::vector<Cloud>& clouds,
                               const std::optional<Scalar>& epsilon_override) {
    if (clouds.size() < 3)
        throw Error(ErrorKind::BadDimensions, "need n + 2 >= 3 clouds (n >= 1)");
    std::size_t k = clouds.size();  // n + 2
    std::size_t ambient = clouds[0].dim;
    if (ambient < 2) throw Error(ErrorKind::BadDimensions, "ambient dimension must be >= 2");

    SchmerlInstance inst{.n = k - 2,
                         .ambient = ambient,
                         .clouds = clouds,
                         .centers = {},
                         .shift = Point::zero(ambient),
                         .transform = {},
                         .collineation = ProjectiveMap::identity(k),
                         .collineation_inv = ProjectiveMap::identity(k),
                         .epsilon = 0,
                         .certificate = {}};
    for (const auto& c : clouds) {
        if (c.dim != ambient) throw Error(ErrorKind::DimensionMismatch, "mixed cloud dimensions");
        CloudDecision d = is_cloud_around(c, c.center);
        if (!d.ok) throw Error(ErrorKind::NotACloud, d.reason);
        inst.centers.push_back(c.center);
    }

    // Translate until every center is nonzero.
    bool any_zero = [&] {
        return std::any_of(inst.centers.begin(), inst.centers.end(),
                           [](const Point& p) { return p.is_zero(); });
    }();
    if (any_zero) {
        for (Scalar t = 1;; t += 1) {
            Point shift = Point::zero(ambient);
            shift[0] = t;
            bool ok = std::all_of(inst.centers.begin(), inst.centers.end(),
                                  [&](const Point& p) { return !(p + shift).is_zero(); });
            if (!ok) continue;
            inst.shift = shift;
            AffineMap translate = AffineMap::translation_by(shift);
            for (std::size_t i = 0; i < k; ++i) {
                inst.clouds[i] = Cloud::affine_image(translate, inst.clouds[i]);
                inst.centers[i] = inst.centers[i] + shift;
            }
            break;
        }
    }

    // T(e_i) = p_i: columns are the centers.
    Matrix t_mat(ambient, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < ambient; ++i) t_mat.at(i, j) = inst.centers[j][i];
    inst.transform = AffineMap::linear(std::move(t_mat));

    // S: (x, s) -> (x, s - sum x_j); fixes E(0) and sends E(e_i) to inf_i.
    Matrix s_mat = Matrix::identity(k + 1);
    for (std::size_t j = 0; j < k; ++j) s_mat.at(k, j) = -1;
    inst.collineation = ProjectiveMap(std::move(s_mat));
    inst.collineation_inv = proj_invert(inst.collineation);

    assert(proj_apply(inst.collineation, embed(Point::zero(k))) == embed(Point::zero(k)));
    for (std::size_t i = 0; i < k; ++i)
        assert(proj_apply(inst.collineation, embed(Point::unit(k, i))) == axis_infinity(k, i));

    // Window certification.
    WindowCertificate& cert = inst.certificate;
    cert.cond1_bound = Scalar(1, k);
    Scalar row_sum_max = 0;
    for (std::size_t i = 0; i < ambient; ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < k; ++j) s += scalar_abs(inst.transform.matrix.at(i, j));
        row_sum_max = std::max(row_sum_max, s);
    }
    cert.max_abs_row_sum = row_sum_max;
    Scalar min_inf = norm_inf(inst.centers[0]);
    for (const auto& p : inst.centers) min_inf = std::min(min_inf, norm_inf(p));
    cert.min_center_inf = min_inf;
    cert.cond2_bound = min_inf / (row_sum_max + min_inf * Scalar(k));
    if (cert.cond2_bound <= 0)
        throw Error(ErrorKind::CertificationFailed, "no positive window radius satisfies the bound");

    inst.epsilon = epsilon_override ? *epsilon_override : cert.cond2_bound / 2;
    if (inst.epsilon <= 0) throw Error(ErrorKind::CertificationFailed, "epsilon must be positive");
    cert.epsilon = inst.epsilon;
    cert.cond1_ok = inst.epsilon < cert.cond1_bound;
    cert.cond2_ok = inst.epsilon < cert.cond2_bound;
    if (!epsilon_override && !cert.certified())
        throw Error(ErrorKind::CertificationFailed, "default epsilon failed its own bounds");
    return inst;
}

Point phi(const SchmerlInstance& inst, const Point& q) {
    check_window(inst, q);
    Scalar den = 1;
    for (const auto& c : q.coords) den += c;
    return Scalar(1) / den * apply_affine(inst.transform, q);
}

bool d_membership(const SchmerlInstance& inst, std::size_t i, const Point& q) {
    return contains(inst.clouds.at(i), phi(inst, q));
}

LineIntersection axis_line_intersection(const SchmerlInstance& inst, std::size_t i,
                                        const AxisLine& line) {
    check_axis_line(inst, line);
    // phi(line(t)) = (T(q0) + t p_axis) / (1 + s + t), all coordinates
    // degree-1 over degree-1 in t.
    RationalCurve curve;
    curve.u = apply_affine(inst.transform, line.at(0));
    curve.v = inst.centers.at(line.axis);
    curve.d0 = 1 + line.fixed_sum();
    curve.d1 = 1;
    return intersect_curve(inst.clouds.at(i), curve, Scalar(-inst.epsilon), inst.epsilon);
}

bool parallel_to_point_check(const SchmerlInstance& inst, std::size_t i, const AxisLine& line) {
    check_axis_line(inst, line);
    if (i >= inst.tuple_dim()) throw Error(ErrorKind::DimensionMismatch, "cloud index");
    std::size_t k = inst.tuple_dim();
    Scalar t0 = 0, t1 = inst.epsilon / 2;
    Point q0 = line.at(t0), q1 = line.at(t1);
    ProjectivePoint a = proj_apply(inst.collineation_inv, embed(q0));
    ProjectivePoint b = proj_apply(inst.collineation_inv, embed(q1));
    ProjectivePoint ei = embed(Point::unit(k, i));
    if (!proj_collinear(a, b, ei)) return false;
    // The phi image must extend to a line through p_i in R^N.
    Point x0 = phi(inst, q0), x1 = phi(inst, q1);
    return points_collinear({x0, x1, inst.centers[i]});
}

SchmerlVerifyReport verify_instance(const SchmerlInstance& inst, std::size_t samples,
                                    std::uint64_t seed) {
    SchmerlVerifyReport report;
    report.samples = samples;
    report.seed = seed;
    std::size_t k = inst.tuple_dim();
    report.max_section.assign(k, 0);

    report.cond1_certified = inst.epsilon < Scalar(1, k);
    report.cond2_certified = inst.certificate.cond2_ok;
    if (!report.cond1_certified) {
        // Corner of the closed window: the coordinate sum reaches -1, so the
        // chart denominator 1 + sum q_j is not bounded away from zero.
        Point corner = Point::zero(k);
        for (auto& c : corner.coords) c = -inst.epsilon;
        report.cond1_witness = corner;
    }

    Sampler rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        Point q = Point::zero(k);
        for (auto& c : q.coords) c = rng.next_in_window(inst.epsilon);

        // Condition 1 spot check: q stays in the affine chart after S^{-1}.
        ++report.chart_checks;
        Scalar den = 1;
        for (const auto& c : q.coords) den += c;
        ProjectivePoint moved = proj_apply(inst.collineation_inv, embed(q));
        if (den <= 0 || is_at_infinity(moved)) {
            ++report.chart_failures;
            continue;
        }

        // Closed-form phi against the stepwise projective route.
        ++report.phi_checks;
        Point stepwise = apply_affine(inst.transform, unembed(moved));
        if (phi(inst, q) != stepwise) ++report.phi_failures;

        // Condition 2 spot check: T(e_i - x') never vanishes.
        Point x_prime = unembed(moved);
        for (std::size_t i = 0; i < k; ++i) {
            ++report.injectivity_checks;
            if (apply_affine(inst.transform, Point::unit(k, i) - x_prime).is_zero())
                ++report.injectivity_failures;
        }

        // Matching-axis line section and the parallel-to-point property.
        std::size_t axis = s % k;
        AxisLine line;
        line.axis = axis;
        for (std::size_t j = 0; j + 1 < k; ++j)
            line.fixed.push_back(rng.next_in_window(inst.epsilon));
        ++report.line_checks;
        LineIntersection section = axis_line_intersection(inst, axis, line);
        if (section.infinite)
            report.all_sections_finite = false;
        else
            report.max_section[axis] = std::max(report.max_section[axis], section.count());
        ++report.parallel_checks;
        if (!parallel_to_point_check(inst, axis, line)) ++report.parallel_failures;
    }
    return report;
}

}  // namespace cloudcover
