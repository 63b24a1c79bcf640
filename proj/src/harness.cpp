#include "cloudcover/harness.hpp"

#include "cloudcover/collineation.hpp"
#include "cloudcover/kuratowski.hpp"
#include "cloudcover/projective.hpp"
#include "cloudcover/sampler.hpp"
#include "cloudcover/schmerl.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cloudcover {

namespace {

std::string point_str(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ",";
        out += scalar_to_string(p[i]);
    }
    return out + ")";
}

std::size_t task_size_t(const SceneTask& task, const std::string& key, std::size_t fallback) {
    std::string v = task.param(key);
    if (v.empty()) return fallback;
    return static_cast<std::size_t>(std::stoull(v));
}

std::vector<std::string> name_list(const SceneTask& task, const std::string& key) {
    std::vector<std::string> out;
    std::string raw = task.param(key);
    std::size_t start = 0;
    while (start < raw.size()) {
        std::size_t comma = raw.find(',', start);
        if (comma == std::string::npos) comma = raw.size();
        out.push_back(raw.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void run_extend_task(const SceneFile& scene, const SceneTask& task, std::size_t samples,
                     std::uint64_t seed, Report& report) {
    const Cloud& base = scene.cloud(task.param("cloud"));
    std::size_t target = task_size_t(task, "target_dim", base.dim + 1);
    Point offset = Point::zero(target - base.dim);
    if (task.has_param("offset")) {
        offset.coords.clear();
        for (const auto& part : name_list(task, "offset")) {
            auto s = parse_scalar(part);
            if (!s) throw Error(ErrorKind::BadRational, "offset '" + part + "'");
            offset.coords.push_back(*s);
        }
    }
    Cloud extended = extend(base, target, offset);
    report.check("extend_succeeds", true, "center " + point_str(extended.center));
    CloudDecision d = is_cloud_around(extended, extended.center);
    report.check("extension_is_cloud", d.ok, d.reason);

    // Count identity: lines through centers (a, b) match the projected line
    // when the planar direction is nonzero, and miss entirely otherwise.
    Sampler rng(seed);
    std::size_t k = base.dim;
    std::size_t failures = 0;
    const Cloud* punctured_base = nullptr;
    if (const auto* cyl = std::get_if<CylinderBody>(&extended.body)) punctured_base = cyl->base.get();
    for (std::size_t s = 0; s < samples; ++s) {
        Point b_off = rng.next_point(target - k);
        Point center = concat(punctured_base->center, b_off);
        Point dir = rng.next_nonzero_point(target);
        if (s % 5 == 0)
            for (std::size_t j = 0; j < k; ++j) dir[j] = 0;  // vertical branch
        if (dir.is_zero()) dir[target - 1] = 1;
        RationalCurve curve{center, dir, 1, 0};
        LineIntersection high = intersect_curve(extended, curve, std::nullopt, std::nullopt);
        Point v = head(dir, k);
        if (v.is_zero()) {
            if (high.infinite || high.count() != 0) ++failures;
        } else {
            RationalCurve low{punctured_base->center, v, 1, 0};
            LineIntersection planar = intersect_curve(*punctured_base, low, std::nullopt, std::nullopt);
            if (high.infinite != planar.infinite || high.count() != planar.count()) ++failures;
        }
    }
    report.check("line_count_identity", failures == 0,
                 std::to_string(samples) + " lines, " + std::to_string(failures) + " mismatches");
}

void run_collineate_task(const SceneFile& scene, const SceneTask& task, std::size_t samples,
                         std::uint64_t seed, Report& report) {
    std::vector<Point> points;
    for (const auto& name : name_list(task, "points")) points.push_back(scene.point(name));
    RestrictionCertificate cert = build_restriction_collineation(points);
    bool distinct = true;
    for (std::size_t i = 0; i < cert.projected.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < cert.projected.size() && distinct; ++j)
            if (cert.projected[i] == cert.projected[j]) distinct = false;
    report.check("projections_distinct", distinct);
    if (points[0].dim() > 2) {
        bool anchored = cert.projected[0] == Point({0, 0}) && cert.projected[1] == Point({1, 0}) &&
                        cert.projected[2] == Point({0, 1});
        report.check("first_three_anchored", anchored);
    }
    report.check("map_invertible", cert.map.invertible());

    // Count preservation along the specific collineation.
    Sampler rng(seed);
    std::size_t dim = points[0].dim();
    std::size_t failures = 0;
    Cloud probe = Cloud::sphere(rng.next_point(dim), Scalar(1), Point::zero(dim));
    Cloud moved = Cloud::affine_image(cert.map, probe);
    for (std::size_t s = 0; s < samples; ++s) {
        Line line = rng.next_line(dim);
        LineIntersection before = intersect_line(probe, line);
        LineIntersection after = intersect_line(moved, apply_affine(cert.map, line));
        if (before.infinite != after.infinite || before.count() != after.count()) ++failures;
    }
    report.check("count_preservation", failures == 0, std::to_string(failures) + " mismatches");

    if (task.has_param("clouds")) {
        std::vector<Cloud> planar;
        for (const auto& name : name_list(task, "clouds")) planar.push_back(scene.cloud(name));
        std::vector<Cloud> lifted = lift_cover(planar, points);
        bool centers_ok = true;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (lifted[i].center != points[cert.reorder[i]]) centers_ok = false;
        report.check("lift_centers_exact", centers_ok);
        bool clouds_ok = true;
        for (const auto& c : lifted)
            if (!is_cloud_around(c, c.center).ok) clouds_ok = false;
        report.check("lifted_are_clouds", clouds_ok);
    }
}

void run_projective_task(const SceneFile& scene, const SceneTask& task, std::size_t samples,
                         std::uint64_t seed, Report& report) {
    std::size_t m = task_size_t(task, "dim", scene.dimension);
    Sampler rng(seed);
    std::size_t scale_failures = 0, round_failures = 0, infinity_failures = 0, frame_failures = 0,
                collinear_failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Point v = rng.next_nonzero_point(m + 1);
        Scalar c = rng.next_nonzero_scalar();
        if (ProjectivePoint(v) != ProjectivePoint(c * v)) ++scale_failures;

        Point x = rng.next_point(m);
        if (unembed(embed(x)) != x) ++round_failures;

        Point y = rng.next_point(m);
        if (x != y) {
            Line line = line_through(x, y);
            if (!proj_collinear(embed(x), embed(y), point_at_infinity(line))) ++infinity_failures;
        }

        Matrix xs = rng.next_invertible_matrix(m + 1);
        Matrix ys = rng.next_invertible_matrix(m + 1);
        std::vector<Point> xcols(m + 1, Point::zero(m + 1)), ycols(m + 1, Point::zero(m + 1));
        for (std::size_t j = 0; j <= m; ++j)
            for (std::size_t i = 0; i <= m; ++i) {
                xcols[j][i] = xs.at(i, j);
                ycols[j][i] = ys.at(i, j);
            }
        ProjectiveMap map = build_proj_collineation(xcols, ycols);
        for (std::size_t j = 0; j <= m; ++j)
            if (proj_apply(map, ProjectivePoint(xcols[j])) != ProjectivePoint(ycols[j]))
                ++frame_failures;

        ProjectivePoint a(rng.next_nonzero_point(m + 1));
        ProjectivePoint b(rng.next_nonzero_point(m + 1));
        Point mix = rng.next_scalar() * a.homog + rng.next_scalar() * b.homog;
        if (!mix.is_zero()) {
            ProjectivePoint cpt(mix);
            if (!proj_collinear(proj_apply(map, a), proj_apply(map, b), proj_apply(map, cpt)))
                ++collinear_failures;
        }
    }
    report.check("scaling_invariance", scale_failures == 0);
    report.check("embed_round_trip", round_failures == 0);
    report.check("point_at_infinity_collinear", infinity_failures == 0);
    report.check("frame_map_postcondition", frame_failures == 0);
    report.check("collinearity_preserved", collinear_failures == 0);
}

void run_schmerl_task(const SceneFile& scene, const SceneTask& task, std::size_t samples,
                      std::uint64_t seed, Report& report) {
    std::vector<Cloud> clouds;
    for (const auto& name : name_list(task, "clouds")) clouds.push_back(scene.cloud(name));
    std::optional<Scalar> eps_override;
    if (task.has_param("epsilon")) {
        auto s = parse_scalar(task.param("epsilon"));
        if (!s) throw Error(ErrorKind::BadRational, "epsilon override");
        eps_override = *s;
    }
    SchmerlInstance inst = build_instance(clouds, eps_override);
    report.notes.push_back("epsilon = " + scalar_to_string(inst.epsilon));
    report.notes.push_back("cond1_bound = " + scalar_to_string(inst.certificate.cond1_bound) +
                           ", cond2_bound = " + scalar_to_string(inst.certificate.cond2_bound));
    SchmerlVerifyReport v = verify_instance(inst, samples, seed);
    report.check("condition1_certified", v.cond1_certified,
                 v.cond1_witness ? "boundary witness " + point_str(*v.cond1_witness) : "");
    report.check("condition2_certified", v.cond2_certified);
    report.check("chart_spot_checks", v.chart_failures == 0,
                 std::to_string(v.chart_checks) + " checks");
    report.check("injectivity_spot_checks", v.injectivity_failures == 0,
                 std::to_string(v.injectivity_checks) + " checks");
    report.check("phi_two_route_agreement", v.phi_failures == 0,
                 std::to_string(v.phi_checks) + " checks");
    report.check("axis_sections_finite", v.all_sections_finite,
                 std::to_string(v.line_checks) + " lines");
    report.check("parallel_to_point", v.parallel_failures == 0,
                 std::to_string(v.parallel_checks) + " checks");
    std::ostringstream sections;
    sections << "max sections:";
    for (auto msec : v.max_section) sections << " " << msec;
    report.notes.push_back(sections.str());
}

void run_decompose_task(const SceneFile&, const SceneTask& task, std::size_t, std::uint64_t,
                        Report& report) {
    std::size_t n = task_size_t(task, "n", 0);
    std::size_t prefix = task_size_t(task, "prefix", 5);
    std::size_t budget = task_size_t(task, "budget", 2000000);
    EnumeratedSet<std::int64_t> naturals{
        "naturals", [](const std::int64_t& v) { return v; }, [](std::int64_t k) { return k; }};
    Decomposition<std::int64_t> d = sierpinski_decomposition(naturals, n);
    DecompositionReport r = verify_decomposition(d, naturals, prefix, budget);
    report.check("cover", r.covered(), std::to_string(r.tuple_count) + " tuples");
    // Axis-0 section at fixed q_1 = elem(j) must be exactly min(j+1, m).
    bool formula_ok = true;
    for (std::size_t j = 0; j < prefix && formula_ok; ++j) {
        std::size_t count = 0;
        for (std::size_t v = 0; v < prefix; ++v) {
            std::vector<std::int64_t> tuple(d.tuple_dim(), 0);
            tuple[0] = static_cast<std::int64_t>(v);
            tuple[1] = static_cast<std::int64_t>(j);
            if (d.membership(0, tuple)) ++count;
        }
        if (count != std::min(j + 1, prefix)) formula_ok = false;
    }
    report.check("section_formula", formula_ok);
    std::ostringstream growth;
    growth << "axis-0 growth:";
    for (auto g : r.growth[0]) growth << " " << g;
    report.notes.push_back(growth.str());
    std::ostringstream sections;
    sections << "max sections:";
    for (auto msec : r.max_section) sections << " " << msec;
    report.notes.push_back(sections.str());
}

void run_verify_task(const SceneFile& scene, const SceneTask& task, std::size_t samples,
                     std::uint64_t seed, Report& report) {
    const Cloud& cloud = scene.cloud(task.param("cloud"));
    Point center = task.has_param("at") ? scene.point(task.param("at")) : cloud.center;
    CloudDecision d = is_cloud_around(cloud, center);
    report.check("is_cloud_around", d.ok,
                 d.ok ? "" : d.reason + (d.witness ? ", witness line through " +
                                                          point_str(d.witness->base)
                                                    : ""));
    if (!d.ok) return;
    Sampler rng(seed);
    std::size_t max_count = 0;
    std::size_t infinite = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Point dir = rng.next_nonzero_point(cloud.dim);
        RationalCurve curve{center, dir, 1, 0};
        LineIntersection li = intersect_curve(cloud, curve, std::nullopt, std::nullopt);
        if (li.infinite)
            ++infinite;
        else
            max_count = std::max(max_count, li.count());
    }
    report.check("lines_through_center_finite", infinite == 0,
                 "max count " + std::to_string(max_count));
}

}  // namespace

Report run_task(const SceneFile& scene, const SceneTask& task, const TaskOverrides& ov) {
    Report report;
    report.task_name = task.name;
    report.task_kind = task.kind;
    std::uint64_t seed = ov.seed ? *ov.seed
                                 : static_cast<std::uint64_t>(task_size_t(task, "seed", 0));
    std::size_t samples = ov.samples ? *ov.samples : task_size_t(task, "samples", 100);
    report.seed = seed;
    auto start = std::chrono::steady_clock::now();
    if (task.kind == "extend")
        run_extend_task(scene, task, samples, seed, report);
    else if (task.kind == "collineate")
        run_collineate_task(scene, task, samples, seed, report);
    else if (task.kind == "projective")
        run_projective_task(scene, task, samples, seed, report);
    else if (task.kind == "schmerl")
        run_schmerl_task(scene, task, samples, seed, report);
    else if (task.kind == "decompose")
        run_decompose_task(scene, task, samples, seed, report);
    else if (task.kind == "verify")
        run_verify_task(scene, task, samples, seed, report);
    else
        throw Error(ErrorKind::SyntaxError, "unknown task kind '" + task.kind + "'");
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

void sample_body(const Cloud& cloud, std::size_t count, std::vector<Point>& out);

void sample_sphere(const SphereBody& body, std::size_t dim, std::size_t count,
                   std::vector<Point>& out) {
    auto radius = exact_sqrt(body.radius_sq);
    if (!radius)
        throw Error(ErrorKind::UnsupportedCloud,
                    "sphere sampling needs a perfect-square radius_sq");
    Scalar r = *radius;
    if (dim == 2) {
        // Tangent half-angle: (r(1-t^2), 2rt)/(1+t^2) is exactly on the circle.
        for (std::size_t k = 0; k < count; ++k) {
            Scalar t = Scalar(static_cast<int>(k)) - Scalar(static_cast<int>(count / 2));
            Scalar den = 1 + t * t;
            out.push_back(body.center + Point({r * (1 - t * t) / den, 2 * r * t / den}));
        }
        return;
    }
    // Stereographic grid on the 2-sphere.
    std::size_t side = 1;
    while (side * side < count) ++side;
    for (std::size_t a = 0; a < side && out.size() < count; ++a)
        for (std::size_t b = 0; b < side && out.size() < count; ++b) {
            Scalar t = Scalar(static_cast<int>(a)) - Scalar(static_cast<int>(side / 2));
            Scalar s = Scalar(static_cast<int>(b)) - Scalar(static_cast<int>(side / 2));
            Scalar den = 1 + t * t + s * s;
            out.push_back(body.center +
                          Point({2 * r * t / den, 2 * r * s / den, r * (1 - t * t - s * s) / den}));
        }
}

void sample_body(const Cloud& cloud, std::size_t count, std::vector<Point>& out) {
    std::visit(
        [&](const auto& body) {
            using B = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<B, FiniteSetBody>) {
                for (std::size_t i = 0; i < body.points.size() && out.size() < count; ++i)
                    out.push_back(body.points[i]);
            } else if constexpr (std::is_same_v<B, SphereBody>) {
                sample_sphere(body, cloud.dim, count, out);
            } else if constexpr (std::is_same_v<B, UnionBody>) {
                std::size_t share = std::max<std::size_t>(1, count / body.parts.size());
                for (const auto& part : body.parts) {
                    std::vector<Point> sub;
                    sample_body(*part, share, sub);
                    for (auto& p : sub)
                        if (out.size() < count) out.push_back(std::move(p));
                }
            } else if constexpr (std::is_same_v<B, CylinderBody>) {
                std::size_t levels = 4;
                std::size_t per_level = std::max<std::size_t>(1, count / levels);
                std::vector<Point> base_samples;
                sample_body(*body.base, per_level, base_samples);
                for (std::size_t l = 0; l < levels; ++l) {
                    Point off = Point::zero(cloud.dim - body.base->dim);
                    off[0] = Scalar(static_cast<int>(l)) - Scalar(static_cast<int>(levels / 2));
                    for (const auto& b : base_samples)
                        if (out.size() < count) out.push_back(concat(b, off));
                }
            } else {
                std::vector<Point> base_samples;
                sample_body(*body.base, count, base_samples);
                for (auto& b : base_samples) out.push_back(apply_affine(body.map, b));
            }
        },
        cloud.body);
}

}  // namespace

std::vector<Point> sample_cloud_points(const Cloud& cloud, std::size_t count) {
    if (cloud.dim != 2 && cloud.dim != 3)
        throw Error(ErrorKind::UnsupportedDim, "plot sampling supports dim 2 and 3 only");
    std::vector<Point> raw;
    sample_body(cloud, count, raw);
    std::vector<Point> out;
    for (auto& p : raw) {
        // Punctures (at any nesting level) drop the sampled point.
        if (!contains(cloud, p)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::string emit_plot_data(const Cloud& cloud, std::size_t count) {
    std::vector<Point> pts = sample_cloud_points(cloud, count);
    std::ostringstream out;
    out << (cloud.dim == 2 ? "x,y\n" : "x,y,z\n");
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (i) out << ",";
            out << scalar_to_string(p[i]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cloudcover
