#include "diskgeom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "diskgeom/json_writer.hpp"
#include "diskgeom/svg.hpp"

namespace diskgeom {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double norm_deg(double a) {
    double r = std::fmod(a, 360.0);
    if (r < 0.0) r += 360.0;
    return r;
}

std::vector<double> parse_doubles(const std::string& text, char sep, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": cannot parse number '" + item + "'");
        }
    }
    return out;
}

std::array<double, 4> parse_angles(const std::string& text) {
    const auto vals = parse_doubles(text, ',', "--angles");
    if (vals.size() != 4) throw UsageError("--angles: expected four comma-separated degrees");
    std::array<double, 4> a{};
    for (int i = 0; i < 4; ++i) a[i] = norm_deg(vals[i]);
    return a;
}

std::array<cplx, 4> parse_points(const std::string& text) {
    std::array<cplx, 4> pts{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ';')) {
        const auto re_im = parse_doubles(item, ',', "--points");
        if (re_im.size() != 2) throw UsageError("--points: expected re,im pairs");
        if (n >= 4) throw UsageError("--points: expected exactly four points");
        pts[n++] = cplx(re_im[0], re_im[1]);
    }
    if (n != 4) throw UsageError("--points: expected exactly four points");
    return pts;
}

cplx parse_xy(const std::string& text, const std::string& flag) {
    const auto v = parse_doubles(text, ',', flag);
    if (v.size() != 2) throw UsageError(flag + ": expected re,im");
    return cplx(v[0], v[1]);
}

std::array<double, 4> angles_of(const std::array<cplx, 4>& pts) {
    std::array<double, 4> a{};
    for (int i = 0; i < 4; ++i) a[i] = norm_deg(std::arg(pts[i]) / kDeg);
    return a;
}

void write_input(JsonWriter& w, const OrderedQuadruple& q) {
    const auto pts = q.points();
    w.key("input");
    w.begin_object();
    w.key("angles_deg");
    w.begin_array();
    for (double a : angles_of(pts)) w.value(a);
    w.end_array();
    w.key("points");
    w.begin_array();
    for (cplx p : pts) w.value(p);
    w.end_array();
    w.end_object();
}

void write_optional(JsonWriter& w, const char* name, const std::optional<cplx>& v,
                    const QuadAnalysis& qa) {
    w.key(name);
    if (v) {
        w.value(*v);
        return;
    }
    w.null();
    w.key(std::string(name) + "_degenerate_reason");
    auto it = qa.degenerate_reasons.find(name);
    w.value(it == qa.degenerate_reasons.end() ? "degenerate" : it->second);
}

std::string analyze_json(const JobSpec& spec, const OrderedQuadruple& q) {
    const QuadAnalysis qa = analyze(q);
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("analyze");
    write_input(w, q);
    w.key("cross_ratio");
    w.value(qa.cross_ratio);
    write_optional(w, "w1", qa.w1, qa);
    w.key("w2");
    w.value(qa.w2);
    write_optional(w, "w3", qa.w3, qa);
    w.key("w");
    w.value(qa.w);
    w.key("d1");
    w.value(qa.d1);
    w.key("d2");
    w.value(qa.d2);
    w.key("t1");
    w.value(qa.t1);
    w.key("t2");
    w.value(qa.t2);
    w.key("t3");
    w.value(qa.t3);
    w.key("t4");
    w.value(qa.t4);
    w.key("feet_fallback");
    w.value(qa.feet_fallback);
    w.key("p1");
    w.value(qa.p1);
    w.key("p2");
    w.value(qa.p2);
    w.key("p3");
    w.value(qa.p3);
    w.key("p4");
    w.value(qa.p4);
    w.key("p5");
    w.value(qa.p5);
    write_optional(w, "v1", qa.v1, qa);
    write_optional(w, "v2", qa.v2, qa);
    w.key("co");
    if (qa.co) {
        w.begin_object();
        w.key("center");
        w.value(qa.co->center);
        w.key("radius");
        w.value(qa.co->radius);
        w.end_object();
    } else {
        w.null();
        w.key("co_degenerate_reason");
        w.value(qa.degenerate_reasons.at("co"));
    }
    write_optional(w, "p", qa.p, qa);
    write_optional(w, "q", qa.q, qa);
    w.end_object();
    (void)spec;
    return std::move(w).take();
}

std::string midpoint_json(const JobSpec& spec) {
    const DiskPoint x(*spec.x), y(*spec.y);
    const MidpointWitness mw = midpoint_witness(x, y);
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("midpoint");
    w.key("x");
    w.value(x.value());
    w.key("y");
    w.value(y.value());
    w.key("z");
    w.value(mw.z.value());
    w.key("u");
    w.value(mw.u.value());
    w.key("rho_xy");
    w.value(hyperbolic_distance(x, y));
    w.key("rho_xz");
    w.value(hyperbolic_distance(x, mw.z));
    w.key("rho_zy");
    w.value(hyperbolic_distance(mw.z, y));
    w.end_object();
    return std::move(w).take();
}

std::string symmetrize_json(const JobSpec& spec, const OrderedQuadruple& q) {
    (void)spec;
    const SymmetrizeResult r = symmetrize(q);
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("symmetrize");
    write_input(w, q);
    w.key("degenerate");
    w.value(r.degenerate);
    if (r.degenerate) {
        w.key("degenerate_reason");
        w.value(r.reason);
    }
    w.key("w");
    w.value(r.w);
    w.key("cross_ratio_in");
    w.value(cross_ratio(q.a(), q.b(), q.c(), q.d()));
    const auto out = r.quad.points();
    w.key("cross_ratio_out");
    w.value(cross_ratio(out[0], out[1], out[2], out[3]));
    w.key("result");
    w.begin_object();
    w.key("angles_deg");
    w.begin_array();
    for (double a : angles_of(out)) w.value(a);
    w.end_array();
    w.key("points");
    w.begin_array();
    for (cplx p : out) w.value(p);
    w.end_array();
    w.end_object();
    w.end_object();
    return std::move(w).take();
}

void write_canonical(JsonWriter& w, const CanonicalForm& cf) {
    w.begin_object();
    w.key("parameter");
    w.value(cf.parameter);
    w.key("images");
    w.begin_array();
    for (const auto& img : cf.images) w.value(img);
    w.end_array();
    w.key("map");
    w.begin_array();
    w.value(cf.map.a);
    w.value(cf.map.b);
    w.value(cf.map.c);
    w.value(cf.map.d);
    w.end_array();
    w.key("lipschitz_cost");
    w.value(cf.lipschitz_cost);
    w.end_object();
}

std::string normalize_json(const JobSpec& spec, const OrderedQuadruple& q) {
    const auto pts = q.points();
    const CanonicalForm zoi = normalize_zero_one_inf(pts[0], pts[1], pts[2], pts[3],
                                                     kLipschitzSamples, spec.seed);
    const CanonicalForm sym =
        normalize_symmetric(pts[0], pts[1], pts[2], pts[3], kLipschitzSamples, spec.seed);
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("normalize");
    write_input(w, q);
    w.key("cross_ratio");
    w.value(cross_ratio(pts[0], pts[1], pts[2], pts[3]));
    w.key("seed");
    w.value(spec.seed);
    w.key("zero_one_inf");
    write_canonical(w, zoi);
    w.key("symmetric");
    write_canonical(w, sym);
    w.end_object();
    return std::move(w).take();
}

RunOutput render_job(const JobSpec& spec) {
    Scene scene = [&]() {
        if (spec.figure == "five-points" || (spec.figure == "midpoint" && spec.x && spec.y)) {
            if (!spec.x || !spec.y)
                throw UsageError("figure " + spec.figure + " needs --x and --y");
            const DiskPoint x(*spec.x), y(*spec.y);
            return spec.figure == "five-points" ? build_five_points_figure(x, y)
                                                : build_midpoint_figure(x, y);
        }
        return build_figure(spec.figure, analyze(spec.quadruple()));
    }();

    RunOutput out;
    out.svg = emit_svg(scene, spec.size);
    out.svg_path = spec.out_path.empty() ? spec.figure + ".svg" : spec.out_path;

    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("render");
    w.key("figure");
    w.value(spec.figure);
    w.key("output");
    w.value(out.svg_path);
    w.key("size");
    w.value(spec.size);
    w.key("elements");
    w.value(static_cast<double>(scene.elements.size()));
    w.end_object();
    out.json = std::move(w).take();
    return out;
}

}  // namespace

OrderedQuadruple JobSpec::quadruple() const {
    try {
        if (points) return OrderedQuadruple((*points)[0], (*points)[1], (*points)[2], (*points)[3], tol);
        if (angles_deg)
            return OrderedQuadruple::from_angles((*angles_deg)[0] * kDeg, (*angles_deg)[1] * kDeg,
                                                 (*angles_deg)[2] * kDeg, (*angles_deg)[3] * kDeg, tol);
    } catch (const NotUnimodular& e) {
        throw ValidationError(std::string("quadruple: ") + e.what());
    } catch (const DegenerateQuadruple& e) {
        throw ValidationError(std::string("quadruple: ") + e.what());
    }
    throw UsageError("this command needs --angles or --points");
}

JobSpec parse_job(const std::vector<std::string>& args) {
    CLI::App app{"cyclic quadrilaterals on the unit circle: euclidean lines, hyperbolic geodesics, figures"};
    app.name("diskgeom");
    app.require_subcommand(1);

    struct Raw {
        std::string angles, points, x, y, figure, out;
        int size = 800;
        std::uint64_t seed = kDefaultSeed;
        double tol = 1e-9;
    } raw;

    auto add_quad_flags = [&raw](CLI::App* sub) {
        sub->add_option("--angles", raw.angles, "four vertex angles in degrees, e.g. 0,90,180,270");
        sub->add_option("--points", raw.points, "four vertices as re,im;re,im;re,im;re,im");
        sub->add_option("--tol", raw.tol, "validation tolerance for the quadruple");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full derived bundle for a quadruple");
    add_quad_flags(analyze_cmd);
    CLI::App* symmetrize_cmd =
        app.add_subcommand("symmetrize", "reposition the quadruple symmetrically about a diameter");
    add_quad_flags(symmetrize_cmd);
    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "canonical (0,1,p,inf) and (-1,-y,y,1) forms");
    add_quad_flags(normalize_cmd);
    normalize_cmd->add_option("--seed", raw.seed, "seed for the Lipschitz cost sampler");
    CLI::App* midpoint_cmd = app.add_subcommand("midpoint", "hyperbolic midpoint of two disk points");
    midpoint_cmd->add_option("--x", raw.x, "first point as re,im")->required();
    midpoint_cmd->add_option("--y", raw.y, "second point as re,im")->required();
    CLI::App* render_cmd = app.add_subcommand("render", "draw a figure as SVG");
    add_quad_flags(render_cmd);
    render_cmd->add_option("--figure", raw.figure, "figure name")->required();
    render_cmd->add_option("-o,--out", raw.out, "output SVG path");
    render_cmd->add_option("--size", raw.size, "SVG size in pixels");
    render_cmd->add_option("--x", raw.x, "first point as re,im (midpoint/five-points figures)");
    render_cmd->add_option("--y", raw.y, "second point as re,im");
    render_cmd->add_option("--seed", raw.seed, "seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    JobSpec spec;
    spec.tol = raw.tol;
    spec.seed = raw.seed;
    spec.size = raw.size;
    spec.out_path = raw.out;
    spec.figure = raw.figure;
    if (!raw.angles.empty()) spec.angles_deg = parse_angles(raw.angles);
    if (!raw.points.empty()) spec.points = parse_points(raw.points);
    if (!raw.x.empty()) spec.x = parse_xy(raw.x, "--x");
    if (!raw.y.empty()) spec.y = parse_xy(raw.y, "--y");
    if (spec.angles_deg && spec.points)
        throw UsageError("--angles and --points are mutually exclusive");
    if (spec.tol <= 0.0) throw ValidationError("--tol must be positive");
    if (spec.size <= 0) throw ValidationError("--size must be positive");

    if (app.got_subcommand(analyze_cmd)) spec.command = JobSpec::Command::Analyze;
    if (app.got_subcommand(symmetrize_cmd)) spec.command = JobSpec::Command::Symmetrize;
    if (app.got_subcommand(normalize_cmd)) spec.command = JobSpec::Command::Normalize;
    if (app.got_subcommand(midpoint_cmd)) spec.command = JobSpec::Command::Midpoint;
    if (app.got_subcommand(render_cmd)) spec.command = JobSpec::Command::Render;

    // Validate eagerly so a bad job never reaches run_job.
    switch (spec.command) {
        case JobSpec::Command::Analyze:
        case JobSpec::Command::Symmetrize:
        case JobSpec::Command::Normalize:
            (void)spec.quadruple();
            break;
        case JobSpec::Command::Midpoint:
            try {
                (void)DiskPoint(*spec.x);
                (void)DiskPoint(*spec.y);
            } catch (const OutOfDisk& e) {
                throw ValidationError(e.what());
            }
            break;
        case JobSpec::Command::Render: {
            const auto& names = figure_names();
            if (std::find(names.begin(), names.end(), spec.figure) == names.end())
                throw UsageError("--figure: unknown figure '" + spec.figure + "'");
            if (spec.figure == "five-points" || (spec.figure == "midpoint" && !spec.angles_deg && !spec.points)) {
                if (!spec.x || !spec.y)
                    throw UsageError("--figure " + spec.figure + " needs --x and --y");
                try {
                    (void)DiskPoint(*spec.x);
                    (void)DiskPoint(*spec.y);
                } catch (const OutOfDisk& e) {
                    throw ValidationError(e.what());
                }
            } else {
                (void)spec.quadruple();
            }
            break;
        }
    }
    return spec;
}

RunOutput run_job(const JobSpec& spec) {
    switch (spec.command) {
        case JobSpec::Command::Analyze:
            return {analyze_json(spec, spec.quadruple()), std::nullopt, ""};
        case JobSpec::Command::Symmetrize:
            return {symmetrize_json(spec, spec.quadruple()), std::nullopt, ""};
        case JobSpec::Command::Normalize:
            return {normalize_json(spec, spec.quadruple()), std::nullopt, ""};
        case JobSpec::Command::Midpoint:
            return {midpoint_json(spec), std::nullopt, ""};
        case JobSpec::Command::Render:
            return render_job(spec);
    }
    throw UsageError("unreachable command");
}

}  // namespace diskgeom
