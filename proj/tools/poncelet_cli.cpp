// Command-line front door: family construction, invariant sweeps, inellipse
// constructions, sequences, extremal areas and locus export (csv/json/svg).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "poncelet/extremal.hpp"
#include "poncelet/family.hpp"
#include "poncelet/inellipse.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/numfmt.hpp"
#include "poncelet/sequence.hpp"
#include "poncelet/svg.hpp"

namespace {

using namespace poncelet;

constexpr int exit_ok = 0;
constexpr int exit_bad_input = 2;
constexpr int exit_verification = 3;

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << text;
    }
};

std::string fmt(double v) { return format_number(v); }

std::string json_point(Point p) {
    return "[" + fmt(p.x) + ", " + fmt(p.y) + "]";
}

Scenario parse_scenario(const std::string& s) {
    if (s == "center") return Scenario::CenterCoincident;
    if (s == "focus") return Scenario::FocusCoincident;
    throw CLI::ValidationError("--scenario", "expected 'center' or 'focus'");
}

PonceletConfig build_config(const std::string& scenario, double R, double c,
                            std::optional<double> cx, std::optional<double> cy) {
    if (cx || cy) return config_from_center({cx.value_or(0.0), cy.value_or(0.0)}, R, c);
    return make_config(R, c, parse_scenario(scenario));
}

std::string triangle_csv(const std::vector<FamilySample>& samples) {
    std::string out = csv_row({"theta", "ax", "ay", "bx", "by", "cx", "cy",
                               "closure_residual"});
    for (const auto& s : samples)
        out += csv_row({fmt(s.theta), fmt(s.triangle.a.x), fmt(s.triangle.a.y),
                        fmt(s.triangle.b.x), fmt(s.triangle.b.y), fmt(s.triangle.c.x),
                        fmt(s.triangle.c.y), fmt(s.closure_residual)});
    return out;
}

std::string placed_conic_json(const PlacedConic& pc) {
    const ConicParams p = conic_params(pc.base);
    std::string out = "{";
    out += "\"kind\": \"" + std::string(p.kind == ConicKind::Ellipse ? "ellipse" : "hyperbola") + "\", ";
    out += "\"alpha\": " + fmt(pc.base.alpha) + ", \"beta\": " + fmt(pc.base.beta) + ", ";
    out += "\"center\": " + json_point(pc.center) + ", ";
    out += "\"rotation\": " + fmt(pc.rotation) + ", ";
    out += "\"semi_axes\": [" + fmt(p.a) + ", " + fmt(p.b) + "], ";
    const auto foci = placed_foci(pc);
    out += "\"foci\": [" + json_point(foci.first) + ", " + json_point(foci.second) + "]}";
    return out;
}

Triangle triangle_from(const std::vector<double>& v) {
    return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poncelet triangle families over central conics"};
    app.require_subcommand(1);

    double tol = 1e-9;
    app.add_option("--tol", tol, "relative tolerance")->capture_default_str();

    std::string format = "csv";
    Output out;
    app.add_option("--out", out.path, "output file (default stdout)");
    app.add_option("--format", format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));

    std::string scenario = "center";
    double R = 2.0, c = 1.0;
    std::optional<double> cx, cy;
    int n = 360;
    double theta = 0.0;
    std::vector<double> tri_coords;
    double ratio = -2.0, x0 = 0.1;
    bool paper_literal = false;
    std::string locus_kind = "orthic";
    std::string cassini_variant = "cassini";

    auto add_config_opts = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario, "center or focus");
        cmd->add_option("--R", R, "circumradius")->required();
        cmd->add_option("--c", c, "linear eccentricity");
        cmd->add_option("--cx", cx, "general circumcenter x");
        cmd->add_option("--cy", cy, "general circumcenter y");
    };

    auto* family = app.add_subcommand("family", "family construction and checks");
    auto* fam_check = family->add_subcommand("check", "criterion residual and classification");
    add_config_opts(fam_check);
    auto* fam_sample = family->add_subcommand("sample", "one triangle of the family");
    add_config_opts(fam_sample);
    fam_sample->add_option("--theta", theta, "vertex angle")->required();
    auto* fam_sweep = family->add_subcommand("sweep", "n equispaced admissible samples");
    add_config_opts(fam_sweep);
    fam_sweep->add_option("--n", n, "sample count");

    auto* inv = app.add_subcommand("invariants", "family invariants");
    auto* inv_sweep = inv->add_subcommand("sweep", "evaluate invariants across the family");
    add_config_opts(inv_sweep);
    inv_sweep->add_option("--n", n, "sample count");
    auto* inv_expected = inv->add_subcommand("expected", "closed-form target values");
    add_config_opts(inv_expected);

    auto* construct = app.add_subcommand("construct", "inscribed conics of a raw triangle");
    CLI::App* con_sub[3];
    const char* con_names[3] = {"inellipse", "oh-conic", "steiner"};
    for (int i = 0; i < 3; ++i) {
        con_sub[i] = construct->add_subcommand(con_names[i]);
        con_sub[i]
            ->add_option("--vertices", tri_coords, "ax ay bx by cx cy")
            ->expected(6)
            ->required();
    }

    auto* seq = app.add_subcommand("sequence", "triangle/conic sequences");
    auto* seq_hom = seq->add_subcommand("homothety", "anticomplementary/medial tower");
    seq_hom->add_option("--vertices", tri_coords, "ax ay bx by cx cy")->expected(6)->required();
    seq_hom->add_option("--ratio", ratio, "-2 or -0.5");
    seq_hom->add_option("--n", n, "levels");
    auto* seq_iter = seq->add_subcommand("iterate", "tangential-circle recurrence");
    seq_iter->add_option("--c", c, "initial focus distance")->required();
    seq_iter->add_option("--R", R, "initial circumradius")->required();
    seq_iter->add_option("--n", n, "states");
    auto* seq_orbit = seq->add_subcommand("orbit", "normalized 1-d dynamics");
    seq_orbit->add_option("--x0", x0, "initial ratio c/R")->required();
    seq_orbit->add_option("--n", n, "entries");
    seq_orbit->add_flag("--paper-literal", paper_literal,
                        "use the printed map instead of the reconciled one");

    auto* extremal = app.add_subcommand("extremal", "area extrema over the family");
    add_config_opts(extremal);

    auto* locus = app.add_subcommand("locus", "locus generators");
    locus->add_option("kind", locus_kind, "orthic, cassini or tangential")
        ->check(CLI::IsMember({"orthic", "cassini", "tangential"}))
        ->required();
    locus->add_option("--scenario", scenario, "center or focus");
    locus->add_option("--R", R, "circumradius")->required();
    locus->add_option("--c", c, "linear eccentricity");
    locus->add_option("--n", n, "sample count");
    locus->add_option("--variant", cassini_variant, "cassini or major-axis")
        ->check(CLI::IsMember({"cassini", "major-axis"}));

    CLI11_PARSE(app, argc, argv);
    relative_tolerance() = tol;

    try {
        if (*fam_check) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            const double res = check_criterion(cfg);
            std::string text = "criterion_residual " + fmt(res) + "\n";
            if (cfg.scenario != Scenario::General) {
                const FamilyClassification fc = classify(cfg);
                text += std::string("conic_kind ") +
                        (fc.conic_kind == ConicKind::Ellipse ? "Ellipse" : "Hyperbola") + "\n";
                text += std::string("triangle_kind ") +
                        (fc.triangle_kind == TriangleKind::AllAcute ? "AllAcute" : "AllObtuse") +
                        "\n";
            } else {
                text += "scenario General\n";
            }
            out.write(text);
        } else if (*fam_sample) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            const FamilySample s = triangle_at(cfg, theta);
            if (format == "json") {
                std::string text = "{\"schema_version\": 1, \"theta\": " + fmt(s.theta) +
                                   ", \"vertices\": [" + json_point(s.triangle.a) + ", " +
                                   json_point(s.triangle.b) + ", " + json_point(s.triangle.c) +
                                   "], \"closure_residual\": " + fmt(s.closure_residual) + "}\n";
                out.write(text);
            } else if (format == "svg") {
                out.write(render_svg(family_scene(cfg, {theta})));
            } else {
                out.write(triangle_csv({s}));
            }
        } else if (*fam_sweep) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            std::vector<FamilySample> samples;
            double worst = 0.0;
            for (double th : admissible_thetas(cfg, n)) {
                samples.push_back(triangle_at(cfg, th));
                worst = std::max(worst, samples.back().closure_residual);
            }
            const double gate = 1e-9 * R * R;
            if (format == "svg") {
                std::vector<double> thetas;
                for (const auto& s : samples) thetas.push_back(s.theta);
                out.write(render_svg(family_scene(cfg, thetas)));
            } else {
                out.write(triangle_csv(samples));
            }
            if (worst > gate) {
                std::cerr << "closure residual " << fmt(worst) << " exceeds " << fmt(gate)
                          << "\n";
                return exit_verification;
            }
        } else if (*inv_sweep) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            const auto reports = sweep(cfg, n);
            std::string text = csv_row({"name", "n", "mean", "max_abs_dev", "expected",
                                        "verdict"});
            for (const auto& r : reports)
                text += csv_row({r.name, std::to_string(r.sample_count), fmt(r.mean),
                                 fmt(r.max_abs_deviation),
                                 r.expected ? fmt(*r.expected) : "",
                                 r.verdict == Verdict::Invariant ? "Invariant"
                                                                 : "NotInvariant"});
            out.write(text);
        } else if (*inv_expected) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            const InvariantRecord rec = expected_invariants(cfg);
            std::string text = "{\"schema_version\": 1";
            text += ", \"sin2_sum\": " + fmt(rec.sin2_sum);
            text += ", \"cos_product\": " + fmt(rec.cos_product);
            text += ", \"ah_bh_ch\": " + fmt(rec.ah_bh_ch);
            text += ", \"oh_distance\": " + fmt(rec.oh_distance);
            text += ", \"side_sq_sum\": " + fmt(rec.side_sq_sum);
            auto opt = [&](const char* k, const std::optional<double>& v) {
                if (v) text += std::string(", \"") + k + "\": " + fmt(*v);
            };
            opt("area_ratio_orthic", rec.area_ratio_orthic);
            opt("orthic_inradius", rec.orthic_inradius);
            opt("orthic_angle_expr", rec.orthic_angle_expr);
            opt("polar_radius", rec.polar_radius);
            opt("tangential_circumradius", rec.tangential_circumradius);
            text += "}\n";
            out.write(text);
        } else if (*con_sub[0] || *con_sub[1] || *con_sub[2]) {
            const Triangle t = triangle_from(tri_coords);
            std::string text = "{\"schema_version\": 1, ";
            if (*con_sub[0]) {
                text += "\"inellipse\": " + placed_conic_json(inellipse_centered_at_circumcenter(t));
            } else if (*con_sub[1]) {
                text += "\"conic\": " + placed_conic_json(conic_with_foci_O_H(t));
            } else {
                const SteinerEllipses se = steiner_ellipses(t);
                text += "\"inellipse\": " + placed_conic_json(se.inellipse) +
                        ", \"circumellipse\": " + placed_conic_json(se.circumellipse);
            }
            text += "}\n";
            out.write(text);
        } else if (*seq_hom) {
            const Triangle t = triangle_from(tri_coords);
            const auto tower = homothetic_tower(t, ratio, n);
            std::string text =
                csv_row({"level", "ax", "ay", "bx", "by", "cx", "cy", "f1x", "f1y", "f2x",
                         "f2y"});
            for (size_t i = 0; i < tower.size(); ++i) {
                const auto& e = tower[i];
                text += csv_row({std::to_string(i + 1), fmt(e.triangle.a.x),
                                 fmt(e.triangle.a.y), fmt(e.triangle.b.x), fmt(e.triangle.b.y),
                                 fmt(e.triangle.c.x), fmt(e.triangle.c.y), fmt(e.foci.f1.x),
                                 fmt(e.foci.f1.y), fmt(e.foci.f2.x), fmt(e.foci.f2.y)});
            }
            out.write(text);
        } else if (*seq_iter) {
            const auto states = poncelet_iterate(c, R, n);
            std::string text = csv_row({"step", "c", "R", "x", "beta_sign"});
            for (const auto& s : states)
                text += csv_row({std::to_string(s.n), fmt(s.c), fmt(s.R), fmt(s.c / s.R),
                                 s.beta > 0 ? "+1" : "-1"});
            out.write(text);
        } else if (*seq_orbit) {
            const auto orbit = dynamics_orbit(
    x0, n, paper_literal ? DynamicsForm::PaperLiteral : DynamicsForm::Reconciled);
            std::string text = csv_row({"step", "x"});
            for (size_t i = 0; i < orbit.size(); ++i)
                text += csv_row({std::to_string(i + 1), fmt(orbit[i])});
            out.write(text);
        } else if (*extremal) {
            const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
            const AreaProfile prof = extremal_triangles(cfg);
            // verify the closed forms against the deterministic scan
            const auto scan_max =
                scan_extremum(prof.f, prof.domain.first, prof.domain.second, true);
            if (std::abs(scan_max.area - prof.max.area) >
                1e-8 * std::max(1.0, prof.max.area)) {
                std::cerr << "closed-form maximum disagrees with the scan\n";
                return exit_verification;
            }
            std::string text = "{\"schema_version\": 1, \"domain\": [" +
                               fmt(prof.domain.first) + ", " + fmt(prof.domain.second) +
                               "], \"max\": {\"x\": " + fmt(prof.max.x) +
                               ", \"area\": " + fmt(prof.max.area) + "}";
            if (prof.min)
                text += ", \"min\": {\"x\": " + fmt(prof.min->x) +
                        ", \"area\": " + fmt(prof.min->area) + "}";
            text += "}\n";
            out.write(text);
        } else if (*locus) {
            Polyline pl;
            SceneDescription scene;
            if (locus_kind == "orthic") {
                const PonceletConfig cfg = build_config("center", R, c, cx, cy);
                pl = orthic_vertex_locus(cfg, n);
            } else if (locus_kind == "cassini") {
                pl = cassini_locus(R, c, n,
                                   cassini_variant == "cassini"
                                       ? CassiniVariant::ConstantProduct
                                       : CassiniVariant::MajorAxisLocus);
                const CassiniVariant variant = cassini_variant == "cassini"
                                                   ? CassiniVariant::ConstantProduct
                                                   : CassiniVariant::MajorAxisLocus;
                const double scale = std::max(R, c);
                for (const auto& p : pl.points)
                    if (std::abs(cassini_implicit_residual(R, c, p, variant)) >
                        1e-9 * std::pow(scale, 4)) {
                        std::cerr << "locus point fails its implicit equation\n";
                        return exit_verification;
                    }
            } else {
                const PonceletConfig cfg = build_config(scenario, R, c, cx, cy);
                const TangentialLocus tl = tangential_vertex_locus(cfg);
                std::string text = "{\"schema_version\": 1, ";
                if (tl.circle)
                    text += "\"circle\": {\"center\": " + json_point(tl.circle->center) +
                            ", \"radius\": " + fmt(tl.circle->radius) + "}";
                if (tl.ellipse) text += "\"ellipse\": " + placed_conic_json(*tl.ellipse);
                text += "}\n";
                out.write(text);
                return exit_ok;
            }
            if (format == "svg") {
                scene.polylines.push_back(pl);
                out.write(render_svg(scene));
            } else {
                std::string text = csv_row({"x", "y"});
                for (const auto& p : pl.points) text += csv_row({fmt(p.x), fmt(p.y)});
                out.write(text);
            }
        }
        return exit_ok;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
}
