#include "poncelet/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace poncelet {

double& verdict_tolerance() {
    static double tol = 1e-8;
    return tol;
}

Point incenter(const Triangle& t) {
    const auto [sa, sb, sc] = side_lengths(t);
    const double p = sa + sb + sc;
    return (1.0 / p) * (sa * t.a + sb * t.b + sc * t.c);
}

double inradius(const Triangle& t) {
    const auto [sa, sb, sc] = side_lengths(t);
    return 2.0 * area(t) / (sa + sb + sc);
}

InvariantRecord invariants_of(const Triangle& t) {
    const CenterSet cs = center_set(t);
    const auto sides = side_lengths(t);
    const auto cosines = angle_cosines(t);
    InvariantRecord rec;
    rec.side_sq_sum = sides[0] * sides[0] + sides[1] * sides[1] + sides[2] * sides[2];
    rec.sin2_sum = 3.0 - cosines[0] * cosines[0] - cosines[1] * cosines[1] -
                   cosines[2] * cosines[2];
    rec.cos_product = cosines[0] * cosines[1] * cosines[2];
    rec.oh_distance = dist(cs.O, cs.H);
    rec.ah_bh_ch = dist(t.a, cs.H) * dist(t.b, cs.H) * dist(t.c, cs.H);

    const TriangleShape shape = classify_shape(t);
    if (shape == TriangleShape::Right) return rec; // partial record

    const Triangle orthic = orthic_triangle(t);
    rec.area_ratio_orthic = area(t) / area(orthic);
    rec.tangential_circumradius = center_set(tangential_triangle(t)).R;

    // eps cos(angle at the foot of the obtuse vertex) + the other two cosines;
    // the obtuse vertex is the one opposite the longest side
    const auto oc = angle_cosines(orthic);
    if (shape == TriangleShape::Acute) {
        rec.orthic_inradius = inradius(orthic);
        rec.orthic_angle_expr = oc[0] + oc[1] + oc[2];
    } else {
        rec.polar_radius = polar_circle(t).radius;
        const int obtuse_idx = static_cast<int>(
            std::min_element(cosines.begin(), cosines.end()) - cosines.begin());
        rec.orthic_angle_expr = -oc[obtuse_idx] +
                                oc[(obtuse_idx + 1) % 3] + oc[(obtuse_idx + 2) % 3];
    }
    return rec;
}

InvariantRecord expected_invariants(const PonceletConfig& cfg) {
    if (cfg.scenario == Scenario::General)
        throw UnsupportedScenarioError("closed forms exist for the two special scenarios");
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    const double a = p.a, b = p.b;
    InvariantRecord rec;
    if (cfg.scenario == Scenario::CenterCoincident) {
        const bool acute = R > c;
        const double eps = acute ? 1.0 : -1.0;
        rec.oh_distance = c * c / R;
        rec.sin2_sum = 2.25 - std::pow(c / R, 4) / 4.0;
        rec.ah_bh_ch = 4.0 * a * b * (acute ? a + b : a - b);
        rec.area_ratio_orthic = R * R / (a * b);
        rec.orthic_angle_expr = eps * (1.5 - 0.5 * std::pow(c / R, 4));
        rec.tangential_circumradius = 2.0 * std::pow(R, 5) / std::abs(std::pow(R, 4) - std::pow(c, 4));
        if (acute)
            rec.orthic_inradius = a * b / (a + b);
        else
            rec.polar_radius = std::sqrt(2.0 * a * b);
    } else {
        const bool acute = p.kind == ConicKind::Ellipse;
        const double eps = acute ? 1.0 : -1.0;
        rec.oh_distance = 2.0 * c;
        rec.sin2_sum = 2.25 - c * c / (R * R);
        rec.ah_bh_ch = 8.0 * a * b * b;
        rec.area_ratio_orthic = 4.0 * a * a / (b * b);
        rec.orthic_angle_expr = eps * (1.5 - 2.0 * std::pow(c / R, 2));
        rec.tangential_circumradius = 2.0 * std::pow(R, 3) / std::abs(R * R - 4.0 * c * c);
        if (acute)
            rec.orthic_inradius = b * b / (2.0 * a);
        else
            rec.polar_radius = std::sqrt(2.0) * b;
    }
    rec.cos_product = (rec.sin2_sum - 2.0) / 2.0;
    rec.side_sq_sum = 9.0 * R * R - rec.oh_distance * rec.oh_distance;
    return rec;
}

namespace {

struct Series {
    std::vector<double> values;
    std::optional<double> expected;
};

InvariantReport reduce(const std::string& name, const Series& s) {
    InvariantReport rep;
    rep.name = name;
    rep.sample_count = static_cast<int>(s.values.size());
    double sum = 0.0;
    for (double v : s.values) sum += v;
    rep.mean = rep.sample_count ? sum / rep.sample_count : 0.0;
    for (double v : s.values)
        rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(v - rep.mean));
    rep.expected = s.expected;
    const double floor = std::abs(rep.mean) > verdict_tolerance()
                             ? std::abs(rep.mean)
                             : 1.0;
    rep.verdict = rep.max_abs_deviation < verdict_tolerance() * floor
                      ? Verdict::Invariant
                      : Verdict::NotInvariant;
    return rep;
}

} // namespace

std::vector<InvariantReport> sweep(const PonceletConfig& cfg, int n) {
    if (n < 3) throw InsufficientSamplesError("a sweep needs at least 3 samples");
    const auto thetas = admissible_thetas(cfg, n);
    if (thetas.size() < 3)
        throw InsufficientSamplesError("fewer than 3 admissible samples");

    std::optional<InvariantRecord> expected;
    if (cfg.scenario != Scenario::General) expected = expected_invariants(cfg);

    std::map<std::string, Series> acc;
    auto put = [&](const std::string& name, double v, std::optional<double> exp) {
        auto& s = acc[name];
        s.values.push_back(v);
        if (exp) s.expected = exp;
    };

    const bool focus_acute = cfg.scenario == Scenario::FocusCoincident &&
                             conic_params(cfg.conic).kind == ConicKind::Ellipse;
    for (double th : thetas) {
        const FamilySample fs = triangle_at(cfg, th);
        const InvariantRecord r = invariants_of(fs.triangle);
        auto e = [&](auto get) -> std::optional<double> {
            if (!expected) return std::nullopt;
            return get(*expected);
        };
        put("ah_bh_ch", r.ah_bh_ch, e([](auto& x) { return x.ah_bh_ch; }));
        put("cos_product", r.cos_product, e([](auto& x) { return x.cos_product; }));
        put("oh_distance", r.oh_distance, e([](auto& x) { return x.oh_distance; }));
        put("side_sq_sum", r.side_sq_sum, e([](auto& x) { return x.side_sq_sum; }));
        put("sin2_sum", r.sin2_sum, e([](auto& x) { return x.sin2_sum; }));
        auto put_opt = [&](const std::string& name, const std::optional<double>& v,
                           std::optional<double> exp) {
            if (v) put(name, *v, exp);
        };
        auto eo = [&](auto get) -> std::optional<double> {
            if (!expected) return std::nullopt;
            return get(*expected);
        };
        put_opt("area_ratio_orthic", r.area_ratio_orthic,
                eo([](auto& x) { return x.area_ratio_orthic; }));
        put_opt("orthic_angle_expr", r.orthic_angle_expr,
                eo([](auto& x) { return x.orthic_angle_expr; }));
        put_opt("orthic_inradius", r.orthic_inradius,
                eo([](auto& x) { return x.orthic_inradius; }));
        put_opt("polar_radius", r.polar_radius, eo([](auto& x) { return x.polar_radius; }));
        put_opt("tangential_circumradius", r.tangential_circumradius,
                eo([](auto& x) { return x.tangential_circumradius; }));
        if (focus_acute) {
            const Point inc = incenter(orthic_triangle(fs.triangle));
            const Point other = orthocenter_circle(cfg).center;
            put("orthic_incenter_x", inc.x, other.x);
            put("orthic_incenter_y", inc.y, other.y);
        }
    }
    std::vector<InvariantReport> out;
    out.reserve(acc.size());
    for (const auto& [name, series] : acc) out.push_back(reduce(name, series));
    return out;
}

TangentialFamilyObjects tangential_family_objects(const PonceletConfig& cfg) {
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    TangentialFamilyObjects obj;
    if (cfg.scenario == Scenario::FocusCoincident) {
        if (std::abs(R - 2.0 * c) <= length_tol(R))
            throw DegenerateConicError("R = 2c: tangential circle degenerates");
        const double cs = cfg.circle.center.x >= 0.0 ? c : -c;
        const double cx = cs * (5.0 * R * R - 4.0 * c * c) / (R * R - 4.0 * c * c);
        const double radius = 2.0 * std::pow(R, 3) / std::abs(R * R - 4.0 * c * c);
        obj.circumcircle = CircleSpec{{cx, 0.0}, radius};
        obj.congruent_circumradius = radius;
        // cross-check against the axis form 4 a^3 / b^2
        const double via_axes = 4.0 * std::pow(p.a, 3) / (p.b * p.b);
        if (std::abs(via_axes - radius) > length_tol(radius))
            throw GeometricInconsistencyError("tangential radius forms disagree");
        return obj;
    }
    if (cfg.scenario == Scenario::CenterCoincident) {
        if (std::abs(R - c) <= length_tol(R))
            throw DegenerateConicError("R = c: tangential ellipse degenerates");
        const double sx = 2.0 * std::pow(R, 3) / (R * R + c * c);
        const double sy = 2.0 * std::pow(R, 3) / std::abs(R * R - c * c);
        obj.circum_ellipse = PlacedConic{{sx * sx, sy * sy}, {0.0, 0.0}, 0.0};
        obj.congruent_circumradius =
            2.0 * std::pow(R, 5) / std::abs(std::pow(R, 4) - std::pow(c, 4));
        const bool acute = R > c;
        const double via_axes =
            std::pow(acute ? p.a + p.b : p.a - p.b, 3) / (2.0 * p.a * p.b);
        if (std::abs(via_axes - obj.congruent_circumradius) >
            length_tol(obj.congruent_circumradius))
            throw GeometricInconsistencyError("tangential radius forms disagree");
        return obj;
    }
    throw UnsupportedScenarioError("tangential family objects exist for the special scenarios");
}

} // namespace poncelet
