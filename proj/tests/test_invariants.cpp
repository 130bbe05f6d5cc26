#include <doctest.h>

#include <cmath>
#include <map>

#include "poncelet/invariants.hpp"
#include "oracles.hpp"

using namespace poncelet;

namespace {

std::map<std::string, InvariantReport> by_name(const std::vector<InvariantReport>& v) {
    std::map<std::string, InvariantReport> m;
    for (const auto& r : v) m[r.name] = r;
    return m;
}

} // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("single-sample records against the closed forms") {
    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    const InvariantRecord r = invariants_of(triangle_at(c1, pi_v / 2.0).triangle);
    CHECK(r.sin2_sum == doctest::Approx(2.234375).epsilon(1e-12));
    CHECK(r.cos_product == doctest::Approx(0.1171875).epsilon(1e-10));
    CHECK(r.ah_bh_ch == doctest::Approx(7.5).epsilon(1e-11));
    CHECK(r.oh_distance == doctest::Approx(0.5).epsilon(1e-11));

    const PonceletConfig f1 = make_config(2.5, 1.0, Scenario::FocusCoincident);
    const InvariantRecord rf = invariants_of(triangle_at(f1, 1.0).triangle);
    CHECK(rf.sin2_sum == doctest::Approx(2.09).epsilon(1e-12));

    // equilateral: |OH| = 0
    Triangle eq;
    eq.a = {0.0, 1.0};
    eq.b = {-std::sqrt(3.0) / 2.0, -0.5};
    eq.c = {std::sqrt(3.0) / 2.0, -0.5};
    const InvariantRecord re = invariants_of(eq);
    CHECK(re.sin2_sum == doctest::Approx(2.25).epsilon(1e-13));
    CHECK(re.cos_product == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("angle-sum chain identity holds exactly") {
    std::mt19937 rng(7301);
    for (int i = 0; i < 200; ++i) {
        const InvariantRecord r = invariants_of(oracles::random_triangle(rng));
        CHECK(std::abs(r.sin2_sum - 2.0 - 2.0 * r.cos_product) < 1e-12);
    }
}

TEST_CASE("right triangles yield a partial record") {
    const InvariantRecord r = invariants_of({{0, 0}, {2, 0}, {0, 1}});
    CHECK(!r.area_ratio_orthic.has_value());
    CHECK(!r.orthic_inradius.has_value());
    CHECK(!r.polar_radius.has_value());
    CHECK(r.sin2_sum > 0.0);
}

TEST_CASE("vertex products of the orthocenter agree (half-gap form)") {
    std::mt19937 rng(7302);
    int used = 0;
    while (used < 100) {
        const Triangle t = oracles::random_triangle(rng);
        if (classify_shape(t) == TriangleShape::Right) continue;
        ++used;
        const CenterSet cs = center_set(t);
        const Triangle o = orthic_triangle(t);
        const double pa = dist(t.a, cs.H) * dist(cs.H, o.a);
        const double pb = dist(t.b, cs.H) * dist(cs.H, o.b);
        const double pc = dist(t.c, cs.H) * dist(cs.H, o.c);
        const double oh = dist(cs.O, cs.H);
        const double expect = 0.5 * std::abs(cs.R * cs.R - oh * oh);
        CHECK(std::abs(pa - pb) < 1e-10 * cs.R * cs.R);
        CHECK(std::abs(pb - pc) < 1e-10 * cs.R * cs.R);
        CHECK(pa == doctest::Approx(expect).epsilon(1e-9));
        // product of the three orthocenter distances
        const InvariantRecord r = invariants_of(t);
        CHECK(std::abs(r.ah_bh_ch - cs.R * std::abs(cs.R * cs.R - oh * oh)) <
              1e-9 * std::pow(cs.R, 3));
    }
}

TEST_CASE("expected invariants for the reference configurations") {
    const InvariantRecord c1 = expected_invariants(make_config(2.0, 1.0, Scenario::CenterCoincident));
    CHECK(c1.ah_bh_ch == doctest::Approx(7.5).epsilon(1e-13));
    CHECK(*c1.area_ratio_orthic == doctest::Approx(64.0 / 15.0).epsilon(1e-13));
    CHECK(*c1.orthic_inradius == doctest::Approx(0.46875).epsilon(1e-13));
    CHECK(c1.sin2_sum == doctest::Approx(2.234375).epsilon(1e-14));
    CHECK(*c1.tangential_circumradius == doctest::Approx(64.0 / 15.0).epsilon(1e-13));

    const InvariantRecord f1 = expected_invariants(make_config(2.5, 1.0, Scenario::FocusCoincident));
    CHECK(f1.ah_bh_ch == doctest::Approx(5.625).epsilon(1e-13));
    CHECK(*f1.area_ratio_orthic == doctest::Approx(100.0 / 9.0).epsilon(1e-13));
    CHECK(*f1.orthic_inradius == doctest::Approx(0.225).epsilon(1e-13));
    CHECK(f1.sin2_sum == doctest::Approx(2.09).epsilon(1e-14));

    const InvariantRecord c2 = expected_invariants(make_config(0.7, 1.0, Scenario::CenterCoincident));
    CHECK(*c2.polar_radius == doctest::Approx(0.8805726339).epsilon(1e-9));
    CHECK(!c2.orthic_inradius.has_value());

    const InvariantRecord f2 = expected_invariants(make_config(1.5, 1.0, Scenario::FocusCoincident));
    CHECK(*f2.polar_radius == doctest::Approx(std::sqrt(2.0) * 0.6614378277661477).epsilon(1e-12));
}

TEST_CASE("area ratio equals the circle-to-inellipse area ratio (center acute)") {
    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    const ConicParams p = conic_params(c1.conic);
    const InvariantRecord e = expected_invariants(c1);
    CHECK(*e.area_ratio_orthic ==
          doctest::Approx(c1.circle.radius * c1.circle.radius / (p.a * p.b)).epsilon(1e-13));
}

TEST_CASE("sweeps of the special scenarios are invariant and hit their targets") {
    for (auto [R, scen] : std::vector<std::pair<double, Scenario>>{
             {2.0, Scenario::CenterCoincident},
             {1.5, Scenario::CenterCoincident},
             {2.5, Scenario::FocusCoincident},
             {1.5, Scenario::FocusCoincident}}) {
        const PonceletConfig cfg = make_config(R, 1.0, scen);
        const auto reports = sweep(cfg, 120);
        REQUIRE(!reports.empty());
        for (const auto& rep : reports) {
            INFO(rep.name << " mean=" << rep.mean << " dev=" << rep.max_abs_deviation);
            CHECK(rep.verdict == Verdict::Invariant);
            CHECK(rep.max_abs_deviation <= 1e-8 * std::max(std::abs(rep.mean), 1e-3));
            REQUIRE(rep.expected.has_value());
            const double denom = std::max(std::abs(*rep.expected), 1e-9);
            CHECK(std::abs(rep.mean - *rep.expected) / denom < 1e-9);
        }
    }
}

TEST_CASE("focus-acute sweeps pin the orthic incircle at the other focus") {
    const PonceletConfig f1 = make_config(2.5, 1.0, Scenario::FocusCoincident);
    const auto m = by_name(sweep(f1, 90));
    REQUIRE(m.count("orthic_incenter_x"));
    CHECK(m.at("orthic_incenter_x").mean == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(std::abs(m.at("orthic_incenter_y").mean) < 1e-9);
    CHECK(m.at("orthic_incenter_x").max_abs_deviation < 1e-8);
    CHECK(m.at("orthic_incenter_y").max_abs_deviation < 1e-8);
    // center-scenario sweeps do not report the incenter rows
    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    CHECK(by_name(sweep(c1, 30)).count("orthic_incenter_x") == 0);
}

TEST_CASE("center-scenario orthic incircle radius is constant, its center is not") {
    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    double r_min = 1e9, r_max = -1e9, span = 0.0;
    for (double th : admissible_thetas(c1, 72)) {
        const Triangle orthic = orthic_triangle(triangle_at(c1, th).triangle);
        const double r = inradius(orthic);
        r_min = std::min(r_min, r);
        r_max = std::max(r_max, r);
        span = std::max(span, norm(incenter(orthic)));
    }
    CHECK(r_max - r_min < 1e-10);
    CHECK(span > 0.05); // the incenter genuinely moves
}

TEST_CASE("general-position sweep is flagged NotInvariant") {
    const PonceletConfig gen = config_from_center({0.3, 0.0}, 2.0, 1.0);
    const auto m = by_name(sweep(gen, 120));
    REQUIRE(m.count("sin2_sum"));
    CHECK(m.at("sin2_sum").verdict == Verdict::NotInvariant);
    CHECK(m.at("sin2_sum").max_abs_deviation > 1e-3);
    CHECK(!m.at("sin2_sum").expected.has_value());
}

TEST_CASE("insufficient samples raise") {
    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    CHECK_THROWS_AS(sweep(c1, 2), InsufficientSamplesError);
}

TEST_CASE("tangential family objects") {
    const PonceletConfig c3 = make_config(1.5, 1.0, Scenario::CenterCoincident);
    const TangentialFamilyObjects o3 = tangential_family_objects(c3);
    REQUIRE(o3.circum_ellipse.has_value());
    const ConicParams p3 = conic_params(o3.circum_ellipse->base);
    CHECK(p3.a == doctest::Approx(5.4).epsilon(1e-12));          // major, on y
    CHECK(p3.b == doctest::Approx(27.0 / 13.0).epsilon(1e-12));  // minor, on x
    CHECK(o3.congruent_circumradius == doctest::Approx(243.0 / 65.0).epsilon(1e-12));

    const PonceletConfig c1 = make_config(2.0, 1.0, Scenario::CenterCoincident);
    const TangentialFamilyObjects o1 = tangential_family_objects(c1);
    CHECK(o1.congruent_circumradius == doctest::Approx(64.0 / 15.0).epsilon(1e-12));
    const ConicParams p1 = conic_params(o1.circum_ellipse->base);
    CHECK(p1.b == doctest::Approx(16.0 / 5.0).epsilon(1e-12));
    CHECK(p1.a == doctest::Approx(16.0 / 3.0).epsilon(1e-12));

    const PonceletConfig f1 = make_config(2.5, 1.0, Scenario::FocusCoincident);
    const TangentialFamilyObjects of1 = tangential_family_objects(f1);
    REQUIRE(of1.circumcircle.has_value());
    CHECK(of1.circumcircle->center.x == doctest::Approx(109.0 / 9.0).epsilon(1e-12));
    CHECK(of1.circumcircle->radius == doctest::Approx(125.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("tangential sweep stays on the fixed objects and keeps its radius") {
    const PonceletConfig c3 = make_config(1.5, 1.0, Scenario::CenterCoincident);
    const TangentialFamilyObjects o3 = tangential_family_objects(c3);
    for (double th : admissible_thetas(c3, 60)) {
        const Triangle tt = tangential_triangle(triangle_at(c3, th).triangle);
        for (const Point p : {tt.a, tt.b, tt.c})
            CHECK(std::abs(placed_point_residual(*o3.circum_ellipse, p)) < 1e-8);
        CHECK(center_set(tt).R == doctest::Approx(o3.congruent_circumradius).epsilon(1e-10));
    }
    const PonceletConfig f2 = make_config(1.5, 1.0, Scenario::FocusCoincident);
    const TangentialFamilyObjects of2 = tangential_family_objects(f2);
    for (double th : admissible_thetas(f2, 60)) {
        const Triangle tt = tangential_triangle(triangle_at(f2, th).triangle);
        for (const Point p : {tt.a, tt.b, tt.c})
            CHECK(std::abs(dist(p, of2.circumcircle->center) - of2.circumcircle->radius) <
                  1e-8 * of2.circumcircle->radius);
    }
}

TEST_CASE("obtuse-focus polar circles all sit at the other focus") {
    const PonceletConfig f2 = make_config(1.5, 1.0, Scenario::FocusCoincident);
    const InvariantRecord want = expected_invariants(f2);
    for (double th : admissible_thetas(f2, 45)) {
        const PolarCircle pc = polar_circle(triangle_at(f2, th).triangle);
        CHECK(dist(pc.center, {-1.0, 0.0}) < 1e-8);
        CHECK(pc.radius == doctest::Approx(*want.polar_radius).epsilon(1e-10));
    }
}

TEST_SUITE_END();
