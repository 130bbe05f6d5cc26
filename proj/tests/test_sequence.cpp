#include <doctest.h>

#include <cmath>

#include "poncelet/sequence.hpp"
#include "oracles.hpp"

using namespace poncelet;

namespace {

// focus-scenario reference triangle with O = (1,0), H = (-1,0)
Triangle reference_member(double theta) {
    const PonceletConfig f1 = make_config(2.5, 1.0, Scenario::FocusCoincident);
    return triangle_at(f1, theta).triangle;
}

} // namespace

TEST_SUITE_BEGIN("sequence");

TEST_CASE("anticomplementary tower foci walk the Euler line") {
    const Triangle t = reference_member(0.9);
    const auto tower = homothetic_tower(t, -2.0, 3);
    REQUIRE(tower.size() == 3);
    // level 1: (H, L) = ((-1,0), (3,0))
    CHECK(dist(tower[0].foci.f1, {-1.0, 0.0}) < 1e-12);
    CHECK(dist(tower[0].foci.f2, {3.0, 0.0}) < 1e-12);
    // level 2: (3,0) and (-5,0)
    CHECK(dist(tower[1].foci.f1, {3.0, 0.0}) < 1e-12);
    CHECK(dist(tower[1].foci.f2, {-5.0, 0.0}) < 1e-12);
}

TEST_CASE("medial tower level 1 has foci at N and O") {
    const Triangle t = reference_member(2.2);
    const auto tower = homothetic_tower(t, -0.5, 2);
    CHECK(dist(tower[0].foci.f1, {0.0, 0.0}) < 1e-12); // N = midpoint of OH
    CHECK(dist(tower[0].foci.f2, {1.0, 0.0}) < 1e-12); // O
}

TEST_CASE("level-2 anticomplementary conic matches the drawn figure") {
    const Triangle t = reference_member(1.3);
    const auto tower = homothetic_tower(t, -2.0, 2);
    const PlacedConic& conic2 = tower[1].conic;
    CHECK(dist(conic2.center, {-1.0, 0.0}) < 1e-12);
    const ConicParams p = conic_params(conic2.base);
    CHECK(p.a == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(p.b == doctest::Approx(3.0).epsilon(1e-12));
    const auto [f1, f2] = placed_foci(conic2);
    CHECK(dist(f1, {3.0, 0.0}) < 1e-11);
    CHECK(dist(f2, {-5.0, 0.0}) < 1e-11);
}

TEST_CASE("every tower level circumscribes its conic") {
    const Triangle t = reference_member(0.35);
    const CenterSet cs = center_set(t);
    for (double ratio : {-2.0, -0.5}) {
        const auto tower = homothetic_tower(t, ratio, 4);
        double k = 1.0;
        for (size_t lvl = 0; lvl < tower.size(); ++lvl) {
            k *= ratio;
            const auto& e = tower[lvl];
            CHECK(center_set(e.triangle).R ==
                  doctest::Approx(std::abs(k) * cs.R).epsilon(1e-12));
            for (const Line l : {line_through(e.triangle.a, e.triangle.b),
                                 line_through(e.triangle.b, e.triangle.c),
                                 line_through(e.triangle.c, e.triangle.a)})
                CHECK(std::abs(placed_line_tangency(e.conic, l)) < 1e-9);
            // the stored foci are the conic's foci
            const auto [f1, f2] = placed_foci(e.conic);
            const double match = std::min(dist(f1, e.foci.f1) + dist(f2, e.foci.f2),
                                          dist(f1, e.foci.f2) + dist(f2, e.foci.f1));
            CHECK(match < 1e-10 * std::max(1.0, std::abs(k) * cs.R));
        }
    }
    CHECK_THROWS_AS(homothetic_tower(t, -2.0, 0), DomainError);
}

TEST_CASE("printed focus formulas drift from the homothety images at level 2") {
    const Point O{1.0, 0.0}, H{-1.0, 0.0};
    // level 1 agrees
    const FociPair lit1 = literal_focus_formulas(O, H, 1, -2.0);
    CHECK(dist(lit1.f1, {-1.0, 0.0}) < 1e-14);
    CHECK(dist(lit1.f2, {3.0, 0.0}) < 1e-14);
    // level 2 does not: the combination no longer averages to an affine map
    const FociPair lit2 = literal_focus_formulas(O, H, 2, -2.0);
    CHECK(dist(lit2.f1, {3.0, 0.0}) > 0.5);
    CHECK(dist(lit2.f2, {-5.0, 0.0}) > 0.5);
    // the homothety-derived level-2 foci are the drawn ones
    const Triangle t = reference_member(1.3);
    const auto tower = homothetic_tower(t, -2.0, 2);
    CHECK(dist(tower[1].foci.f1, {3.0, 0.0}) < 1e-12);
    CHECK(dist(tower[1].foci.f2, {-5.0, 0.0}) < 1e-12);
}

TEST_CASE("tangential-circle recurrence from the reference focus pair") {
    const auto states = poncelet_iterate(1.0, 2.5, 2);
    REQUIRE(states.size() == 2);
    CHECK(states[0].alpha == doctest::Approx(1.5625));
    CHECK(states[0].beta == doctest::Approx(0.5625));
    CHECK(states[1].c == doctest::Approx(109.0 / 9.0).epsilon(1e-14));
    CHECK(states[1].R == doctest::Approx(125.0 / 9.0).epsilon(1e-14));
    CHECK(states[1].beta < 0.0); // hyperbola from step 2 on: e_2 = 2c/R > 1
    CHECK(2.0 * states[1].c / states[1].R == doctest::Approx(1.744).epsilon(1e-12));
}

TEST_CASE("circle seed doubles the radius each step") {
    const auto states = poncelet_iterate(0.0, 1.0, 5);
    double want = 1.0;
    for (const auto& s : states) {
        CHECK(s.c == 0.0);
        CHECK(s.R == doctest::Approx(want).epsilon(1e-13));
        want *= 2.0;
    }
}

TEST_CASE("every iterated state is again a valid focus pair") {
    const auto states = poncelet_iterate(1.0, 2.5, 4);
    for (const auto& s : states) {
        const PonceletConfig cfg = config_of(s);
        CHECK(std::abs(check_criterion(cfg)) < 1e-9 * std::pow(s.R, 4));
        for (double th : admissible_thetas(cfg, 8))
            CHECK(triangle_at(cfg, th).closure_residual < 1e-9 * s.R * s.R);
    }
}

TEST_CASE("iteration stops with a typed error at the singular radius") {
    CHECK_THROWS_AS(poncelet_iterate(1.0, 2.0, 3), SingularIterationError);
    try {
        poncelet_iterate(1.0, 2.0, 3);
    } catch (const SingularIterationError& e) {
        CHECK(e.step == 1);
    }
}

TEST_CASE("normalized dynamics: fixed point at zero") {
    for (double x : dynamics_orbit(0.0, 6)) CHECK(x == 0.0);
}

TEST_CASE("normalized dynamics matches the (c, R) map exactly") {
    for (double x0 : {0.1, 0.25, 0.4, 0.45}) {
        const auto orbit = dynamics_orbit(x0, 4);
        const auto states = poncelet_iterate(x0, 1.0, 4);
        REQUIRE(orbit.size() == states.size());
        for (size_t i = 0; i < orbit.size(); ++i) {
            const double ratio = states[i].c / states[i].R;
            CHECK(std::abs(orbit[i] - ratio) <= 1e-12 * std::max(ratio, 1e-30));
        }
    }
}

TEST_CASE("printed normalized map disagrees with the (c, R) map") {
    // the printed map divides by (1 - 4x^2) where the exact normalization
    // multiplies by its sign
    const auto literal = dynamics_orbit(0.4, 2, DynamicsForm::PaperLiteral);
    CHECK(literal[1] == doctest::Approx(2.422222222222).epsilon(1e-12));
    const auto states = poncelet_iterate(0.4, 1.0, 2);
    const double true_ratio = states[1].c / states[1].R;
    CHECK(true_ratio == doctest::Approx(0.872).epsilon(1e-12));
    CHECK(std::abs(literal[1] - true_ratio) > 1.0);

    const auto lit01 = dynamics_orbit(0.1, 2, DynamicsForm::PaperLiteral);
    CHECK(lit01[1] == doctest::Approx(0.258333333333).epsilon(1e-12));
    CHECK(dynamics_orbit(0.1, 2)[1] == doctest::Approx(0.248).epsilon(1e-12));
}

TEST_CASE("orbits escape the elliptic window instead of converging to 1/2") {
    // reported behavior: iterates leave (0, 1/2) after a couple of steps
    const auto orbit = dynamics_orbit(0.1, 3);
    CHECK(orbit[2] > 0.5);
    const auto literal = dynamics_orbit(0.1, 3, DynamicsForm::PaperLiteral);
    CHECK(literal[2] > 0.5);
}

TEST_CASE("dynamics singularity raises a typed error") {
    CHECK_THROWS_AS(dynamics_orbit(0.5, 2), SingularIterationError);
}

TEST_SUITE_END();
