#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rkp/catalogue.hpp"
#include "rkp/dynamics.hpp"

using namespace rkp;

TEST_CASE("resonance data") {
    ResonanceData rd = resonance_data({1, 1});
    CHECK(rd.c_kl == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(rd.L_kl == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rd.c_minus == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(rd.c_plus == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rd.classification == OrbitClass::Critical);

    rd = resonance_data({2, 1});
    CHECK(std::fabs(rd.c_kl + 0.79370) < 1e-5);
    CHECK(std::fabs(rd.L_kl - 0.79370) < 1e-5);
    CHECK(std::fabs(rd.c_minus + 1.58740) < 1e-5);
    CHECK(std::fabs(rd.c_plus) < 1e-14);
    CHECK(rd.classification == OrbitClass::Interior);

    rd = resonance_data({1, 2});
    CHECK(std::fabs(rd.c_kl + 0.31498) < 1e-5);
    CHECK(std::fabs(rd.L_kl - 1.25992) < 1e-5);
    CHECK(std::fabs(rd.c_minus + 1.57490) < 1e-5);
    CHECK(std::fabs(rd.c_plus - 0.94494) < 1e-5);
    CHECK(rd.classification == OrbitClass::Exterior);

    CHECK_THROWS_AS(resonance_data({2, 4}), std::invalid_argument);
}

TEST_CASE("period of the energy") {
    CHECK(period_of_energy(-0.5) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(period_of_energy(resonance_data({2, 1}).c_kl) ==
          doctest::Approx(kPi).epsilon(1e-14));
    CHECK(period_of_energy(resonance_data({1, 2}).c_kl) ==
          doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK_THROWS_AS(period_of_energy(0.0), std::domain_error);
}

TEST_CASE("eccentricity polynomial and its roots") {
    CHECK(std::fabs(p_value(-1.5, -2.0)) < 1e-14);
    CHECK(std::fabs(p_value(-1.5, -0.5)) < 1e-14);
    CHECK(p_value(0.3, 0.0) == 1.0);
    CHECK(p_value(-7.0, 0.0) == 1.0);

    CubicRoots roots = p_roots(-1.5);
    auto flat = roots.flat();
    REQUIRE(flat.size() == 3);
    CHECK(flat[0] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(flat[1] == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(flat[2] == doctest::Approx(-0.5).epsilon(1e-9));
    REQUIRE(roots.mults.size() == 2);
    CHECK(roots.mults[1] == 2);

    // above the critical energy only the lowest branch survives
    CubicRoots single = p_roots(-1.0);
    CHECK(single.flat().size() == 1);
    double r = single.roots[0];
    CHECK(std::fabs(p_value(-1.0, r)) < 1e-10);

    // well below it all three branches are real and distinct
    CubicRoots three = p_roots(-2.5);
    CHECK(three.flat().size() == 3);
    for (double root : three.roots) CHECK(std::fabs(p_value(-2.5, root)) < 1e-9);
}

TEST_CASE("circular-orbit defect") {
    CHECK(circular_residual(-0.5, 1.0) == 0.0);
    CHECK(circular_residual(-0.5, -1.0) == 0.0);
    for (double b : {0.2, 0.5, 1.3})
        CHECK(std::fabs(circular_residual(-1.0 / (8.0 * b * b), -2.0 * b)) < 1e-15);
    CHECK(circular_residual(0.0, 5.0) == 1.0);
}

TEST_CASE("resonances whose window contains an energy") {
    auto labels = tori_in_window(-1.55, 3);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].k == 1);
    CHECK(labels[0].l == 2);
    CHECK(labels[1].k == 2);
    CHECK(labels[1].l == 1);

    labels = tori_in_window(-1.4, 2);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].k == 1);
    CHECK(labels[0].l == 1);

    CHECK(tori_in_window(0.95, 3).empty());
    CHECK_THROWS_AS(tori_in_window(-1.4, 1), std::domain_error);
}

TEST_CASE("second-kind orbit symmetry") {
    SecondKindOrbit sk = second_kind_orbit({2, 1}, 0.3);
    CHECK(sk.symmetry_residual < 1e-6);
    CHECK(sk.trajectory.states.size() == 256);

    sk = second_kind_orbit({1, 1}, 0.0);
    CHECK(sk.symmetry_residual < 1e-9);

    sk = second_kind_orbit({3, 2}, 0.2);
    CHECK(sk.symmetry_residual < 1e-6);

    CHECK_THROWS_AS(second_kind_orbit({2, 1}, 1.0), std::domain_error);

    // co-rotating states conserve the rotating-frame energy
    sk = second_kind_orbit({2, 1}, 0.3, 64);
    double K0 = energies(sk.trajectory.states.front()).K;
    for (const auto& s : sk.trajectory.states)
        CHECK(energies(s).K == doctest::Approx(K0).epsilon(1e-11));
}
