#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rkp/dynamics.hpp"

using namespace rkp;

namespace {

// test-side bisection oracle, independent of the production solver
double bisect(double (*f)(double), double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if ((f(lo) <= 0.0) == (f(mid) <= 0.0)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double kepler_gap(double E) { return E - 0.5 * std::sin(E) - 1.0; }

}  // namespace

TEST_CASE("energies on reference points") {
    EnergyBundle e = energies({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(e.H == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(e.L == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.K == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e.U == doctest::Approx(-1.5).epsilon(1e-15));

    e = energies({{1.0, 0.0}, {0.0, -1.0}});
    CHECK(e.K == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(e.L == doctest::Approx(-1.0).epsilon(1e-15));

    e = energies({{2.0, 0.0}, {0.0, 0.0}});
    CHECK(e.H == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(e.L == 0.0);
    CHECK(e.K == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(e.U == doctest::Approx(-2.5).epsilon(1e-15));

    CHECK_THROWS_AS(energies({{0.0, 0.0}, {1.0, 0.0}}), std::domain_error);
}

TEST_CASE("runge-lenz vector and residual") {
    auto rl = runge_lenz({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(std::fabs(rl.A.x) < 1e-15);
    CHECK(std::fabs(rl.A.y) < 1e-15);
    CHECK(std::fabs(rl.norm_sq_residual) < 1e-15);

    rl = runge_lenz({{1.0, 0.0}, {0.0, 1.2}});
    CHECK(rl.A.x == doctest::Approx(0.44).epsilon(1e-12));
    CHECK(std::fabs(rl.A.y) < 1e-15);
    CHECK(norm2(rl.A) == doctest::Approx(0.1936).epsilon(1e-12));
    CHECK(std::fabs(rl.norm_sq_residual) < 1e-12);

    // |eta|^2 = -2H |A|^2 by construction
    PhasePoint pt{{0.9, 0.3}, {0.2, 1.1}};
    rl = runge_lenz(pt);
    REQUIRE(rl.eta.has_value());
    double H = energies(pt).H;
    CHECK(norm2(*rl.eta) == doctest::Approx(-2.0 * H * norm2(rl.A)).epsilon(1e-13));

    // flagged, not thrown, for nonnegative energy
    auto hyper = runge_lenz({{0.5, 0.0}, {0.0, 3.0}});
    CHECK_FALSE(hyper.eta.has_value());
    CHECK(std::fabs(hyper.norm_sq_residual) < 1e-12);
}

TEST_CASE("poisson bracket estimates") {
    PhasePoint pt{{1.3, 0.2}, {0.1, 0.9}};
    CHECK(std::fabs(poisson_bracket(Observable::H, Observable::L, pt, 1e-5)) < 1e-6);
    CHECK(poisson_bracket(Observable::A1, Observable::A2, {{1.0, 0.0}, {0.0, 1.0}}, 1e-5) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::fabs(poisson_bracket(Observable::L, Observable::L, pt, 1e-5)) < 1e-10);

    CHECK_THROWS_AS(poisson_bracket(Observable::H, Observable::L, pt, 0.0),
                    std::domain_error);
    // eta is undefined at nonnegative energy and the failure propagates
    PhasePoint hyper{{0.5, 0.0}, {0.0, 3.0}};
    CHECK_THROWS_AS(poisson_bracket(Observable::Eta1, Observable::Eta2, hyper, 1e-5),
                    std::domain_error);
}

TEST_CASE("flow: circular orbit closes and equilibrium stays put") {
    PhasePoint circ{{1.0, 0.0}, {0.0, 1.0}};
    double period = 2.0 * kPi;
    Trajectory traj = flow(VectorField::Kepler, circ, period, period / 2000.0);
    REQUIRE(traj.status == TrajectoryStatus::Complete);
    PhasePoint end = traj.states.back();
    CHECK(std::fabs(end.q.x - 1.0) < 1e-9);
    CHECK(std::fabs(end.q.y) < 1e-9);
    CHECK(std::fabs(end.p.x) < 1e-9);
    CHECK(std::fabs(end.p.y - 1.0) < 1e-9);
    // interior states follow (cos t, sin t)
    std::size_t mid = traj.states.size() / 2;
    double t = traj.times[mid];
    CHECK(traj.states[mid].q.x == doctest::Approx(std::cos(t)).epsilon(1e-9));
    CHECK(traj.states[mid].q.y == doctest::Approx(std::sin(t)).epsilon(1e-9));

    PhasePoint crit{{1.0, 0.0}, {0.0, -1.0}};
    Trajectory still = flow(VectorField::Rotating, crit, 3.0, 0.01);
    for (const auto& s : still.states) {
        CHECK(std::fabs(s.q.x - 1.0) < 1e-12);
        CHECK(std::fabs(s.q.y) < 1e-12);
        CHECK(std::fabs(s.p.y + 1.0) < 1e-12);
    }

    PhasePoint ecc{{1.0, 0.0}, {0.0, 1.2}};
    double H0 = energies(ecc).H;
    Trajectory drift = flow(VectorField::Kepler, ecc, 10.0, 2.0 * kPi / 2000.0);
    for (const auto& s : drift.states)
        CHECK(std::fabs(energies(s).H - H0) < 1e-9);
}

TEST_CASE("flow truncates near collision with explicit status") {
    // radial drop toward the origin
    PhasePoint fall{{0.05, 0.0}, {-1.0, 0.0}};
    Trajectory traj = flow(VectorField::Kepler, fall, 1.0, 1e-4);
    CHECK(traj.status == TrajectoryStatus::TruncatedNearCollision);
    CHECK(traj.times.size() < 10001);
}

TEST_CASE("integrator reaches eighth order") {
    // halving the step on a short eccentric arc should shrink the endpoint
    // error by roughly 2^8
    KeplerOrbit orbit = kepler_ellipse(-0.5, 0.5);
    PhasePoint start = orbit.at(0.0);
    double T = 1.5;
    PhasePoint exact = orbit.at(T);
    auto endpoint_error = [&](int steps) {
        Trajectory traj = flow(VectorField::Kepler, start, T, T / steps);
        PhasePoint end = traj.states.back();
        return std::sqrt(norm2(end.q - exact.q) + norm2(end.p - exact.p));
    };
    double e1 = endpoint_error(40);
    double e2 = endpoint_error(80);
    REQUIRE(e1 > 1e-13);  // stay above roundoff so the ratio is meaningful
    double ratio = e1 / e2;
    CHECK(ratio > 120.0);
    CHECK(ratio < 600.0);
}

TEST_CASE("kepler equation solver") {
    CHECK(solve_kepler(0.0, 0.3) == 0.0);
    CHECK(solve_kepler(kPi, 0.7) == doctest::Approx(kPi).epsilon(1e-13));
    double oracle = bisect(kepler_gap, 0.0, 3.0);
    CHECK(solve_kepler(1.0, 0.5) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(std::fabs(solve_kepler(1.0, 0.5) - 1.49870) < 1e-5);
    CHECK_THROWS_AS(solve_kepler(1.0, 1.0), std::domain_error);
}

TEST_CASE("kepler ellipse evaluation") {
    CHECK_THROWS_AS(kepler_ellipse(-0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(kepler_ellipse(0.1, 0.5), std::domain_error);

    KeplerOrbit orbit = kepler_ellipse(-0.5, 0.44, 0.35, 1.1);
    CHECK(orbit.semi_major == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(orbit.period == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    for (double t : {0.0, 0.3, 2.0, 5.5}) {
        PhasePoint s = orbit.at(t);
        CHECK(energies(s).H == doctest::Approx(-0.5).epsilon(1e-12));
    }
    // periodicity
    PhasePoint s0 = orbit.at(0.7), s1 = orbit.at(0.7 + orbit.period);
    CHECK(std::fabs(s0.q.x - s1.q.x) < 1e-12);
    CHECK(std::fabs(s0.p.y - s1.p.y) < 1e-12);
}

TEST_CASE("rotating orbit samples") {
    KeplerOrbit circ = kepler_ellipse(-0.5, 0.0, 0.4);
    // rotation by e^{i0} is the identity
    Vec2 r0 = rotating_orbit(circ, 0.0);
    PhasePoint s0 = circ.at(0.0);
    CHECK(r0.x == doctest::Approx(s0.q.x).epsilon(1e-14));
    CHECK(r0.y == doctest::Approx(s0.q.y).epsilon(1e-14));
    // circular case: e^{it}(cos(t+phi), sin(t+phi)) stays on the unit circle
    for (double t : {0.2, 1.0, 4.0}) {
        Vec2 r = rotating_orbit(circ, t);
        CHECK(norm(r) == doctest::Approx(1.0).epsilon(1e-12));
    }

    // (2,1) resonance: advancing one period flips the sign
    double c21 = -0.5 * std::pow(2.0, 2.0 / 3.0);
    KeplerOrbit orbit = kepler_ellipse(c21, 0.3);
    CHECK(orbit.period == doctest::Approx(kPi).epsilon(1e-13));
    for (double t : {0.0, 0.4, 1.7}) {
        Vec2 before = rotating_orbit(orbit, t);
        Vec2 after = rotating_orbit(orbit, t + kPi);
        CHECK(std::fabs(after.x + before.x) < 1e-6);
        CHECK(std::fabs(after.y + before.y) < 1e-6);
    }
}
