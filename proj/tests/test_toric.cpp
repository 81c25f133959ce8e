#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rkp/regularization.hpp"
#include "rkp/toric.hpp"
#include "rkp/verify.hpp"

using namespace rkp;

namespace {

double test_bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if ((f(lo) <= 0.0) == (f(mid) <= 0.0)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("moment map on the oscillator side") {
    MomentPair mp = moment_mu({{1.0, 0.0}, {1.0, 0.0}});
    CHECK(mp.mu1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(mp.mu2) < 1e-15);

    mp = moment_mu({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(mp.mu1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mp.mu2 == doctest::Approx(-1.0).epsilon(1e-15));  // cone boundary

    mp = moment_mu({{0.0, 0.0}, {0.0, 0.0}});
    CHECK(mp.mu1 == 0.0);
    CHECK(mp.mu2 == 0.0);

    verify::Sampler sampler(17);
    for (int i = 0; i < 300; ++i) {
        MomentPair m = moment_mu(sampler.osc_point());
        CHECK(std::fabs(m.mu2) <= m.mu1 + 1e-14);
    }
}

TEST_CASE("quadrant moment map and phase invariance") {
    QPair qp = moment_nu({1.0, 0.0}, {0.0, 0.0});
    CHECK(qp.nu1 == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(qp.nu2 == 0.0);
    qp = moment_nu({1.0, 0.0}, {1.0, 0.0});
    CHECK(qp.nu1 == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(qp.nu2 == doctest::Approx(kPi).epsilon(1e-15));

    // invariance under independent phase rotations
    Vec2 z1{0.8, -0.4}, z2{-0.3, 1.1};
    QPair base = moment_nu(z1, z2);
    for (double ang1 : {0.3, 2.1}) {
        for (double ang2 : {1.2, 5.0}) {
            Vec2 w1 = from_complex(std::polar(1.0, ang1) * to_complex(z1));
            Vec2 w2 = from_complex(std::polar(1.0, ang2) * to_complex(z2));
            QPair rotated = moment_nu(w1, w2);
            CHECK(rotated.nu1 == doctest::Approx(base.nu1).epsilon(1e-13));
            CHECK(rotated.nu2 == doctest::Approx(base.nu2).epsilon(1e-13));
        }
    }
}

TEST_CASE("frame rotation between the quadrant and the cone") {
    MomentPair mp = rotate_to_mu({kPi, 0.0});
    CHECK(mp.mu1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mp.mu2 == doctest::Approx(-0.5).epsilon(1e-15));
    mp = rotate_to_mu({0.0, kPi});
    CHECK(mp.mu1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mp.mu2 == doctest::Approx(0.5).epsilon(1e-15));

    verify::Sampler sampler(23);
    for (int i = 0; i < 300; ++i) {
        double mu1 = sampler.uniform(0.01, 2.0);
        double mu2 = sampler.uniform(-mu1, mu1);
        QPair qp = unrotate({mu1, mu2});
        MomentPair back = rotate_to_mu(qp);
        CHECK(std::fabs(back.mu1 - mu1) < 1e-14);
        CHECK(std::fabs(back.mu2 - mu2) < 1e-14);
    }
    CHECK_THROWS_AS(unrotate({0.5, 0.7}), std::domain_error);
}

TEST_CASE("reduced energy") {
    CHECK(ktilde({0.5, -0.5}) == -1.5);  // exact in binary arithmetic
    CHECK(ktilde({1.0, 0.0}) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(ktilde({0.25, 0.25}) == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK_THROWS_AS(ktilde({0.0, 0.1}), std::domain_error);
}

TEST_CASE("level curve of the reduced energy") {
    CHECK(boundary_g(-1.5, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(boundary_g(-1.5, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(boundary_g(-1.5, 0.375) == doctest::Approx(-11.0 / 36.0).epsilon(1e-14));
    CHECK_THROWS_AS(boundary_g(-1.5, 0.0), std::domain_error);
    // the curve solves ktilde = c
    for (double t : {0.2, 0.4, 0.9}) {
        double g = boundary_g(-2.0, t);
        CHECK(ktilde({t, g}) == doctest::Approx(-2.0).epsilon(1e-13));
    }
}

TEST_CASE("corner roots") {
    Corners critical = corners(-1.5);
    CHECK(critical.a == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(critical.b == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(critical.b_u == doctest::Approx(0.5).epsilon(1e-13));

    // independent bisection oracles at c = -2
    double c = -2.0;
    auto fa = [c](double t) { return 16.0 * t * t * t - 8.0 * c * t * t - 1.0; };
    auto fb = [c](double t) { return 16.0 * t * t * t + 8.0 * c * t * t + 1.0; };
    double a_oracle = test_bisect(fa, 1e-6, 1.0);
    double b_oracle = test_bisect(fb, 1e-6, 0.5);
    double bu_oracle = test_bisect(fb, 0.5, 2.0);
    Corners cr = corners(c);
    CHECK(cr.a == doctest::Approx(a_oracle).epsilon(1e-10));
    CHECK(cr.b == doctest::Approx(b_oracle).epsilon(1e-10));
    CHECK(cr.b_u == doctest::Approx(bu_oracle).epsilon(1e-10));
    CHECK(std::fabs(cr.a - 0.2258) < 5e-4);
    CHECK(std::fabs(cr.b - 0.2985) < 5e-4);
    CHECK(std::fabs(cr.b_u - 0.92732) < 5e-4);

    CHECK_THROWS_AS(corners(-1.0), std::domain_error);
}

TEST_CASE("bounded profile") {
    DomainProfile pr = profile(-1.5, 101);
    CHECK(pr.samples.size() == 101);
    CHECK(pr.samples.front().first == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(pr.samples.front().second == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pr.samples.back().first == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(pr.samples.back().second == doctest::Approx(-0.5).epsilon(1e-12));

    pr = profile(-2.0, 101);
    for (std::size_t i = 1; i < pr.samples.size(); ++i) {
        CHECK(pr.samples[i].first > pr.samples[i - 1].first);
        CHECK(pr.samples[i].second < pr.samples[i - 1].second);  // g decreasing
    }

    DomainProfile unb = unbounded_profile(-1.5, 2.0, 101);
    CHECK(unb.samples.front().first == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(unb.samples.front().second == doctest::Approx(-0.5).epsilon(1e-11));
    CHECK_THROWS_AS(unbounded_profile(-1.5, 0.4, 101), std::domain_error);
    CHECK_THROWS_AS(profile(-2.0, 1), std::domain_error);
}

TEST_CASE("special-concavity verification") {
    SpecialReport rep = verify_special(profile(-1.5, 201));
    CHECK(rep.pass);
    CHECK(rep.slope_max == doctest::Approx(-1.0).epsilon(1e-12));

    rep = verify_special(profile(-2.0, 201));
    CHECK(rep.pass);
    Corners cr = corners(-2.0);
    CHECK(rep.slope_max == doctest::Approx(-1.0 / (8.0 * cr.b * cr.b * cr.b)).epsilon(1e-10));
    CHECK(std::fabs(rep.slope_max + 4.70) < 0.01);

    // fabricated profile outside the admissible energy range must fail
    DomainProfile fake;
    fake.c = -1.0;
    fake.a = 0.3;
    fake.b = 0.7;
    fake.component = ProfileComponent::Bounded;
    for (int i = 0; i <= 100; ++i) {
        double t = 0.3 + 0.4 * i / 100.0;
        fake.samples.emplace_back(t, boundary_g(-1.0, t));
    }
    SpecialReport bad = verify_special(fake);
    CHECK_FALSE(bad.pass);
    CHECK(bad.slope_max > -1.0);

    CHECK_THROWS_AS(verify_special(unbounded_profile(-2.0, 2.0, 51)), std::domain_error);
}

TEST_CASE("resonant torus location") {
    TorusPoint tp = torus_point(1, 1, -1.4);
    CHECK(tp.mp.mu1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(tp.mp.mu2 == doctest::Approx(-0.45).epsilon(1e-14));
    CHECK(tp.slope_num == -1);
    CHECK(tp.slope_den == 1);

    tp = torus_point(2, 1, -1.55);
    CHECK(tp.mp.mu1 == doctest::Approx(0.39685).epsilon(1e-4));
    CHECK(tp.mp.mu2 == doctest::Approx(-0.37815).epsilon(1e-4));
    CHECK(tp.slope_num == -2);
    CHECK(ktilde(tp.mp) == doctest::Approx(-1.55).epsilon(1e-12));

    CHECK_THROWS_AS(torus_point(2, 4, -1.55), std::invalid_argument);
    CHECK_THROWS_AS(torus_point(1, 1, -2.0), std::domain_error);

    // the level-curve tangent at the torus point matches -k/l
    for (auto [k, l, c] : {std::tuple{1, 1, -1.4}, {2, 1, -1.55}, {1, 2, -1.0}}) {
        TorusPoint t = torus_point(k, l, c);
        CHECK(boundary_g_slope(t.mp.mu1) ==
              doctest::Approx(-double(k) / double(l)).epsilon(1e-12));
    }
}

TEST_CASE("pullback of the rotating-frame energy through the cover") {
    verify::Sampler sampler(41);
    for (int i = 0; i < 500; ++i) {
        OscPoint o = sampler.osc_point();
        double lhs = ktilde(moment_mu(o));
        double rhs = chart_rkp_energy(levi_civita(o));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
}
