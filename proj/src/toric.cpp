#include "rkp/toric.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rkp/catalogue.hpp"
#include "rkp/roots.hpp"

namespace rkp {

MomentPair moment_mu(const OscPoint& osc) {
    double u1 = osc.u.real(), u2 = osc.u.imag();
    double v1 = osc.v.real(), v2 = osc.v.imag();
    return {0.5 * (std::norm(osc.u) + std::norm(osc.v)), u1 * v2 - u2 * v1};
}

QPair moment_nu(Vec2 z1, Vec2 z2) { return {kPi * norm2(z1), kPi * norm2(z2)}; }

MomentPair rotate_to_mu(const QPair& qp) {
    return {(qp.nu1 + qp.nu2) / (2.0 * kPi), (qp.nu2 - qp.nu1) / (2.0 * kPi)};
}

QPair unrotate(const MomentPair& mp) {
    if (std::fabs(mp.mu2) > mp.mu1)
        throw std::domain_error("unrotate: point outside the cone |mu2| <= mu1");
    return {kPi * (mp.mu1 - mp.mu2), kPi * (mp.mu1 + mp.mu2)};
}

double ktilde(const MomentPair& mp) {
    if (mp.mu1 <= 0.0) throw std::domain_error("ktilde: mu1 must be positive");
    return -1.0 / (8.0 * mp.mu1 * mp.mu1) + 2.0 * mp.mu2;
}

double boundary_g(double c, double t) {
    if (t <= 0.0) throw std::domain_error("boundary_g: t must be positive");
    return 0.5 * c + 1.0 / (16.0 * t * t);
}

double boundary_g_slope(double t) { return -1.0 / (8.0 * t * t * t); }

Corners corners(double c) {
    if (c > -1.5) throw std::domain_error("corners: no bounded component for c > -3/2");

    // diagonal corner: 16 a^3 - 8 c a^2 - 1 = 0, strictly increasing for a > 0
    auto fa = [c](double a) { return ((16.0 * a - 8.0 * c) * a) * a - 1.0; };
    auto dfa = [c](double a) { return (48.0 * a - 16.0 * c) * a; };
    Corners out;
    out.a = c == -1.5 ? 0.25 : newton_bisect(fa, dfa, 1e-9, 1.0, 1e-14);

    if (c == -1.5) {
        // antidiagonal cubic factors as (b - 1/2)^2 (16 b + 4): double root
        out.b = 0.5;
        out.b_u = 0.5;
        return out;
    }

    // antidiagonal corners: 16 b^3 + 8 c b^2 + 1 = 0 with two positive
    // roots separated by 1/2 whenever c < -3/2
    auto fb = [c](double b) { return ((16.0 * b + 8.0 * c) * b) * b + 1.0; };
    auto dfb = [c](double b) { return (48.0 * b + 16.0 * c) * b; };
    out.b = newton_bisect(fb, dfb, 1e-9, 0.5, 1e-14);
    double hi = 1.0;
    while (fb(hi) <= 0.0) hi *= 2.0;
    out.b_u = newton_bisect(fb, dfb, 0.5, hi, 1e-14);
    return out;
}

namespace {

std::vector<double> chebyshev_nodes(double lo, double hi, int n) {
    std::vector<double> t(static_cast<std::size_t>(n));
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int j = 0; j < n; ++j)
        t[static_cast<std::size_t>(j)] = mid - half * std::cos(kPi * j / (n - 1));
    t.front() = lo;
    t.back() = hi;
    return t;
}

}  // namespace

DomainProfile profile(double c, int n) {
    if (n < 2) throw std::domain_error("profile: need at least two samples");
    Corners cr = corners(c);
    DomainProfile out;
    out.c = c;
    out.a = cr.a;
    out.b = cr.b;
    out.component = ProfileComponent::Bounded;
    for (double t : chebyshev_nodes(cr.a, cr.b, n))
        out.samples.emplace_back(t, boundary_g(c, t));
    return out;
}

DomainProfile unbounded_profile(double c, double t_max, int n) {
    if (n < 2) throw std::domain_error("unbounded_profile: need at least two samples");
    Corners cr = corners(c);
    if (t_max <= cr.b_u)
        throw std::domain_error("unbounded_profile: t_max must exceed the inner corner");
    DomainProfile out;
    out.c = c;
    out.a = cr.b_u;
    out.b = t_max;
    out.component = ProfileComponent::Unbounded;
    for (int j = 0; j < n; ++j) {
        double t = cr.b_u + (t_max - cr.b_u) * j / (n - 1);
        out.samples.emplace_back(t, std::min(t, boundary_g(c, t)));
    }
    return out;
}

DomainProfile connected_profile(double c, double t_max, int n) {
    if (c <= -1.5)
        throw std::domain_error("connected_profile: region splits for c <= -3/2");
    if (n < 2) throw std::domain_error("connected_profile: need at least two samples");
    // crossover of the level curve with the diagonal
    auto fa = [c](double a) { return ((16.0 * a - 8.0 * c) * a) * a - 1.0; };
    auto dfa = [c](double a) { return (48.0 * a - 16.0 * c) * a; };
    double hi = 1.0;
    while (fa(hi) <= 0.0) hi *= 2.0;
    double a = newton_bisect(fa, dfa, 1e-9, hi, 1e-14);
    if (t_max <= 0.0) t_max = std::max(1.5, 3.0 * a);
    if (t_max <= a) throw std::domain_error("connected_profile: t_max too small");
    DomainProfile out;
    out.c = c;
    out.a = a;
    out.b = t_max;
    out.component = ProfileComponent::Connected;
    for (int j = 0; j < n; ++j) {
        double t = a + (t_max - a) * j / (n - 1);
        out.samples.emplace_back(t, std::min(t, boundary_g(c, t)));
    }
    return out;
}

SpecialReport verify_special(const DomainProfile& profile) {
    if (profile.component != ProfileComponent::Bounded)
        throw std::domain_error("verify_special: bounded profile required");
    const auto& s = profile.samples;
    if (s.size() < 3) throw std::domain_error("verify_special: too few samples");

    SpecialReport rep;
    rep.convexity_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        double d01 = (s[i + 1].second - s[i].second) / (s[i + 1].first - s[i].first);
        double d12 = (s[i + 2].second - s[i + 1].second) / (s[i + 2].first - s[i + 1].first);
        rep.convexity_min = std::min(rep.convexity_min,
                                     (d12 - d01) / (s[i + 2].first - s[i].first));
    }

    rep.slope_max = -std::numeric_limits<double>::infinity();
    bool secants_ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double g1 = boundary_g_slope(s[i].first);
        rep.slope_max = std::max(rep.slope_max, g1);
        if (i + 1 < s.size()) {
            double secant = (s[i + 1].second - s[i].second) / (s[i + 1].first - s[i].first);
            double mid = boundary_g_slope(0.5 * (s[i].first + s[i + 1].first));
            if (std::fabs(secant - mid) > 1e-4 * std::max(1.0, std::fabs(mid)))
                secants_ok = false;
        }
    }

    rep.endpoint_residuals = {std::fabs(s.front().second - s.front().first),
                              std::fabs(s.back().second + s.back().first)};

    // unrotated frame: f' = (1 + g')/(1 - g')
    rep.f_slope_min = std::numeric_limits<double>::infinity();
    rep.f_slope_max = -std::numeric_limits<double>::infinity();
    for (const auto& [t, g] : s) {
        (void)g;
        double g1 = boundary_g_slope(t);
        double f1 = (1.0 + g1) / (1.0 - g1);
        rep.f_slope_min = std::min(rep.f_slope_min, f1);
        rep.f_slope_max = std::max(rep.f_slope_max, f1);
    }

    rep.pass = rep.convexity_min >= -1e-12 && rep.slope_max <= -1.0 + 1e-9 &&
               rep.endpoint_residuals.first <= 1e-9 &&
               rep.endpoint_residuals.second <= 1e-9 && secants_ok &&
               rep.f_slope_min >= -1.0 - 1e-9 && rep.f_slope_max <= 1e-9;
    return rep;
}

TorusPoint torus_point(long long k, long long l, double c) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("torus_point: k, l must be coprime positive integers");
    ResonanceData rd = resonance_data({k, l});
    if (!(c > rd.c_minus && c < rd.c_plus))
        throw std::domain_error("torus_point: energy outside the resonance window");
    TorusPoint tp;
    double ratio = static_cast<double>(l) / static_cast<double>(k);
    tp.mp.mu1 = 0.5 * std::cbrt(ratio);
    tp.mp.mu2 = 0.5 * (c - rd.c_kl);
    tp.slope_num = -k;
    tp.slope_den = l;
    return tp;
}

}  // namespace rkp
