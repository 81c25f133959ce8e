#include "rkp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rkp/catalogue.hpp"
#include "rkp/csvio.hpp"
#include "rkp/dynamics.hpp"
#include "rkp/regularization.hpp"
#include "rkp/toric.hpp"
#include "rkp/tree.hpp"

namespace rkp::verify {

double Sampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vec2 Sampler::plane_vec(double box) { return {uniform(-box, box), uniform(-box, box)}; }

PhasePoint Sampler::negative_energy_point() {
    for (;;) {
        double ang = uniform(0.0, 2.0 * kPi);
        double r = uniform(0.5, 1.6);
        Vec2 q{r * std::cos(ang), r * std::sin(ang)};
        Vec2 p = plane_vec(1.3);
        double H = 0.5 * norm2(p) - 1.0 / r;
        if (H < -0.85 || H > -0.12) continue;
        if (std::fabs(cross(q, p)) < 0.05) continue;
        return {q, p};
    }
}

PhasePoint Sampler::fixed_energy_point() {
    for (;;) {
        PhasePoint pt = negative_energy_point();
        double H = 0.5 * norm2(pt.p) - 1.0 / norm(pt.q);
        double lambda = -2.0 * H;  // similarity (q,p) -> (lambda q, p/sqrt(lambda))
        if (lambda < 0.5) continue;  // keep the rescaled point away from the origin
        return {lambda * pt.q, (1.0 / std::sqrt(lambda)) * pt.p};
    }
}

PhasePoint Sampler::generic_point() {
    for (;;) {
        Vec2 q = plane_vec(2.0);
        if (norm(q) < 0.3) continue;
        return {q, plane_vec(1.6)};
    }
}

OscPoint Sampler::osc_point() {
    for (;;) {
        OscPoint o{{uniform(-1.2, 1.2), uniform(-1.2, 1.2)},
                   {uniform(-1.2, 1.2), uniform(-1.2, 1.2)}};
        if (std::abs(o.v) < 0.25) continue;
        if (std::norm(o.u) + std::norm(o.v) < 0.3) continue;
        return o;
    }
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

using CheckFn = std::function<CheckResult(std::uint64_t, double)>;

struct CheckSpec {
    const char* name;
    double tolerance;
    CheckFn fn;
};

CheckResult make_result(const char* name, long long n, double residual, double tol) {
    return {name, n, residual, tol, residual <= tol};
}

// ---------------------------------------------------------------- dynamics

CheckResult check_energy_drift_kepler(std::uint64_t, double tol) {
    PhasePoint start{{1.0, 0.0}, {0.0, 1.0}};
    double period = 2.0 * kPi;
    Trajectory traj = flow(VectorField::Kepler, start, 10.0 * period, period / 2000.0);
    double H0 = energies(start).H;
    double worst = 0.0;
    for (const auto& s : traj.states) worst = std::max(worst, std::fabs(energies(s).H - H0));
    return make_result("energy_drift_kepler", static_cast<long long>(traj.states.size()),
                       worst, tol);
}

CheckResult check_energy_drift_rotating(std::uint64_t, double tol) {
    double worst = 0.0;
    long long n = 0;
    for (PhasePoint start : {PhasePoint{{1.0, 0.0}, {0.0, 1.0}},
                             PhasePoint{{0.9, 0.1}, {-0.2, 1.05}}}) {
        Trajectory traj = flow(VectorField::Rotating, start, 10.0, kPi / 1000.0);
        double K0 = energies(start).K;
        for (const auto& s : traj.states)
            worst = std::max(worst, std::fabs(energies(s).K - K0));
        n += static_cast<long long>(traj.states.size());
    }
    return make_result("energy_drift_rotating", n, worst, tol);
}

CheckResult check_poisson_commute_hl(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.negative_energy_point();
        worst = std::max(worst,
                         std::fabs(poisson_bracket(Observable::H, Observable::L, pt, 1e-5)));
    }
    return make_result("poisson_commute_hl", n, worst, tol);
}

CheckResult check_poisson_table(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    const double h = 1e-5;
    const int n = 200;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.negative_energy_point();
        EnergyBundle e = energies(pt);
        Vec2 A = runge_lenz(pt).A;
        worst = std::max(worst, std::fabs(poisson_bracket(Observable::H, Observable::L, pt, h)));
        // the eccentricity vector rotates covariantly: {L,A1} = A2, {L,A2} = -A1
        worst = std::max(worst,
                         std::fabs(poisson_bracket(Observable::L, Observable::A1, pt, h) - A.y));
        worst = std::max(worst,
                         std::fabs(poisson_bracket(Observable::L, Observable::A2, pt, h) + A.x));
        worst = std::max(worst, std::fabs(poisson_bracket(Observable::A1, Observable::A2, pt, h) +
                                          2.0 * e.H * e.L));
        // the eta relation closes the so(3) table on the fixed-energy slice
        PhasePoint fx = sampler.fixed_energy_point();
        double Lfx = energies(fx).L;
        worst = std::max(worst, std::fabs(poisson_bracket(Observable::Eta1, Observable::Eta2,
                                                          fx, h) - Lfx));
    }
    return make_result("poisson_table", n, worst, tol);
}

CheckResult check_potential_critical(std::uint64_t, double tol) {
    double worst = 0.0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * kPi * i / n;
        Vec2 q{std::cos(ang), std::sin(ang)};
        worst = std::max(worst, std::fabs(effective_potential(q) + 1.5));
        worst = std::max(worst, norm(effective_potential_gradient(q)));
        // the critical set of the rotating-frame energy over this circle
        PhasePoint crit{q, {q.y, -q.x}};
        worst = std::max(worst, std::fabs(energies(crit).K + 1.5));
    }
    return make_result("potential_critical", n, worst, tol);
}

CheckResult check_runge_lenz_identity(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 500;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::fabs(runge_lenz(sampler.generic_point()).norm_sq_residual));
    return make_result("runge_lenz_identity", n, worst, tol);
}

CheckResult check_rotational_symmetry(std::uint64_t, double tol) {
    double worst = 0.0;
    for (ResonanceLabel label : {ResonanceLabel{2, 1}, ResonanceLabel{3, 2}, ResonanceLabel{1, 2}})
        worst = std::max(worst, second_kind_orbit(label, 0.3).symmetry_residual);
    return make_result("rotational_symmetry", 3, worst, tol);
}

// ----------------------------------------------------------- regularization

CheckResult check_ls_sphere_constraints(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        SpherePoint sp = ligon_schaaf(sampler.negative_energy_point());
        worst = std::max(worst, std::fabs(norm(sp.x) - 1.0));
        worst = std::max(worst, std::fabs(dot(sp.x, sp.y)));
        if (sp.x.z >= 1.0 - 1e-12) worst = std::max(worst, 1.0);  // north pole excluded
    }
    return make_result("ls_sphere_constraints", n, worst, tol);
}

CheckResult check_ls_energy_match(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.negative_energy_point();
        worst = std::max(worst,
                         std::fabs(delaunay_energy(ligon_schaaf(pt)) - energies(pt).H));
    }
    return make_result("ls_energy_match", n, worst, tol);
}

CheckResult check_ls_momentum_match(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.negative_energy_point();
        Vec3 J = so3_moment_plane(pt);
        Vec3 Jt = sphere_moment_to_plane(so3_moment_sphere(ligon_schaaf(pt)));
        Vec3 d = J - Jt;
        worst = std::max({worst, std::fabs(d.x), std::fabs(d.y), std::fabs(d.z)});
    }
    return make_result("ls_momentum_match", n, worst, tol);
}

CheckResult check_ls_inverse_roundtrip(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.negative_energy_point();
        PhasePoint back = ligon_schaaf_inverse(ligon_schaaf(pt));
        worst = std::max({worst, std::fabs(back.q.x - pt.q.x), std::fabs(back.q.y - pt.q.y),
                          std::fabs(back.p.x - pt.p.x), std::fabs(back.p.y - pt.p.y)});
    }
    return make_result("ls_inverse_roundtrip", n, worst, tol);
}

CheckResult check_symplectic(const char* name, MapKind map, double h, std::uint64_t seed,
                             double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        std::array<double, 4> w{};
        if (map == MapKind::LinearS) {
            Vec2 z1 = sampler.plane_vec(1.5), z2 = sampler.plane_vec(1.5);
            w = {z1.x, z2.x, z1.y, z2.y};
        } else {
            PhasePoint pt = map == MapKind::LigonSchaaf ? sampler.negative_energy_point()
                                                        : sampler.generic_point();
            w = {pt.q.x, pt.q.y, pt.p.x, pt.p.y};
        }
        worst = std::max(worst, symplectic_residual(map, w, h));
    }
    return make_result(name, n, worst, tol);
}

CheckResult check_conjugacy(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 10;
    int produced = 0;
    while (produced < n) {
        PhasePoint pt = sampler.negative_energy_point();
        if (std::fabs(energies(pt).L) < 0.25) continue;
        if (norm(runge_lenz(pt).A) > 0.85) continue;
        worst = std::max(worst, conjugacy_residual(pt, 1.0));
        ++produced;
    }
    return make_result("conjugacy", n, worst, tol);
}

CheckResult check_lc_double_cover(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        OscPoint o = sampler.osc_point();
        PhasePoint a = levi_civita(o);
        PhasePoint b = levi_civita({-o.u, -o.v});
        bool same = std::memcmp(&a.q.x, &b.q.x, sizeof(double)) == 0 &&
                    std::memcmp(&a.q.y, &b.q.y, sizeof(double)) == 0 &&
                    std::memcmp(&a.p.x, &b.p.x, sizeof(double)) == 0 &&
                    std::memcmp(&a.p.y, &b.p.y, sizeof(double)) == 0;
        if (!same) worst = 1.0;
    }
    return make_result("lc_double_cover", n, worst, tol);
}

CheckResult check_lc_roundtrip(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.generic_point();
        while (norm(pt.p) < 0.2) pt = sampler.generic_point();
        for (int branch : {1, -1}) {
            PhasePoint back = levi_civita(lc_lift(pt, branch));
            worst = std::max({worst, std::fabs(back.q.x - pt.q.x),
                              std::fabs(back.q.y - pt.q.y), std::fabs(back.p.x - pt.p.x),
                              std::fabs(back.p.y - pt.p.y)});
        }
    }
    return make_result("lc_roundtrip", n, worst, tol);
}

CheckResult check_stereo_roundtrip(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.generic_point();
        PhasePoint back = stereo_drop(stereo_lift(pt));
        worst = std::max({worst, std::fabs(back.q.x - pt.q.x), std::fabs(back.q.y - pt.q.y),
                          std::fabs(back.p.x - pt.p.x), std::fabs(back.p.y - pt.p.y)});
    }
    return make_result("stereo_roundtrip", n, worst, tol);
}

// ------------------------------------------------------------------- toric

CheckResult check_pullback_ktilde(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        OscPoint o = sampler.osc_point();
        double lhs = ktilde(moment_mu(o));
        double rhs = chart_rkp_energy(levi_civita(o));
        worst = std::max(worst, std::fabs(lhs - rhs));
        // closed form of the pulled-back energy
        double s = std::norm(o.u) + std::norm(o.v);
        double direct = -1.0 / (2.0 * s * s) +
                        2.0 * (o.u.real() * o.v.imag() - o.u.imag() * o.v.real());
        worst = std::max(worst, std::fabs(lhs - direct));
    }
    return make_result("pullback_ktilde", n, worst, tol);
}

CheckResult check_diagram_commute(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        Vec2 z1 = sampler.plane_vec(1.5), z2 = sampler.plane_vec(1.5);
        // recorded axis-order convention: the quadrant moment map enters the
        // diagram with its factors swapped
        MomentPair via_nu = rotate_to_mu(moment_nu(z2, z1));
        MomentPair via_s = moment_mu(linear_S(z1, z2));
        worst = std::max({worst, std::fabs(via_nu.mu1 - via_s.mu1),
                          std::fabs(via_nu.mu2 - via_s.mu2)});
    }
    return make_result("diagram_commute", n, worst, tol);
}

CheckResult check_sublevel_decomposition(std::uint64_t, double tol) {
    double violations = 0.0;
    long long n = 0;
    for (double c : {-1.7, -2.0}) {
        Corners cr = corners(c);
        const int N = 220;
        for (int i = 1; i <= N; ++i) {
            double mu1 = 1.2 * cr.b_u * i / N;
            for (int j = 0; j <= N; ++j) {
                double mu2 = -mu1 + 2.0 * mu1 * j / N;
                ++n;
                if (ktilde({mu1, mu2}) > c) continue;
                bool bounded_side = mu1 <= cr.b + 1e-12;
                bool unbounded_side = mu1 >= cr.b_u - 1e-12;
                if (!bounded_side && !unbounded_side) violations += 1.0;
                if (bounded_side && mu2 > std::min(mu1, boundary_g(c, mu1)) + 1e-12)
                    violations += 1.0;
            }
        }
    }
    return make_result("sublevel_decomposition", n, violations, tol);
}

CheckResult check_component_separation(std::uint64_t, double tol) {
    const double c = -1.7;
    Corners cr = corners(c);
    double violations = 0.0;
    const int N = 300;
    long long n = 0;
    for (int i = 0; i < N; ++i) {
        double mu1 = cr.b + (cr.b_u - cr.b) * (i + 0.5) / N;
        for (int j = 0; j <= N; ++j) {
            double mu2 = -mu1 + 2.0 * mu1 * j / N;
            ++n;
            if (ktilde({mu1, mu2}) <= c) violations += 1.0;
        }
    }
    return make_result("component_separation", n, violations, tol);
}

CheckResult check_corner_circular(std::uint64_t, double tol) {
    double worst = 0.0;
    for (double c : {-1.5, -2.0, -3.0}) {
        Corners cr = corners(c);
        for (auto [t, sign] : {std::pair{cr.a, 1.0}, std::pair{cr.b, -1.0}}) {
            double H = -1.0 / (8.0 * t * t);
            double L = sign * 2.0 * t;
            worst = std::max(worst, std::fabs(circular_residual(H, L)));
        }
    }
    return make_result("corner_circular", 6, worst, tol);
}

CheckResult check_corners_critical(std::uint64_t, double tol) {
    Corners cr = corners(-1.5);
    double worst = std::max(std::fabs(cr.a - 0.25), std::fabs(cr.b - 0.5));
    worst = std::max(worst, std::fabs(cr.b_u - 0.5));
    // the pinch point evaluates exactly in binary arithmetic
    if (ktilde({0.5, -0.5}) != -1.5) worst = std::max(worst, 1.0);
    return make_result("corners_critical", 3, worst, tol);
}

CheckResult check_sctd_special(std::uint64_t, double tol) {
    double worst = 0.0;
    for (double c : {-1.5, -1.7, -2.0, -3.0, -5.0}) {
        SpecialReport rep = verify_special(profile(c, 201));
        if (!rep.pass) worst = std::max(worst, 1.0);
        if (c == -1.5)
            worst = std::max(worst, std::fabs(rep.slope_max + 1.0));  // equality case
        else if (rep.slope_max > -1.0 - 1e-6)
            worst = std::max(worst, 1.0);  // strict drop below -1 away from critical
    }
    return make_result("sctd_special", 5, worst, tol);
}

CheckResult check_torus_in_profile(std::uint64_t, double tol) {
    double violations = 0.0;
    long long n = 0;
    for (int sum = 2; sum <= 6; ++sum) {
        for (int k = 1; k < sum; ++k) {
            int l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ResonanceData rd = resonance_data({k, l});
            double hi = std::min(rd.c_plus, -1.5);
            if (rd.c_minus >= hi) continue;
            for (int j = 1; j <= 5; ++j) {
                double c = rd.c_minus + (hi - rd.c_minus) * j / 6.0;
                TorusPoint tp = torus_point(k, l, c);
                Corners cr = corners(c);
                ++n;
                double mu1 = tp.mp.mu1, mu2 = tp.mp.mu2;
                bool inside_bounded = mu1 >= cr.a - 1e-9 && mu1 <= cr.b + 1e-9 &&
                                      mu2 >= -mu1 - 1e-9 &&
                                      mu2 <= std::min(mu1, boundary_g(c, mu1)) + 1e-9;
                bool in_gap = mu1 > cr.b + 1e-9 && mu1 < cr.b_u - 1e-9;
                if (in_gap) violations += 1.0;
                if (inside_bounded != (mu1 <= cr.b + 1e-9)) violations += 1.0;
            }
        }
    }
    return make_result("torus_in_profile", n, violations, tol);
}

// --------------------------------------------------------------- catalogue

CheckResult check_catalogue_consistency(std::uint64_t, double tol) {
    double worst = 0.0;
    long long n = 0;
    for (int sum = 2; sum <= 20; ++sum) {
        for (int k = 1; k < sum; ++k) {
            int l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ++n;
            ResonanceData rd = resonance_data({k, l});
            double kk = k, ll = l;
            worst = std::max(worst, std::fabs(rd.c_minus - (rd.c_kl - rd.L_kl)));
            worst = std::max(worst, std::fabs(rd.c_plus - (rd.c_kl + rd.L_kl)));
            // the two printed closed forms of the window edges
            double lower = -0.5 * std::pow(kk / ll, 2.0 / 3.0) - std::cbrt(ll / kk);
            double upper = -0.5 * std::pow(kk / ll, 2.0 / 3.0) + std::cbrt(ll / kk);
            worst = std::max(worst, std::fabs(rd.c_minus - lower));
            worst = std::max(worst, std::fabs(rd.c_plus - upper));
            worst = std::max(worst, std::fabs(rd.L_kl - std::sqrt(-0.5 / rd.c_kl)));
        }
    }
    ResonanceData unit = resonance_data({1, 1});
    worst = std::max({worst, std::fabs(unit.c_kl + 0.5), std::fabs(unit.L_kl - 1.0),
                      std::fabs(unit.c_minus + 1.5), std::fabs(unit.c_plus - 0.5)});
    return make_result("catalogue_consistency", n, worst, tol);
}

CheckResult check_period_resonance(std::uint64_t, double tol) {
    double worst = 0.0;
    long long n = 0;
    for (int sum = 2; sum <= 20; ++sum) {
        for (int k = 1; k < sum; ++k) {
            int l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ++n;
            ResonanceData rd = resonance_data({k, l});
            worst = std::max(worst,
                             std::fabs(period_of_energy(rd.c_kl) * k - 2.0 * kPi * l));
        }
    }
    return make_result("period_resonance", n, worst, tol);
}

CheckResult check_classification_sign(std::uint64_t, double tol) {
    double violations = 0.0;
    long long n = 0;
    for (int sum = 2; sum <= 20; ++sum) {
        for (int k = 1; k < sum; ++k) {
            int l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ++n;
            ResonanceData rd = resonance_data({k, l});
            if ((std::fabs(rd.L_kl) < 1.0) != (k > l)) violations += 1.0;
            if ((std::fabs(rd.L_kl) > 1.0) != (k < l)) violations += 1.0;
            OrbitClass expect = k == l   ? OrbitClass::Critical
                                : k > l  ? OrbitClass::Interior
                                         : OrbitClass::Exterior;
            if (rd.classification != expect) violations += 1.0;
        }
    }
    return make_result("classification_sign", n, violations, tol);
}

CheckResult check_p_roots_critical(std::uint64_t, double tol) {
    CubicRoots roots = p_roots(-1.5);
    auto flat = roots.flat();
    double worst = 0.0;
    if (flat.size() != 3 || roots.mults != std::vector<int>{1, 2}) worst = 1.0;
    if (flat.size() == 3) {
        worst = std::max(worst, std::fabs(flat[0] + 2.0));
        worst = std::max(worst, std::fabs(flat[1] + 0.5));
        worst = std::max(worst, std::fabs(flat[2] + 0.5));
    }
    worst = std::max(worst, std::fabs(p_value(-1.5, -2.0)));
    worst = std::max(worst, std::fabs(p_value(-1.5, -0.5)));
    return make_result("p_roots_critical", 3, worst, tol);
}

CheckResult check_p_nonnegative(std::uint64_t seed, double tol) {
    Sampler sampler(seed);
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        PhasePoint pt = sampler.generic_point();
        EnergyBundle e = energies(pt);
        worst = std::max(worst, -p_value(e.K, e.H));
        // p agrees with the squared eccentricity-vector length
        worst = std::max(worst, std::fabs(p_value(e.K, e.H) - norm2(runge_lenz(pt).A)));
    }
    return make_result("p_nonnegative", n, worst, tol);
}

CheckResult check_second_kind_symmetry(std::uint64_t, double tol) {
    double worst = 0.0;
    for (ResonanceLabel label : {ResonanceLabel{2, 1}, ResonanceLabel{3, 2}, ResonanceLabel{1, 2}})
        for (double e : {0.2, 0.3})
            worst = std::max(worst, second_kind_orbit(label, e).symmetry_residual);
    return make_result("second_kind_symmetry", 6, worst, tol);
}

// ------------------------------------------------------------------- trees

CheckResult check_tree_levels(std::uint64_t, double tol) {
    double violations = 0.0;
    long long n = 0;
    for (int d = 0; d <= 12; ++d) {
        TreeLevel level = stern_brocot_level(d);
        n += static_cast<long long>(level.nodes.size());
        if (level.nodes.size() != (1u << d)) violations += 1.0;
        for (std::size_t i = 0; i < level.nodes.size(); ++i) {
            const Fraction& f = level.nodes[i];
            if (std::gcd(f.num, f.den) != 1) violations += 1.0;
            if (i > 0) {
                const Fraction& g = level.nodes[i - 1];
                // strict increase via cross multiplication
                if (!(g.num * f.den < f.num * g.den)) violations += 1.0;
            }
        }
    }
    auto eq = [](const TreeLevel& lv, std::vector<Fraction> want) {
        return lv.nodes == want;
    };
    if (!eq(stern_brocot_level(0), {{1, 1}})) violations += 1.0;
    if (!eq(stern_brocot_level(2), {{1, 3}, {2, 3}, {3, 2}, {3, 1}})) violations += 1.0;
    if (!eq(stern_brocot_level(3),
            {{1, 4}, {2, 5}, {3, 5}, {3, 4}, {4, 3}, {5, 3}, {5, 2}, {4, 1}}))
        violations += 1.0;
    return make_result("tree_levels", n, violations, tol);
}

CheckResult check_tree_paths(std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    double violations = 0.0;
    long long n = 0;
    for (int len = 0; len <= 10; ++len) {
        TreeLevel level = stern_brocot_level(len);
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t idx = rng() % level.nodes.size();
            std::string path;
            for (int bit = len - 1; bit >= 0; --bit) path += ((idx >> bit) & 1) ? '1' : '0';
            ++n;
            if (!(node_at(path) == level.nodes[idx])) violations += 1.0;
        }
    }
    return make_result("tree_paths", n, violations, tol);
}

CheckResult check_tree_transform(std::uint64_t, double tol) {
    double violations = 0.0;
    long long n = 0;
    std::map<std::pair<long long, long long>, std::pair<long long, long long>> seen;
    for (long long sum = 2; sum <= 50; ++sum) {
        for (long long k = 1; k < sum; ++k) {
            long long l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ++n;
            if (slope_cross_check(k, l) != 0.0) violations += 1.0;
            long long g = std::gcd(k + l, l - k < 0 ? k - l : l - k);
            if (g != 1 && g != 2 && !(k == 1 && l == 1)) violations += 1.0;
            Fraction t = transform_node(k, l);
            auto key = std::pair{t.num, t.den};
            auto [it, fresh] = seen.emplace(key, std::pair{k, l});
            if (!fresh) violations += 1.0;  // transform must stay injective
        }
    }
    if (!(new_tree_level(1).nodes == std::vector<Fraction>{{3, 1}, {-3, 1}})) violations += 1.0;
    if (!(new_tree_level(2).nodes ==
          std::vector<Fraction>{{2, 1}, {5, 1}, {-5, 1}, {-2, 1}}))
        violations += 1.0;
    if (!(new_tree_level(3).nodes ==
          std::vector<Fraction>{{5, 3}, {7, 3}, {4, 1}, {7, 1}, {-7, 1}, {-4, 1}, {-7, 3}, {-5, 3}}))
        violations += 1.0;
    return make_result("tree_transform", n, violations, tol);
}

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> table = {
        {"energy_drift_kepler", 1e-9, [](std::uint64_t s, double t) { return check_energy_drift_kepler(s, t); }},
        {"energy_drift_rotating", 1e-9, [](std::uint64_t s, double t) { return check_energy_drift_rotating(s, t); }},
        {"poisson_commute_hl", 1e-6, [](std::uint64_t s, double t) { return check_poisson_commute_hl(s, t); }},
        {"poisson_table", 1e-6, [](std::uint64_t s, double t) { return check_poisson_table(s, t); }},
        {"potential_critical", 1e-12, [](std::uint64_t s, double t) { return check_potential_critical(s, t); }},
        {"runge_lenz_identity", 1e-12, [](std::uint64_t s, double t) { return check_runge_lenz_identity(s, t); }},
        {"rotational_symmetry", 1e-6, [](std::uint64_t s, double t) { return check_rotational_symmetry(s, t); }},
        {"ls_sphere_constraints", 1e-10, [](std::uint64_t s, double t) { return check_ls_sphere_constraints(s, t); }},
        {"ls_energy_match", 1e-10, [](std::uint64_t s, double t) { return check_ls_energy_match(s, t); }},
        {"ls_momentum_match", 1e-9, [](std::uint64_t s, double t) { return check_ls_momentum_match(s, t); }},
        {"ls_inverse_roundtrip", 1e-9, [](std::uint64_t s, double t) { return check_ls_inverse_roundtrip(s, t); }},
        {"symplectic_ligon_schaaf", 1e-6, [](std::uint64_t s, double t) { return check_symplectic("symplectic_ligon_schaaf", MapKind::LigonSchaaf, 1e-5, s, t); }},
        {"symplectic_stereo_lift", 1e-6, [](std::uint64_t s, double t) { return check_symplectic("symplectic_stereo_lift", MapKind::StereoLift, 1e-5, s, t); }},
        {"symplectic_linear_s", 1e-14, [](std::uint64_t s, double t) { return check_symplectic("symplectic_linear_s", MapKind::LinearS, 1.0, s, t); }},
        {"conjugacy", 1e-5, [](std::uint64_t s, double t) { return check_conjugacy(s, t); }},
        {"lc_double_cover", 0.0, [](std::uint64_t s, double t) { return check_lc_double_cover(s, t); }},
        {"lc_roundtrip", 1e-12, [](std::uint64_t s, double t) { return check_lc_roundtrip(s, t); }},
        {"stereo_roundtrip", 1e-12, [](std::uint64_t s, double t) { return check_stereo_roundtrip(s, t); }},
        {"pullback_ktilde", 1e-10, [](std::uint64_t s, double t) { return check_pullback_ktilde(s, t); }},
        {"diagram_commute", 1e-12, [](std::uint64_t s, double t) { return check_diagram_commute(s, t); }},
        {"sublevel_decomposition", 0.0, [](std::uint64_t s, double t) { return check_sublevel_decomposition(s, t); }},
        {"component_separation", 0.0, [](std::uint64_t s, double t) { return check_component_separation(s, t); }},
        {"corner_circular", 1e-12, [](std::uint64_t s, double t) { return check_corner_circular(s, t); }},
        {"corners_critical", 1e-12, [](std::uint64_t s, double t) { return check_corners_critical(s, t); }},
        {"sctd_special", 1e-9, [](std::uint64_t s, double t) { return check_sctd_special(s, t); }},
        {"torus_in_profile", 0.0, [](std::uint64_t s, double t) { return check_torus_in_profile(s, t); }},
        {"catalogue_consistency", 1e-12, [](std::uint64_t s, double t) { return check_catalogue_consistency(s, t); }},
        {"period_resonance", 1e-12, [](std::uint64_t s, double t) { return check_period_resonance(s, t); }},
        {"classification_sign", 0.0, [](std::uint64_t s, double t) { return check_classification_sign(s, t); }},
        {"p_roots_critical", 1e-9, [](std::uint64_t s, double t) { return check_p_roots_critical(s, t); }},
        {"p_nonnegative", 1e-12, [](std::uint64_t s, double t) { return check_p_nonnegative(s, t); }},
        {"second_kind_symmetry", 1e-6, [](std::uint64_t s, double t) { return check_second_kind_symmetry(s, t); }},
        {"tree_levels", 0.0, [](std::uint64_t s, double t) { return check_tree_levels(s, t); }},
        {"tree_paths", 0.0, [](std::uint64_t s, double t) { return check_tree_paths(s, t); }},
        {"tree_transform", 0.0, [](std::uint64_t s, double t) { return check_tree_transform(s, t); }},
    };
    return table;
}

double tolerance_for(const CheckSpec& spec, const TolOverrides& overrides) {
    for (const auto& [prefix, value] : overrides)
        if (std::string_view(spec.name).starts_with(prefix)) return value;
    return spec.tolerance;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& spec : registry()) names.emplace_back(spec.name);
    return names;
}

CheckResult run_check(const std::string& name, std::uint64_t seed,
                      const TolOverrides& overrides) {
    for (const auto& spec : registry()) {
        if (name == spec.name)
            return spec.fn(seed ^ fnv1a(name), tolerance_for(spec, overrides));
    }
    throw std::invalid_argument("run_check: unknown check " + name);
}

std::vector<CheckResult> run_all(std::uint64_t seed, const TolOverrides& overrides,
                                 const std::string& only) {
    std::vector<CheckResult> out;
    for (const auto& spec : registry()) {
        if (!only.empty() && std::string_view(spec.name).find(only) == std::string_view::npos)
            continue;
        out.push_back(spec.fn(seed ^ fnv1a(spec.name), tolerance_for(spec, overrides)));
    }
    return out;
}

void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& results) {
    os << "check,n_samples,max_residual,tolerance,pass\n";
    for (const auto& r : results)
        os << r.name << ',' << r.n_samples << ',' << format_full(r.max_residual) << ','
           << format_full(r.tolerance) << ',' << (r.pass ? 1 : 0) << "\n";
}

}  // namespace rkp::verify
