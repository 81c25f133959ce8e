#include "rkp/regularization.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rkp/dynamics.hpp"
#include "rkp/errors.hpp"

namespace rkp {

namespace {

constexpr double kSphereTol = 1e-8;  // admission tolerance for (x,y) inputs

void require_on_bundle(const SpherePoint& sp, const char* who) {
    if (std::fabs(norm2(sp.x) - 1.0) > kSphereTol)
        throw std::domain_error(std::string(who) + ": |x| != 1");
    if (std::fabs(dot(sp.x, sp.y)) > kSphereTol * (1.0 + norm(sp.y)))
        throw std::domain_error(std::string(who) + ": x.y != 0");
}

}  // namespace

SpherePoint stereo_lift(const PhasePoint& pt) {
    double D = norm2(pt.q) + 1.0;
    double qp = dot(pt.q, pt.p);
    SpherePoint sp;
    sp.x = {2.0 * pt.q.x / D, 2.0 * pt.q.y / D, (norm2(pt.q) - 1.0) / D};
    sp.y = {0.5 * D * pt.p.x - qp * pt.q.x, 0.5 * D * pt.p.y - qp * pt.q.y, qp};
    return sp;
}

PhasePoint stereo_drop(const SpherePoint& sp) {
    require_on_bundle(sp, "stereo_drop");
    double denom = 1.0 - sp.x.z;
    if (denom <= 0.0) throw std::domain_error("stereo_drop: north pole excluded");
    PhasePoint pt;
    pt.q = {sp.x.x / denom, sp.x.y / denom};
    pt.p = {(sp.y.x + sp.y.z * pt.q.x) * denom, (sp.y.y + sp.y.z * pt.q.y) * denom};
    return pt;
}

double delaunay_energy(const SpherePoint& sp) {
    double y2 = norm2(sp.y);
    if (y2 == 0.0) throw std::domain_error("delaunay_energy: zero section");
    return -0.5 / y2;
}

double chart_delaunay_energy(const PhasePoint& pt) {
    double S = norm2(pt.p);
    if (S == 0.0) throw std::domain_error("chart_delaunay_energy: p = 0");
    double D = norm2(pt.q) + 1.0;
    return -2.0 / (D * D * S);
}

double chart_rkp_energy(const PhasePoint& pt) {
    return chart_delaunay_energy(pt) + cross(pt.q, pt.p);
}

LSFrame ls_frame(const PhasePoint& pt) {
    double r = norm(pt.q);
    if (r == 0.0) throw std::domain_error("ls_frame: collision input q = 0");
    double H = 0.5 * norm2(pt.p) - 1.0 / r;
    if (H >= 0.0) throw std::domain_error("ls_frame: outside the negative-energy region");
    double nu = std::sqrt(-2.0 * H);
    double qp = dot(pt.q, pt.p);
    LSFrame f;
    f.nu = nu;
    f.phi = nu * qp;
    Vec2 a12 = (1.0 / r) * pt.q - qp * pt.p;
    f.calA = {a12.x, a12.y, nu * qp};
    f.calB = {nu * r * pt.p.x, nu * r * pt.p.y, r * norm2(pt.p) - 1.0};
    return f;
}

SpherePoint ligon_schaaf(const PhasePoint& pt) {
    LSFrame f = ls_frame(pt);
    double s = std::sin(f.phi), c = std::cos(f.phi);
    SpherePoint sp;
    sp.x = s * f.calA + c * f.calB;
    sp.y = (-1.0 / f.nu) * (c * f.calA - s * f.calB);
    return sp;
}

PhasePoint ligon_schaaf_inverse(const SpherePoint& sp) {
    require_on_bundle(sp, "ligon_schaaf_inverse");
    double ynorm = norm(sp.y);
    if (ynorm == 0.0) throw std::domain_error("ligon_schaaf_inverse: zero section");
    if (sp.x.x == 0.0 && sp.x.y == 0.0 && sp.x.z >= 1.0 - kSphereTol)
        throw std::domain_error("ligon_schaaf_inverse: north pole excluded");
    double nu = 1.0 / ynorm;

    // phi = x3 sin(phi) - nu y3 cos(phi); the coefficient vector has norm
    // <= 1 because x and nu*y are orthonormal, so g below is nondecreasing
    // and the root is unique.
    double cx = sp.x.z, cy = nu * sp.y.z;
    double r = std::hypot(cx, cy);
    auto g = [&](double phi) { return phi - cx * std::sin(phi) + cy * std::cos(phi); };
    double lo = -r - 1e-9, hi = r + 1e-9;
    double phi = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        double val = g(phi);
        if (std::fabs(val) < 1e-14) { converged = true; break; }
        if (val > 0.0) hi = phi; else lo = phi;
        double gp = 1.0 - cx * std::cos(phi) - cy * std::sin(phi);
        double next = gp > 1e-12 ? phi - val / gp : 0.5 * (lo + hi);
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::fabs(next - phi) < 1e-16 && std::fabs(val) < 1e-11) {
            phi = next;
            converged = true;
            break;
        }
        phi = next;
    }
    if (!converged && std::fabs(g(phi)) > 1e-11)
        throw numeric_error("ligon_schaaf_inverse: angle solve did not converge");

    double s = std::sin(phi), c = std::cos(phi);
    Vec3 calA = s * sp.x - c * (nu * sp.y);
    Vec3 calB = c * sp.x + s * (nu * sp.y);

    // |q| = (1 - calB3)/nu^2 is exact and sign-safe; calB3 < 1 strictly on
    // the image of the negative-energy region.
    double qnorm = (1.0 - calB.z) / (nu * nu);
    if (qnorm <= 0.0) throw std::domain_error("ligon_schaaf_inverse: collision limit");
    Vec2 p{calB.x / (nu * qnorm), calB.y / (nu * qnorm)};
    double qp = phi / nu;
    Vec2 q = qnorm * (Vec2{calA.x, calA.y} + qp * p);
    return {q, p};
}

Vec3 so3_moment_plane(const PhasePoint& pt) {
    EnergyBundle e = energies(pt);
    if (e.H >= 0.0) throw std::domain_error("so3_moment_plane: requires H < 0");
    double nu = std::sqrt(-2.0 * e.H);
    Vec2 A = runge_lenz(pt).A;
    return {e.L, A.x / nu, A.y / nu};
}

Vec3 so3_moment_sphere(const SpherePoint& sp) { return cross(sp.x, sp.y); }

Vec3 sphere_moment_to_plane(Vec3 j) { return {j.z, -j.y, j.x}; }

PhasePoint levi_civita(const OscPoint& osc) {
    if (osc.v == 0.0) throw std::domain_error("levi_civita: v = 0");
    std::complex<double> q = osc.u / std::conj(osc.v);
    std::complex<double> p = 2.0 * osc.v * osc.v;
    return {from_complex(q), from_complex(p)};
}

OscPoint lc_lift(const PhasePoint& pt, int branch) {
    if (pt.p.x == 0.0 && pt.p.y == 0.0) throw std::domain_error("lc_lift: p = 0");
    if (branch != 1 && branch != -1) throw std::domain_error("lc_lift: branch must be +-1");
    std::complex<double> v = std::sqrt(0.5 * to_complex(pt.p));
    if (branch == -1) v = -v;
    OscPoint osc;
    osc.v = v;
    osc.u = to_complex(pt.q) * std::conj(v);
    return osc;
}

OscPoint linear_S(Vec2 z1, Vec2 z2) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    OscPoint osc;
    osc.u = {(z1.y - z2.y) * inv_sqrt2, (z1.x + z2.x) * inv_sqrt2};
    osc.v = {(z2.x - z1.x) * inv_sqrt2, (z1.y + z2.y) * inv_sqrt2};
    return osc;
}

std::pair<Vec2, Vec2> linear_S_inverse(const OscPoint& osc) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double u1 = osc.u.real(), u2 = osc.u.imag();
    double v1 = osc.v.real(), v2 = osc.v.imag();
    Vec2 z1{(u2 - v1) * inv_sqrt2, (u1 + v2) * inv_sqrt2};
    Vec2 z2{(u2 + v1) * inv_sqrt2, (v2 - u1) * inv_sqrt2};
    return {z1, z2};
}

namespace {

// J^T Omega J - Omega_src in the max norm, with J the central-difference
// Jacobian of fn (dimension dim_out, packed position-then-momentum).
double jacobian_form_residual(const std::function<std::vector<double>(std::array<double, 4>)>& fn,
                              const std::array<double, 4>& point, double h, int dim_out) {
    int half = dim_out / 2;
    std::vector<std::vector<double>> J(static_cast<std::size_t>(dim_out),
                                       std::vector<double>(4, 0.0));
    for (int j = 0; j < 4; ++j) {
        auto plus = point, minus = point;
        plus[static_cast<std::size_t>(j)] += h;
        minus[static_cast<std::size_t>(j)] -= h;
        auto fp = fn(plus), fm = fn(minus);
        for (int i = 0; i < dim_out; ++i)
            J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2.0 * h);
    }
    // omega(a,b) = sum_k a_k b_{k+half} - a_{k+half} b_k on columns of J
    double worst = 0.0;
    for (int ca = 0; ca < 4; ++ca) {
        for (int cb = 0; cb < 4; ++cb) {
            double pulled = 0.0;
            for (int k = 0; k < half; ++k)
                pulled += J[static_cast<std::size_t>(k)][static_cast<std::size_t>(ca)] *
                              J[static_cast<std::size_t>(k + half)][static_cast<std::size_t>(cb)] -
                          J[static_cast<std::size_t>(k + half)][static_cast<std::size_t>(ca)] *
                              J[static_cast<std::size_t>(k)][static_cast<std::size_t>(cb)];
            double expected = 0.0;
            if (cb == ca + 2) expected = 1.0;
            if (ca == cb + 2) expected = -1.0;
            worst = std::max(worst, std::fabs(pulled - expected));
        }
    }
    return worst;
}

}  // namespace

double symplectic_residual(MapKind map, const std::array<double, 4>& point, double h) {
    if (h <= 0.0) throw std::domain_error("symplectic_residual: h must be positive");
    switch (map) {
        case MapKind::StereoLift:
            return jacobian_form_residual(
                [](std::array<double, 4> w) {
                    SpherePoint sp = stereo_lift({{w[0], w[1]}, {w[2], w[3]}});
                    return std::vector<double>{sp.x.x, sp.x.y, sp.x.z, sp.y.x, sp.y.y, sp.y.z};
                },
                point, h, 6);
        case MapKind::LigonSchaaf:
            return jacobian_form_residual(
                [](std::array<double, 4> w) {
                    SpherePoint sp = ligon_schaaf({{w[0], w[1]}, {w[2], w[3]}});
                    return std::vector<double>{sp.x.x, sp.x.y, sp.x.z, sp.y.x, sp.y.y, sp.y.z};
                },
                point, h, 6);
        case MapKind::LinearS:
            return jacobian_form_residual(
                [](std::array<double, 4> w) {
                    OscPoint o = linear_S({w[0], w[2]}, {w[1], w[3]});
                    return std::vector<double>{o.u.real(), o.u.imag(), o.v.real(), o.v.imag()};
                },
                point, h, 4);
    }
    throw std::logic_error("symplectic_residual: bad selector");
}

double conjugacy_residual(const PhasePoint& pt, double T) {
    if (T < 0.0) throw std::domain_error("conjugacy_residual: T must be nonnegative");
    if (T == 0.0) return 0.0;
    EnergyBundle e = energies(pt);
    if (e.H >= 0.0) throw std::domain_error("conjugacy_residual: requires H < 0");
    double period = 2.0 * kPi * std::pow(-2.0 * e.H, -1.5);
    double dt = period / 2000.0;

    Trajectory plane = flow(VectorField::Kepler, pt, T, dt);
    if (plane.status != TrajectoryStatus::Complete)
        throw numeric_error("conjugacy_residual: Kepler flow truncated near collision");
    SpherePoint lhs = ligon_schaaf(plane.states.back());

    PhasePoint chart0 = stereo_drop(ligon_schaaf(pt));
    Trajectory chart = flow(VectorField::DelaunayChart, chart0, T, dt);
    SpherePoint rhs = stereo_lift(chart.states.back());

    Vec3 dx = lhs.x - rhs.x, dy = lhs.y - rhs.y;
    return std::sqrt(norm2(dx) + norm2(dy));
}

}  // namespace rkp
