#include "rkp/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "rkp/integrator.hpp"

namespace rkp {

EnergyBundle energies(const PhasePoint& pt) {
    double r = norm(pt.q);
    if (r == 0.0) throw std::domain_error("energies: collision input q = 0");
    EnergyBundle e;
    e.H = 0.5 * norm2(pt.p) - 1.0 / r;
    e.L = cross(pt.q, pt.p);
    e.K = e.H + e.L;
    e.U = -1.0 / r - 0.5 * r * r;
    return e;
}

double effective_potential(Vec2 q) {
    double r = norm(q);
    if (r == 0.0) throw std::domain_error("effective_potential: q = 0");
    return -1.0 / r - 0.5 * r * r;
}

Vec2 effective_potential_gradient(Vec2 q) {
    double r = norm(q);
    if (r == 0.0) throw std::domain_error("effective_potential_gradient: q = 0");
    double r3 = r * r * r;
    return {q.x / r3 - q.x, q.y / r3 - q.y};
}

RungeLenzResult runge_lenz(const PhasePoint& pt) {
    double r = norm(pt.q);
    if (r == 0.0) throw std::domain_error("runge_lenz: collision input q = 0");
    EnergyBundle e = energies(pt);
    RungeLenzResult out;
    out.A = {pt.p.y * e.L - pt.q.x / r, -pt.p.x * e.L - pt.q.y / r};
    out.norm_sq_residual = norm2(out.A) - (1.0 + 2.0 * e.H * e.L * e.L);
    if (e.H < 0.0) {
        double nu = std::sqrt(-2.0 * e.H);
        out.eta = nu * out.A;
    }
    return out;
}

double observable(Observable f, const PhasePoint& pt) {
    switch (f) {
        case Observable::H: return energies(pt).H;
        case Observable::L: return energies(pt).L;
        case Observable::K: return energies(pt).K;
        case Observable::A1: return runge_lenz(pt).A.x;
        case Observable::A2: return runge_lenz(pt).A.y;
        case Observable::Eta1:
        case Observable::Eta2: {
            auto rl = runge_lenz(pt);
            if (!rl.eta) throw std::domain_error("observable: eta undefined for H >= 0");
            return f == Observable::Eta1 ? rl.eta->x : rl.eta->y;
        }
    }
    throw std::logic_error("observable: bad selector");
}

double poisson_bracket(Observable f, Observable g, const PhasePoint& pt, double h) {
    if (h <= 0.0) throw std::domain_error("poisson_bracket: h must be positive");
    auto d = [&](Observable obs, int coord) {
        PhasePoint plus = pt, minus = pt;
        double* pc = coord == 0   ? &plus.q.x
                     : coord == 1 ? &plus.q.y
                     : coord == 2 ? &plus.p.x
                                  : &plus.p.y;
        double* mc = coord == 0   ? &minus.q.x
                     : coord == 1 ? &minus.q.y
                     : coord == 2 ? &minus.p.x
                                  : &minus.p.y;
        *pc += h;
        *mc -= h;
        return (observable(obs, plus) - observable(obs, minus)) / (2.0 * h);
    };
    double sum = 0.0;
    for (int k = 0; k < 2; ++k)
        sum += d(f, k) * d(g, k + 2) - d(f, k + 2) * d(g, k);
    return sum;
}

PhasePoint field_rhs(VectorField field, const PhasePoint& pt) {
    switch (field) {
        case VectorField::Kepler: {
            double r = norm(pt.q);
            double r3 = r * r * r;
            return {pt.p, {-pt.q.x / r3, -pt.q.y / r3}};
        }
        case VectorField::Rotating: {
            double r = norm(pt.q);
            double r3 = r * r * r;
            return {{pt.p.x - pt.q.y, pt.p.y + pt.q.x},
                    {-pt.q.x / r3 - pt.p.y, -pt.q.y / r3 + pt.p.x}};
        }
        case VectorField::DelaunayChart:
        case VectorField::RotatingChart: {
            double D = norm2(pt.q) + 1.0;
            double S = norm2(pt.p);
            double qc = 4.0 / (D * D * S * S);
            double pc = -8.0 / (D * D * D * S);
            PhasePoint rhs{{qc * pt.p.x, qc * pt.p.y}, {pc * pt.q.x, pc * pt.q.y}};
            if (field == VectorField::RotatingChart) {
                rhs.q.x -= pt.q.y;
                rhs.q.y += pt.q.x;
                rhs.p.x -= pt.p.y;
                rhs.p.y += pt.p.x;
            }
            return rhs;
        }
    }
    throw std::logic_error("field_rhs: bad selector");
}

Trajectory flow(VectorField field, const PhasePoint& start, double T, double dt,
                const FlowOptions& opts) {
    if (dt <= 0.0) throw std::domain_error("flow: dt must be positive");
    if (T < 0.0) throw std::domain_error("flow: T must be nonnegative");

    long long n = T == 0.0 ? 0 : static_cast<long long>(std::ceil(T / dt - 1e-12));
    double h = n > 0 ? T / static_cast<double>(n) : 0.0;

    auto rhs = [&](const std::array<double, 4>& y) {
        PhasePoint s{{y[0], y[1]}, {y[2], y[3]}};
        PhasePoint d = field_rhs(field, s);
        return std::array<double, 4>{d.q.x, d.q.y, d.p.x, d.p.y};
    };

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(n) + 1);
    traj.states.reserve(static_cast<std::size_t>(n) + 1);
    std::array<double, 4> y{start.q.x, start.q.y, start.p.x, start.p.y};
    traj.times.push_back(0.0);
    traj.states.push_back(start);
    for (long long i = 1; i <= n; ++i) {
        y = rk8_step(rhs, y, h);
        PhasePoint s{{y[0], y[1]}, {y[2], y[3]}};
        if (norm(s.q) < opts.collision_radius) {
            traj.status = TrajectoryStatus::TruncatedNearCollision;
            break;
        }
        traj.times.push_back(static_cast<double>(i) * h);
        traj.states.push_back(s);
    }
    return traj;
}

double solve_kepler(double M, double e) {
    if (e < 0.0 || e >= 1.0) throw std::domain_error("solve_kepler: need 0 <= e < 1");
    // reduce to [-pi, pi]; the solution shifts by the same multiple of 2 pi
    double k = std::floor((M + kPi) / (2.0 * kPi));
    double Mr = M - 2.0 * kPi * k;

    double lo = Mr - e, hi = Mr + e;
    double E = Mr + e * std::sin(Mr);
    const double tol = 1e-13;
    for (int it = 0; it < 50; ++it) {
        double f = E - e * std::sin(E) - Mr;
        if (std::fabs(f) < tol) break;
        if (f > 0.0) hi = E; else lo = E;
        double fp = 1.0 - e * std::cos(E);
        double step = f / fp;
        double En = E - step;
        if (En <= lo || En >= hi) En = 0.5 * (lo + hi);  // bisection fallback
        E = En;
    }
    return E + 2.0 * kPi * k;
}

KeplerOrbit kepler_ellipse(double H, double e, double phase, double orientation) {
    if (H >= 0.0) throw std::domain_error("kepler_ellipse: energy must be negative");
    if (e < 0.0 || e >= 1.0) throw std::domain_error("kepler_ellipse: need 0 <= e < 1");
    KeplerOrbit orbit;
    orbit.energy = H;
    orbit.eccentricity = e;
    orbit.semi_major = -1.0 / (2.0 * H);
    orbit.period = 2.0 * kPi * std::pow(-2.0 * H, -1.5);
    orbit.phase = phase;
    orbit.orientation = orientation;
    return orbit;
}

PhasePoint KeplerOrbit::at(double t) const {
    double n = 2.0 * kPi / period;  // mean motion
    double M = n * t + phase;
    double E = solve_kepler(M, eccentricity);
    double a = semi_major;
    double bax = std::sqrt(1.0 - eccentricity * eccentricity);
    double cE = std::cos(E), sE = std::sin(E);
    Vec2 pos{a * (cE - eccentricity), a * bax * sE};
    double Edot = n / (1.0 - eccentricity * cE);
    Vec2 vel{-a * sE * Edot, a * bax * cE * Edot};
    double co = std::cos(orientation), so = std::sin(orientation);
    auto rot = [&](Vec2 w) { return Vec2{co * w.x - so * w.y, so * w.x + co * w.y}; };
    return {rot(pos), rot(vel)};
}

Vec2 rotating_orbit(const KeplerOrbit& orbit, double t) {
    Vec2 pos = orbit.at(t).q;
    return from_complex(std::polar(1.0, t) * to_complex(pos));
}

PhasePoint rotating_state(const KeplerOrbit& orbit, double t) {
    PhasePoint s = orbit.at(t);
    auto rot = std::polar(1.0, t);
    return {from_complex(rot * to_complex(s.q)), from_complex(rot * to_complex(s.p))};
}

}  // namespace rkp
