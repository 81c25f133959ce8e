#pragma once

#include <optional>

#include "rkp/types.hpp"

namespace rkp {

// Unit conventions throughout: gravitational parameter 1, unit frame
// rotation rate, so H = |p|^2/2 - 1/|q|, L = q1 p2 - q2 p1, K = H + L.

/// Evaluate H, L, K and the effective potential U = -1/|q| - |q|^2/2.
/// Throws std::domain_error on a collision input q = 0.
EnergyBundle energies(const PhasePoint& pt);

double effective_potential(Vec2 q);
Vec2 effective_potential_gradient(Vec2 q);

struct RungeLenzResult {
    Vec2 A;                    // eccentricity-direction invariant
    std::optional<Vec2> eta;   // nu * A with nu = sqrt(-2H); empty for H >= 0
    double norm_sq_residual;   // |A|^2 - (1 + 2 H L^2), ~0 identically
};

/// Runge-Lenz vector A = (p2 L - q1/|q|, -p1 L - q2/|q|) and the scaled
/// eccentricity vector. |A| equals the orbit eccentricity for H < 0.
RungeLenzResult runge_lenz(const PhasePoint& pt);

enum class Observable { H, L, K, A1, A2, Eta1, Eta2 };

double observable(Observable f, const PhasePoint& pt);

/// Central-difference estimate of the Poisson bracket {f,g} with step h.
/// Error is O(h^2); evaluation failures of either field propagate.
double poisson_bracket(Observable f, Observable g, const PhasePoint& pt, double h);

enum class VectorField {
    Kepler,         // X_H
    Rotating,       // X_K
    DelaunayChart,  // Hamiltonian field of -2/((|q|^2+1)^2 |p|^2)
    RotatingChart,  // Delaunay chart field plus the rotation term
};

struct FlowOptions {
    double collision_radius = 1e-3;  // truncate when |q| drops below this
};

/// Integrate the selected field with the fixed-step order-8 scheme.
/// Records every step. Near-collision trajectories are truncated and
/// flagged in the returned status.
Trajectory flow(VectorField field, const PhasePoint& start, double T, double dt,
                const FlowOptions& opts = {});

/// Time derivative of the selected field at one state.
PhasePoint field_rhs(VectorField field, const PhasePoint& pt);

/// Solve Kepler's equation M = E - e sin(E) for the eccentric anomaly.
/// Newton iteration seeded at M + e sin(M), tolerance 1e-13, with a
/// bisection fallback. Requires 0 <= e < 1.
double solve_kepler(double M, double e);

/// Construct a closed-form ellipse of energy H < 0 and eccentricity e.
KeplerOrbit kepler_ellipse(double H, double e, double phase = 0.0,
                           double orientation = 0.0);

/// Position of the co-rotating orbit e^{it} * orbit(t).
Vec2 rotating_orbit(const KeplerOrbit& orbit, double t);

/// Full co-rotating state: both position and momentum rotated by e^{it}.
PhasePoint rotating_state(const KeplerOrbit& orbit, double t);

}  // namespace rkp
