#pragma once

#include <array>

#include "rkp/types.hpp"

namespace rkp {

// The regularization stack, bottom to top:
//
//   plane (q,p)  --stereo_lift-->  sphere chart (x,y)      cotangent lift of
//                                                          stereographic projection
//   plane (q,p)  --ligon_schaaf--> sphere (x,y)            negative-energy states
//                                                          to geodesic states,
//                                                          no time change
//   oscillator (u,v) --levi_civita--> chart (q,p)          two-to-one cover
//   C (+) C (z1,z2)  --linear_S-->  oscillator (u,v)       constant symplectic
//                                                          matrix
//
// Each map comes with a numeric verification hook (symplectic residual,
// flow conjugacy, momentum-map residual) used by the verify suite.

/// Cotangent lift of the stereographic embedding of the plane into the
/// unit sphere (projection point at the north pole e3):
///   x_k = 2 q_k / (|q|^2+1),  x_3 = (|q|^2-1)/(|q|^2+1)
///   y_k = ((|q|^2+1)/2) p_k - (q.p) q_k,  y_3 = q.p
/// Satisfies |x| = 1 and x.y = 0 identically.
SpherePoint stereo_lift(const PhasePoint& pt);

/// Inverse chart, q_k = x_k/(1 - x_3). Throws std::domain_error at the
/// north pole.
PhasePoint stereo_drop(const SpherePoint& sp);

/// Geodesic-type Hamiltonian -1/(2|y|^2) on the punctured cotangent
/// bundle of the sphere. Throws for y = 0.
double delaunay_energy(const SpherePoint& sp);

/// The same Hamiltonian read through the stereographic chart:
/// -2/((|q|^2+1)^2 |p|^2). Throws for p = 0.
double chart_delaunay_energy(const PhasePoint& pt);

/// Chart form of the rotating-frame energy: chart Delaunay term plus
/// angular momentum q1 p2 - q2 p1.
double chart_rkp_energy(const PhasePoint& pt);

/// Moving frame of the sphere-valued regularization map at a point with
/// H < 0.  With nu = sqrt(-2H):
///   calA = (q/|q| - (q.p) p,  nu (q.p))
///   calB = (nu |q| p,  |q| |p|^2 - 1)
///   phi  = nu (q.p)
/// calA and calB are orthonormal on the whole negative-energy region.
LSFrame ls_frame(const PhasePoint& pt);

/// The regularizing symplectomorphism from the negative-energy region of
/// the plane onto the punctured sphere bundle minus the north-pole fiber:
///   x =  sin(phi) calA + cos(phi) calB
///   y = -(1/nu) (cos(phi) calA - sin(phi) calB)
/// It preserves the energy (delaunay_energy(x,y) = H) and conjugates the
/// Kepler flow to the Delaunay flow without time change. Collision limits
/// press against the excluded north-pole fiber.
SpherePoint ligon_schaaf(const PhasePoint& pt);

/// Exact inverse. The frame angle phi solves the scalar equation
/// phi = x3 sin(phi) - nu y3 cos(phi) (unique solution, safeguarded
/// Newton/bisection); the frame then reconstructs (q,p) in closed form.
/// Throws std::domain_error off the admissible set and rkp::numeric_error
/// if the scalar solve fails to converge.
PhasePoint ligon_schaaf_inverse(const SpherePoint& sp);

/// Angular-momentum map of the planar problem with values in R^3:
/// (L, A1/nu, A2/nu). Requires H < 0.
Vec3 so3_moment_plane(const PhasePoint& pt);

/// Angular-momentum map on the sphere side: x cross y.
Vec3 so3_moment_sphere(const SpherePoint& sp);

/// Fixed orientation convention identifying the two momentum maps:
/// (j1,j2,j3) -> (j3,-j2,j1), a rotation by pi about (1,0,1)/sqrt(2).
/// so3_moment_plane(pt) equals this applied to
/// so3_moment_sphere(ligon_schaaf(pt)).
Vec3 sphere_moment_to_plane(Vec3 j);

/// Two-to-one cover (u,v) -> (u/conj(v), 2 v^2), v != 0.
PhasePoint levi_civita(const OscPoint& osc);

/// Branch of the inverse cover: v = branch * sqrt(p/2) (principal root),
/// u = q * conj(v). branch is +1 or -1; both branches map back to pt.
OscPoint lc_lift(const PhasePoint& pt, int branch);

/// Constant linear symplectomorphism from C (+) C to the oscillator side:
///   u1 = (y1-y2)/sqrt(2), u2 = (x1+x2)/sqrt(2),
///   v1 = (x2-x1)/sqrt(2), v2 = (y1+y2)/sqrt(2)
/// with z1 = (x1,y1), z2 = (x2,y2).
OscPoint linear_S(Vec2 z1, Vec2 z2);

/// Inverse of linear_S.
std::pair<Vec2, Vec2> linear_S_inverse(const OscPoint& osc);

enum class MapKind { StereoLift, LigonSchaaf, LinearS };

/// Finite-difference symplecticity residual of the selected map at a
/// point: max-norm of J^T Omega_target J - Omega_source with J the
/// central-difference Jacobian at step h. The sphere-valued maps are
/// checked against the ambient two-form of R^3 x R^3, which restricts to
/// the bundle form along the image.
/// For MapKind::LinearS the point is read as (x1, x2, y1, y2).
double symplectic_residual(MapKind map, const std::array<double, 4>& point, double h);

/// Flow-conjugacy residual: distance in R^6 between the regularized image
/// of the Kepler flow at time T and the chart-integrated Delaunay flow of
/// the regularized initial point.
double conjugacy_residual(const PhasePoint& pt, double T);

}  // namespace rkp
