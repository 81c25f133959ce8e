#pragma once

#include <utility>
#include <vector>

#include "rkp/types.hpp"

namespace rkp {

// Reduced picture of the rotating-frame energy: through the moment map mu
// the pulled-back Hamiltonian becomes ktilde(mu1, mu2) = -1/(8 mu1^2) + 2 mu2.
// For energies c <= -3/2 its sublevel set inside the cone |mu2| <= mu1
// splits into a bounded and an unbounded component; the bounded one is a
// special concave toric domain.

/// Torus moment map on the oscillator side:
/// ((|u|^2+|v|^2)/2, u1 v2 - u2 v1). The image is the cone |mu2| <= mu1.
MomentPair moment_mu(const OscPoint& osc);

/// First-quadrant moment map (pi |z1|^2, pi |z2|^2).
QPair moment_nu(Vec2 z1, Vec2 z2);

/// Quadrant-to-cone change of frame: mu1 = (nu1+nu2)/(2 pi),
/// mu2 = (nu2-nu1)/(2 pi).
MomentPair rotate_to_mu(const QPair& qp);

/// Inverse frame change nu1 = pi (mu1-mu2), nu2 = pi (mu1+mu2).
/// Throws outside the cone |mu2| <= mu1.
QPair unrotate(const MomentPair& mp);

/// Reduced energy -1/(8 mu1^2) + 2 mu2. Throws for mu1 <= 0.
double ktilde(const MomentPair& mp);

/// Level curve of the reduced energy: the unique mu2 with
/// ktilde(t, mu2) = c, namely c/2 + 1/(16 t^2). Throws for t <= 0.
double boundary_g(double c, double t);

/// Analytic slope of the level curve, -1/(8 t^3).
double boundary_g_slope(double t);

struct Corners {
    double a;    // diagonal corner, positive root of 16 a^3 - 8 c a^2 - 1
    double b;    // antidiagonal corner, smallest positive root of 16 b^3 + 8 c b^2 + 1
    double b_u;  // inner corner of the unbounded component, largest positive root
};

/// Corner values for c <= -3/2; the two antidiagonal roots merge into the
/// double root 1/2 at the critical energy. Throws for c > -3/2, where the
/// antidiagonal cubic has no positive root and no bounded component exists.
Corners corners(double c);

enum class ProfileComponent { Bounded, Unbounded, Connected };

/// Discretized boundary of one component of the sublevel set.
/// For the bounded component: samples of g on [a,b] (Chebyshev-spaced,
/// endpoints included). For the unbounded one: the upper boundary
/// min(t, g(t)) on [b_u, t_max]. For c > -3/2 ("connected"): the upper
/// boundary on [a, t_max].
struct DomainProfile {
    double c = 0.0;
    double a = 0.0;  // left abscissa of the sampled curve
    double b = 0.0;  // right abscissa
    std::vector<std::pair<double, double>> samples;  // (t, boundary value)
    ProfileComponent component = ProfileComponent::Bounded;
};

DomainProfile profile(double c, int n);
DomainProfile unbounded_profile(double c, double t_max, int n);
/// t_max <= 0 selects an automatic right edge past the diagonal crossover.
DomainProfile connected_profile(double c, double t_max, int n);

/// Verdict of the special-concavity verification of a bounded profile.
struct SpecialReport {
    double convexity_min = 0.0;      // least second divided difference of g
    double slope_max = 0.0;          // largest sampled g'
    std::pair<double, double> endpoint_residuals{0.0, 0.0};  // |g(a)-a|, |g(b)+b|
    double f_slope_min = 0.0;        // least slope of the unrotated boundary
    double f_slope_max = 0.0;        // largest slope of the unrotated boundary
    bool pass = false;
};

/// Check a bounded profile for the special concave shape: g convex,
/// g' <= -1 with the endpoint identities g(a) = a and g(b) = -b, and the
/// unrotated boundary slope f' within [-1, 0]. Sampled slopes use the
/// analytic derivative cross-checked against secants.
SpecialReport verify_special(const DomainProfile& profile);

struct TorusPoint {
    MomentPair mp;
    long long slope_num;  // level-curve tangent at the point, -k/l
    long long slope_den;
};

/// Moment-map location of the resonant torus (k,l) at energy c:
/// mu1 = (1/2)(l/k)^(1/3) where the level slope equals -k/l, and mu2
/// pinned by ktilde = c. Requires gcd(k,l) = 1 and c strictly inside the
/// resonance window.
TorusPoint torus_point(long long k, long long l, double c);

}  // namespace rkp
