#pragma once

#include <vector>

#include "rkp/roots.hpp"
#include "rkp/types.hpp"

namespace rkp {

/// Coprime resonance pair: k frame revolutions per l orbit revolutions.
struct ResonanceLabel {
    long long k = 1;
    long long l = 1;
};

enum class OrbitClass { Critical, Interior, Exterior };

/// Resonance data of the (k,l) family of second-kind periodic orbits.
struct ResonanceData {
    double c_kl = 0.0;     // orbit energy, -(1/2)(k/l)^(2/3)
    double L_kl = 0.0;     // circular angular momentum, (l/k)^(1/3)
    double c_minus = 0.0;  // lower edge of the existence window
    double c_plus = 0.0;   // upper edge
    OrbitClass classification = OrbitClass::Critical;
};

/// Throws std::invalid_argument for non-coprime input.
ResonanceData resonance_data(const ResonanceLabel& label);

/// Minimum period of an ellipse of energy H < 0: 2 pi (-2H)^(-3/2).
double period_of_energy(double H);

/// Eccentricity polynomial 1 + 2 H (K - H)^2, nonnegative on states of
/// the planar problem and zero exactly on circular orbits.
double p_value(double K, double H);

/// Real roots in H of p(K, .) = 0, ascending with multiplicity; a single
/// entry when only the continuous lowest branch is real.
CubicRoots p_roots(double K);

/// Circular-orbit defect 1 + 2 H L^2.
double circular_residual(double H, double L);

/// All coprime (k,l) with k + l <= max_sum whose window strictly contains
/// c, ordered by (k + l, k).
std::vector<ResonanceLabel> tori_in_window(double c, int max_sum);

struct SecondKindOrbit {
    Trajectory trajectory;      // co-rotating states over two periods
    double symmetry_residual;   // max |eps^R(t+tau) - e^{2 pi i l/k} eps^R(t)|
};

/// Sample the co-rotating second-kind orbit of type (k,l) at energy
/// c_{k,l} with the given eccentricity and report the rotational-symmetry
/// defect over one period tau = 2 pi l / k.
SecondKindOrbit second_kind_orbit(const ResonanceLabel& label, double e,
                                  int n_samples = 256);

}  // namespace rkp
