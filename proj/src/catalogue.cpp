#include "rkp/catalogue.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rkp/dynamics.hpp"

namespace rkp {

ResonanceData resonance_data(const ResonanceLabel& label) {
    if (label.k < 1 || label.l < 1 || std::gcd(label.k, label.l) != 1)
        throw std::invalid_argument("resonance_data: k, l must be coprime positive integers");
    double k = static_cast<double>(label.k), l = static_cast<double>(label.l);
    ResonanceData out;
    out.c_kl = -0.5 * std::pow(k / l, 2.0 / 3.0);
    out.L_kl = std::cbrt(l / k);
    out.c_minus = -out.L_kl * (k + 2.0 * l) / (2.0 * l);
    out.c_plus = out.L_kl * (2.0 * l - k) / (2.0 * l);
    out.classification = label.k == label.l ? OrbitClass::Critical
                         : label.k > label.l ? OrbitClass::Interior
                                             : OrbitClass::Exterior;
    return out;
}

double period_of_energy(double H) {
    if (H >= 0.0) throw std::domain_error("period_of_energy: energy must be negative");
    return 2.0 * kPi * std::pow(-2.0 * H, -1.5);
}

double p_value(double K, double H) {
    double d = K - H;
    return 1.0 + 2.0 * H * d * d;
}

CubicRoots p_roots(double K) {
    // 2H^3 - 4KH^2 + 2K^2 H + 1 = 0, monic: H^3 - 2K H^2 + K^2 H + 1/2
    return solve_cubic(-2.0 * K, K * K, 0.5);
}

double circular_residual(double H, double L) { return 1.0 + 2.0 * H * L * L; }

std::vector<ResonanceLabel> tori_in_window(double c, int max_sum) {
    if (max_sum < 2) throw std::domain_error("tori_in_window: max_sum must be >= 2");
    std::vector<ResonanceLabel> out;
    for (int sum = 2; sum <= max_sum; ++sum) {
        for (int k = 1; k < sum; ++k) {
            int l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            ResonanceData rd = resonance_data({k, l});
            if (c > rd.c_minus && c < rd.c_plus) out.push_back({k, l});
        }
    }
    return out;
}

SecondKindOrbit second_kind_orbit(const ResonanceLabel& label, double e, int n_samples) {
    if (e < 0.0 || e >= 1.0)
        throw std::domain_error("second_kind_orbit: eccentricity must lie in [0,1)");
    if (n_samples < 2) throw std::domain_error("second_kind_orbit: need samples");
    ResonanceData rd = resonance_data(label);
    KeplerOrbit orbit = kepler_ellipse(rd.c_kl, e);
    double tau = 2.0 * kPi * static_cast<double>(label.l) / static_cast<double>(label.k);

    SecondKindOrbit out;
    for (int i = 0; i < n_samples; ++i) {
        double t = 2.0 * tau * i / (n_samples - 1);
        out.trajectory.times.push_back(t);
        out.trajectory.states.push_back(rotating_state(orbit, t));
    }

    auto phase = std::polar(1.0, 2.0 * kPi * static_cast<double>(label.l) /
                                     static_cast<double>(label.k));
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double t = tau * i / 10.0;
        auto lhs = to_complex(rotating_orbit(orbit, t + tau));
        auto rhs = phase * to_complex(rotating_orbit(orbit, t));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    out.symmetry_residual = worst;
    return out;
}

}  // namespace rkp
