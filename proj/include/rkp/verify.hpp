#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rkp/types.hpp"

namespace rkp::verify {

struct CheckResult {
    std::string name;
    long long n_samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Override entries are (name prefix, tolerance) pairs; the first matching
/// prefix wins.
using TolOverrides = std::vector<std::pair<std::string, double>>;

std::vector<std::string> check_names();

/// Run one named check. The working seed is derived from the master seed
/// and the check name, so results do not depend on execution order.
CheckResult run_check(const std::string& name, std::uint64_t seed,
                      const TolOverrides& overrides = {});

/// Run every check whose name contains `only` (all when empty).
std::vector<CheckResult> run_all(std::uint64_t seed, const TolOverrides& overrides = {},
                                 const std::string& only = "");

/// Header `check,n_samples,max_residual,tolerance,pass`.
void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& results);

/// Deterministic samplers shared by the checks and the acceptance suite.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    /// Negative-energy point in a tame window: H in [-0.85, -0.12],
    /// |q| in [0.5, 1.6], |L| >= 0.05.
    PhasePoint negative_energy_point();
    /// Negative-energy point rescaled along the Kepler similarity to H = -1/2.
    PhasePoint fixed_energy_point();
    /// Unconstrained-energy point with q away from the origin.
    PhasePoint generic_point();
    /// Oscillator point with |v| and |u|^2+|v|^2 bounded away from zero.
    OscPoint osc_point();
    Vec2 plane_vec(double box);

  private:
    std::mt19937_64 rng_;
};

}  // namespace rkp::verify
