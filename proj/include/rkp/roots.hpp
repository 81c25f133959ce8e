#pragma once

#include <functional>
#include <vector>

namespace rkp {

/// Real roots of a monic cubic t^3 + b t^2 + c t + d, Cardano form with a
/// Newton polish. Roots within the clustering tolerance are merged and
/// reported with their geometric multiplicity, sorted ascending.
struct CubicRoots {
    std::vector<double> roots;  // distinct values, ascending
    std::vector<int> mults;     // matching multiplicities

    std::vector<double> flat() const;  // roots repeated by multiplicity
};

CubicRoots solve_cubic(double b, double c, double d, double cluster_tol = 1e-9);

/// Safeguarded Newton iteration on a bracketing interval [lo, hi] with
/// f(lo) and f(hi) of opposite sign; falls back to bisection whenever the
/// Newton step leaves the bracket. Converges to |f| < tol or a bracket of
/// width tol.
double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi,
                     double tol = 1e-14);

}  // namespace rkp
