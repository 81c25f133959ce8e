#include "rkp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rkp/types.hpp"

namespace rkp {

std::vector<double> CubicRoots::flat() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
        out.insert(out.end(), static_cast<std::size_t>(mults[i]), roots[i]);
    return out;
}

namespace {

double polish(double b, double c, double d, double x) {
    for (int it = 0; it < 4; ++it) {
        double f = ((x + b) * x + c) * x + d;
        double fp = (3.0 * x + 2.0 * b) * x + c;
        if (fp == 0.0) break;
        double step = f / fp;
        if (!std::isfinite(step) || std::fabs(step) > 1.0) break;
        x -= step;
    }
    return x;
}

}  // namespace

CubicRoots solve_cubic(double b, double c, double d, double cluster_tol) {
    // depressed form: x = t - b/3, t^3 + P t + Q
    double P = c - b * b / 3.0;
    double Q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0;
    double shift = -b / 3.0;

    double half_q = 0.5 * Q;
    double third_p = P / 3.0;
    double disc = half_q * half_q + third_p * third_p * third_p;
    double scale = std::max({1.0, std::fabs(P), std::fabs(Q)});
    double disc_tol = 1e-9 * scale * scale;

    std::vector<double> raw;
    if (disc > disc_tol) {
        double s = std::sqrt(disc);
        double t = std::cbrt(-half_q + s) + std::cbrt(-half_q - s);
        raw = {t + shift};
    } else if (disc < -disc_tol) {
        // three distinct real roots, trigonometric form
        double m = 2.0 * std::sqrt(-third_p);
        double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
        double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            raw.push_back(m * std::cos(theta - 2.0 * kPi * k / 3.0) + shift);
    } else {
        // a repeated root
        if (std::fabs(P) < 1e-12 * scale) {
            raw = {shift, shift, shift};
        } else {
            double single = 3.0 * Q / P;
            double twice = -1.5 * Q / P;
            raw = {single + shift, twice + shift, twice + shift};
        }
    }

    for (double& r : raw) r = polish(b, c, d, r);
    std::sort(raw.begin(), raw.end());

    CubicRoots out;
    double span = std::max(1.0, std::fabs(raw.back() - raw.front()));
    for (double r : raw) {
        if (!out.roots.empty() && std::fabs(r - out.roots.back()) <= cluster_tol * span)
            ++out.mults.back();
        else {
            out.roots.push_back(r);
            out.mults.push_back(1);
        }
    }
    return out;
}

double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi,
                     double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("newton_bisect: endpoints do not bracket a root");
    bool increasing = fhi > 0.0;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double val = f(x);
        if (std::fabs(val) < tol) return x;
        if ((val > 0.0) == increasing) hi = x; else lo = x;
        double deriv = df(x);
        double next = deriv != 0.0 ? x - val / deriv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo < tol) return 0.5 * (lo + hi);
        x = next;
    }
    return x;
}

}  // namespace rkp
