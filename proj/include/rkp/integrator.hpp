#pragma once

#include <array>
#include <cstddef>

namespace rkp {

/** Fixed-step explicit Runge-Kutta scheme of order 8 (Cooper-Verner,
 * 11 stages). The tableau is exact in terms of sqrt(21); an order
 * check lives in the test suite.
 *
 * \param f     right-hand side, state -> derivative
 * \param y     current state
 * \param h     step size
 * \return      state advanced by h */
template <std::size_t N, typename F>
std::array<double, N> rk8_step(const F& f, const std::array<double, N>& y, double h) {
    static const double s = 4.58257569495584000680;  // sqrt(21)
    static const double a[11][10] = {
        {},
        {1.0 / 2},
        {1.0 / 4, 1.0 / 4},
        {1.0 / 7, (-7 - 3 * s) / 98, (21 + 5 * s) / 49},
        {(11 + s) / 84, 0, (18 + 4 * s) / 63, (21 - s) / 252},
        {(5 + s) / 48, 0, (9 + s) / 36, (-231 + 14 * s) / 360, (63 - 7 * s) / 80},
        {(10 - s) / 42, 0, (-432 + 92 * s) / 315, (633 - 145 * s) / 90,
         (-504 + 115 * s) / 70, (63 - 13 * s) / 35},
        {1.0 / 14, 0, 0, 0, (14 - 3 * s) / 126, (13 - 3 * s) / 63, 1.0 / 9},
        {1.0 / 32, 0, 0, 0, (91 - 21 * s) / 576, 11.0 / 72, (-385 - 75 * s) / 1152,
         (63 + 13 * s) / 128},
        {1.0 / 14, 0, 0, 0, 1.0 / 9, (-733 - 147 * s) / 2205, (515 + 111 * s) / 504,
         (-51 - 11 * s) / 56, (132 + 28 * s) / 245},
        {0, 0, 0, 0, (-42 + 7 * s) / 18, (-18 + 28 * s) / 45, (-273 - 53 * s) / 72,
         (301 + 53 * s) / 72, (28 - 28 * s) / 45, (49 - 7 * s) / 18},
    };
    static const double b[11] = {1.0 / 20, 0, 0, 0, 0, 0, 0,
                                 49.0 / 180, 16.0 / 45, 49.0 / 180, 1.0 / 20};

    std::array<std::array<double, N>, 11> k;
    k[0] = f(y);
    for (int i = 1; i < 11; ++i) {
        std::array<double, N> yi = y;
        for (int j = 0; j < i; ++j) {
            if (a[i][j] == 0.0) continue;
            for (std::size_t n = 0; n < N; ++n) yi[n] += h * a[i][j] * k[j][n];
        }
        k[i] = f(yi);
    }
    std::array<double, N> out = y;
    for (int i = 0; i < 11; ++i) {
        if (b[i] == 0.0) continue;
        for (std::size_t n = 0; n < N; ++n) out[n] += h * b[i] * k[i][n];
    }
    return out;
}

}  // namespace rkp
