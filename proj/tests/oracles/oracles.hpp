#pragma once

// Reference routines used only by the tests. They share no code with the
// library: log-gamma comes from a shifted Stirling series, integrals of
// smooth integrands from Romberg extrapolation.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace pqtrig::oracle {

/// log Gamma(x) for x > 0. Shifts x above 15 with the recurrence, then
/// sums the Stirling series through the x^-11 term.
inline double log_gamma(double x) {
    double shift = 0.0;
    while (x < 15.0) {
        shift += std::log(x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv * (1.0 / 12.0 -
               inv2 * (1.0 / 360.0 -
                       inv2 * (1.0 / 1260.0 -
                               inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0 - inv2 * (691.0 / 360360.0))))));
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

inline double beta(double a, double b) {
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

/// int_0^1 (1 - t^q)^(-1/p) dt = B(1/q, 1 - 1/p) / q.
inline double half_pi_beta(double p, double q) { return beta(1.0 / q, 1.0 - 1.0 / p) / q; }

/// int_0^inf (1 + t^q)^(-1/p) dt = B(1/q, 1/p - 1/q) / q, valid for p < q.
inline double m_star_beta(double p, double q) { return beta(1.0 / q, 1.0 / p - 1.0 / q) / q; }

/// Romberg integration of a smooth f over [a, b].
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int max_rows = 22, double tol = 1e-15) {
    std::vector<double> prev(1, 0.5 * (b - a) * (f(a) + f(b)));
    for (int row = 1; row < max_rows; ++row) {
        const long n = 1L << (row - 1);
        const double h = (b - a) / static_cast<double>(2 * n);
        double mid = 0.0;
        for (long i = 0; i < n; ++i) mid += f(a + h * static_cast<double>(2 * i + 1));
        std::vector<double> cur(static_cast<std::size_t>(row + 1));
        cur[0] = 0.5 * prev[0] + h * mid;
        double factor = 1.0;
        for (int k = 1; k <= row; ++k) {
            factor *= 4.0;
            cur[static_cast<std::size_t>(k)] =
                cur[static_cast<std::size_t>(k - 1)] +
                (cur[static_cast<std::size_t>(k - 1)] - prev[static_cast<std::size_t>(k - 1)]) /
                    (factor - 1.0);
        }
        if (row > 4 && std::abs(cur.back() - prev.back()) <= tol * std::abs(cur.back()))
            return cur.back();
        prev = std::move(cur);
    }
    return prev.back();
}

}  // namespace pqtrig::oracle
