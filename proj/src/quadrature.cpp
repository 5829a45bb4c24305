#include "pqtrig/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

// Abscissa window on the tanh-sinh axis. At tau = 6 the complement
// 1 - tanh(pi/2 sinh tau) is ~1e-275, which keeps endpoint distances
// representable for any interval wider than ~1e-30.
constexpr double kTauMax = 6.0;
constexpr int kMinLevels = 3;
constexpr int kTabulatedLevels = 12;

struct Node {
    double complement;  // 1 - x on the reference interval [-1, 1]
    double weight;
};

Node make_node(double tau) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double u = half_pi * std::sinh(tau);
    const double e = std::exp(u);
    const double cosh_u = 0.5 * (e + 1.0 / e);
    return {2.0 / (e * e + 1.0), half_pi * std::cosh(tau) / (cosh_u * cosh_u)};
}

// Nodes first introduced at `level`: tau = j for level 0, odd multiples of
// 2^-level otherwise. Only tau >= 0; the mirror image is implied.
std::vector<Node> build_level(int level) {
    std::vector<Node> nodes;
    if (level == 0) {
        for (int j = 0; j <= static_cast<int>(kTauMax); ++j) nodes.push_back(make_node(j));
        return nodes;
    }
    const double step = std::ldexp(1.0, -level);
    for (std::int64_t j = 1;; j += 2) {
        const double tau = static_cast<double>(j) * step;
        if (tau > kTauMax) break;
        nodes.push_back(make_node(tau));
    }
    return nodes;
}

const std::vector<Node>& tabulated_level(int level) {
    static const std::vector<std::vector<Node>> table = [] {
        std::vector<std::vector<Node>> t;
        for (int k = 0; k <= kTabulatedLevels; ++k) t.push_back(build_level(k));
        return t;
    }();
    return table[static_cast<std::size_t>(level)];
}

std::int64_t evals_at_level(int level) {
    if (level == 0) return 2 * static_cast<std::int64_t>(kTauMax) + 1;
    // Odd multiples of 2^-level up to kTauMax on each side.
    const auto per_side = static_cast<std::int64_t>(std::ldexp(kTauMax, level) + 1) / 2;
    return 2 * per_side;
}

double checked(double v, double t) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrand returned " << v << " at t = " << t;
        throw ComputationError(msg.str(), std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::infinity());
    }
    return v;
}

// Shared driver. `eval(comp, upper)` returns the integrand at the node whose
// scaled distance to the nearer endpoint is half_width * comp, on the upper
// (near b) or lower (near a) side.
template <class Eval>
QuadratureResult tanh_sinh(Eval&& eval, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) {
        std::ostringstream msg;
        msg << "integration interval must satisfy a < b, got [" << a << ", " << b << "]";
        throw DomainError(msg.str());
    }
    const double half_width = 0.5 * (b - a);

    QuadratureResult result;
    double sum = 0.0;  // running weighted sum, scaled by step at the end
    double previous = 0.0;

    for (int level = 0; level <= cfg.max_levels; ++level) {
        if (result.evaluations + evals_at_level(level) > cfg.max_evals) break;

        std::vector<Node> scratch;
        const std::vector<Node>* nodes = nullptr;
        if (level <= kTabulatedLevels) {
            nodes = &tabulated_level(level);
        } else {
            scratch = build_level(level);
            nodes = &scratch;
        }

        double level_sum = 0.0;
        for (const Node& n : *nodes) {
            if (n.complement == 1.0) {  // tau == 0, the midpoint
                level_sum += n.weight * eval(1.0, true);
                ++result.evaluations;
                continue;
            }
            level_sum += n.weight * (eval(n.complement, true) + eval(n.complement, false));
            result.evaluations += 2;
        }

        const double step = std::ldexp(1.0, -level);
        sum += level_sum;
        const double estimate = sum * step * half_width;
        if (level > 0) {
            result.error_estimate = std::abs(estimate - previous);
            result.value = estimate;
            if (level >= kMinLevels && result.error_estimate <= cfg.target_abs_tol) {
                result.converged = true;
                return result;
            }
        } else {
            result.value = estimate;
            result.error_estimate = std::numeric_limits<double>::infinity();
        }
        previous = estimate;
    }
    return result;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(target_abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    if (max_levels < 1) throw DomainError("quadrature max_levels must be at least 1");
    if (max_evals < 100) throw DomainError("quadrature max_evals must be at least 100");
}

QuadratureResult integrate_singular(const Integrand& f, double a, double b,
                                    const QuadratureConfig& cfg) {
    const double half_width = 0.5 * (b - a);
    // One ulp of the interval width.
    const double nudge = std::nextafter(b - a, std::numeric_limits<double>::infinity()) - (b - a);
    auto eval = [&](double comp, bool upper) {
        const double d = half_width * comp;
        double t = upper ? b - d : a + d;
        if (t >= b) {
            t = b - nudge;
            if (t >= b) t = std::nextafter(b, a);
        } else if (t <= a) {
            t = a + nudge;
            if (t <= a) t = std::nextafter(a, b);
        }
        return checked(f(t), t);
    };
    return tanh_sinh(eval, a, b, cfg);
}

QuadratureResult integrate_singular(const EndpointIntegrand& f, double a, double b,
                                    const QuadratureConfig& cfg) {
    const double half_width = 0.5 * (b - a);
    auto eval = [&](double comp, bool upper) {
        const double d = half_width * comp;
        if (d <= 0.0) return 0.0;  // distance underflowed; weight is negligible
        if (upper) {
            const double t = b - d;
            return checked(f(t, d), t);
        }
        const double t = a + d;
        return checked(f(t, 2.0 * half_width - d), t);
    };
    return tanh_sinh(eval, a, b, cfg);
}

QuadratureResult integrate_improper(const Integrand& f, const QuadratureConfig& cfg) {
    // u in [0, 1) maps to t = u / (1 - u); 1 - u arrives exactly as to_upper.
    EndpointIntegrand mapped = [&f](double u, double one_minus_u) {
        const double t = u / one_minus_u;
        const double ft = f(t);
        if (ft == 0.0) return 0.0;
        return (ft / one_minus_u) / one_minus_u;
    };
    return integrate_singular(mapped, 0.0, 1.0, cfg);
}

}  // namespace pqtrig
