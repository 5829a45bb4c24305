#include "pqtrig/means.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {
constexpr double kGeometricCutoff = 1e-12;
}

HolderOrder::HolderOrder(double order) : order_(order) {
    if (!std::isfinite(order)) throw DomainError("Hölder order must be finite");
}

double holder_mean(HolderOrder order, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream msg;
        msg << "holder_mean: arguments must be positive and finite (got " << a << ", " << b << ")";
        throw DomainError(msg.str());
    }
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double r = order.value();
    if (std::abs(r) < kGeometricCutoff) return std::clamp(std::sqrt(lo) * std::sqrt(hi), lo, hi);

    // Factor out the argument that dominates: max for r > 0, min for r < 0.
    // The ratio raised to r then stays in (0, 1] and cannot overflow.
    const double anchor = r > 0.0 ? hi : lo;
    const double other = r > 0.0 ? lo : hi;
    const double ratio_pow = std::exp(r * std::log(other / anchor));
    const double scale = std::exp((std::log1p(ratio_pow) - std::numbers::ln2) / r);
    return std::clamp(anchor * scale, lo, hi);
}

}  // namespace pqtrig
