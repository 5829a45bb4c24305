#include "pqtrig/pq_inverse.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

constexpr double kTopPad = 1e-12;
// Below this distance from the singular end Newton's slope is unusable.
constexpr double kSingularGap = 1e-8;

// Root of an increasing residual g on [lo, hi], given g(lo) <= 0 <= g(hi).
struct MonotoneProblem {
    std::function<double(double)> residual;
    std::function<double(double)> slope;
    std::function<bool(double)> bisect_only;
    bool geometric_midpoint = false;
};

struct Sample {
    double s;
    double g;
};

double solve(const char* fn, const MonotoneProblem& prob, Sample lo, Sample hi,
             const InversionConfig& cfg) {
    auto better = [](const Sample& a, const Sample& b) {
        return std::abs(a.g) <= std::abs(b.g) ? a : b;
    };
    auto midpoint = [&](double a, double b) {
        if (prob.geometric_midpoint && a > 0.0 && b > 4.0 * a) return std::sqrt(a) * std::sqrt(b);
        return 0.5 * (a + b);
    };
    auto inside = [&](double s) { return s > lo.s && s < hi.s; };
    auto newton = [&](const Sample& x) {
        return prob.bisect_only(x.s) ? std::nan("") : x.s - x.g / prob.slope(x.s);
    };

    // Regula falsi start inside the bracket.
    double s = lo.s + (hi.s - lo.s) * (-lo.g / (hi.g - lo.g));
    if (!inside(s)) s = midpoint(lo.s, hi.s);
    Sample best = better(lo, hi);

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        const Sample cur{s, prob.residual(s)};
        best = better(best, cur);
        if (cur.g <= 0.0) lo = cur;
        if (cur.g >= 0.0) hi = cur;

        if (std::abs(cur.g) <= cfg.tol) {
            // Newton converges quadratically, so one or two more steps pin
            // down s where the forward map is flat and a small residual
            // still leaves slack in s.
            Sample polished = cur;
            for (int k = 0; k < 2 && polished.g != 0.0; ++k) {
                const double next = newton(polished);
                if (!inside(next) || next == polished.s) break;
                const Sample cand{next, prob.residual(next)};
                if (std::abs(cand.g) > std::abs(polished.g)) break;
                polished = cand;
            }
            return polished.s;
        }
        if (std::nextafter(lo.s, hi.s) >= hi.s) return best.s;  // bracket exhausted

        s = newton(cur);
        if (!inside(s)) s = midpoint(lo.s, hi.s);
    }

    std::ostringstream msg;
    msg << fn << ": no convergence in " << cfg.max_iters << " iterations, bracket [" << lo.s
        << ", " << hi.s << "]";
    throw ComputationError(msg.str(), best.s, hi.s - lo.s);
}

void require_trig_range(const char* fn, const PQEvaluator& ev, double y) {
    if (!(y >= 0.0 && y <= ev.half_pi() + kTopPad)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << fn << ": argument " << y << " outside [0, half_pi] = [0, " << ev.half_pi() << "]";
        throw DomainError(msg.str());
    }
}

}  // namespace

void InversionConfig::validate() const {
    if (!(tol > 0.0)) throw DomainError("inversion tolerance must be positive");
    if (max_iters < 10) throw DomainError("inversion max_iters must be at least 10");
}

double sin_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg) {
    cfg.validate();
    require_trig_range("sin_pq", ev, y);
    if (y == 0.0) return 0.0;
    if (y >= ev.half_pi()) return 1.0;

    const PQParams& pq = ev.params();
    MonotoneProblem prob{
        [&](double s) { return ev.arcsin(s) - y; },
        [&](double s) { return arcsin_integrand(pq, s); },
        [&](double s) { return -std::expm1(pq.q() * std::log(s)) < kSingularGap; },
    };
    return solve("sin_pq", prob, {0.0, -y}, {1.0, ev.half_pi() - y}, cfg);
}

double cos_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg) {
    cfg.validate();
    require_trig_range("cos_pq", ev, y);
    if (y == 0.0) return 1.0;
    if (y >= ev.half_pi()) return 0.0;

    const PQParams& pq = ev.params();
    const double p = pq.p();
    const double q = pq.q();
    // g(v) = y - arccos(v) increases in v; slope (p/q) v^(p-2) (1-v^p)^(1/q-1).
    MonotoneProblem prob{
        [&](double v) { return y - ev.arccos(v); },
        [p, q](double v) {
            const double one_minus_vp = -std::expm1(p * std::log(v));
            return (p / q) * std::pow(v, p - 2.0) * std::pow(one_minus_vp, 1.0 / q - 1.0);
        },
        [p](double v) { return -std::expm1(p * std::log(v)) < kSingularGap; },
    };
    return solve("cos_pq", prob, {0.0, y - ev.half_pi()}, {1.0, y}, cfg);
}

double sinh_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg) {
    cfg.validate();
    const ExtendedValue& m = ev.m_star();
    if (!(y >= 0.0) || !std::isfinite(y) || (m.is_finite() && y >= m.value())) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "sinh_pq: argument " << y << " outside [0, m*) = [0, ";
        if (m.is_finite()) {
            msg << m.value() << ")";
        } else {
            msg << "inf)";
        }
        throw DomainError(msg.str());
    }
    if (y == 0.0) return 0.0;

    Sample lo{0.0, -y};
    Sample hi{1.0, ev.arcsinh(1.0) - y};
    while (hi.g <= 0.0) {
        lo = hi;
        const double u = 2.0 * hi.s;
        if (!std::isfinite(u) || u > 1e300) {
            throw ComputationError("sinh_pq: could not bracket the root", lo.s,
                                   std::numeric_limits<double>::infinity());
        }
        hi = {u, ev.arcsinh(u) - y};
    }
    if (hi.g == 0.0) return hi.s;
    if (lo.g == 0.0) return lo.s;

    const PQParams& pq = ev.params();
    MonotoneProblem prob{
        [&](double s) { return ev.arcsinh(s) - y; },
        [&](double s) { return arcsinh_integrand(pq, s); },
        [](double) { return false; },
        true,
    };
    return solve("sinh_pq", prob, lo, hi, cfg);
}

}  // namespace pqtrig
