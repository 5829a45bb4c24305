#include "pqtrig/pq_functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

[[noreturn]] void throw_unconverged(const char* what, const QuadratureResult& r) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge after " << r.evaluations
        << " evaluations (error estimate " << r.error_estimate << ")";
    throw ComputationError(msg.str(), r.value, r.error_estimate);
}

double value_or_throw(const char* what, const QuadratureResult& r) {
    if (!r.converged) throw_unconverged(what, r);
    return r.value;
}

// Absolute tolerance shrinks with short intervals so small arguments keep
// relative accuracy.
QuadratureConfig scaled(const QuadratureConfig& cfg, double length) {
    QuadratureConfig out = cfg;
    out.target_abs_tol = cfg.target_abs_tol * std::min(1.0, length);
    return out;
}

// (1 - (1 - d)^q)^(-1/p), accurate for small d = 1 - t.
double gap_integrand(double p, double q, double d) {
    const double base = d < 0.5 ? -std::expm1(q * std::log1p(-d)) : 1.0 - std::pow(1.0 - d, q);
    return std::exp(-std::log(base) / p);
}

// arcsin on [0, x] for x <= 1/2, integrating in t.
double arcsin_small(const PQParams& pq, double x, const QuadratureConfig& cfg) {
    const auto r = integrate_singular(
        Integrand{[&pq](double t) { return arcsin_integrand(pq, t); }}, 0.0, x, scaled(cfg, x));
    return value_or_throw("arcsin_pq", r);
}

// arcsin(1 - gap) for gap < 1/2, integrating d = 1 - t over [gap, 1]. The
// singularity sits at d = 0, which is exactly representable.
double arcsin_near_one(const PQParams& pq, double gap, const QuadratureConfig& cfg) {
    const double p = pq.p();
    const double q = pq.q();
    const auto r = integrate_singular(
        Integrand{[p, q](double d) { return gap_integrand(p, q, d); }}, gap, 1.0, cfg);
    return value_or_throw("arcsin_pq", r);
}

void require_unit_interval(const char* fn, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << fn << ": argument " << x << " outside [0, 1]";
        throw DomainError(msg.str());
    }
}

}  // namespace

PQParams::PQParams(double p, double q) : p_(p), q_(q) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "p must exceed 1 (got " << p << ")";
        throw DomainError(msg.str());
    }
    if (!(q > 1.0) || !std::isfinite(q)) {
        std::ostringstream msg;
        msg << "q must exceed 1 (got " << q << ")";
        throw DomainError(msg.str());
    }
}

ExtendedValue ExtendedValue::finite(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("finite extended value must be >= 0");
    ExtendedValue e;
    e.finite_ = true;
    e.value_ = v;
    return e;
}

double ExtendedValue::value() const {
    if (!finite_) throw std::logic_error("ExtendedValue::value() on +infinity");
    return value_;
}

double arcsin_integrand(const PQParams& pq, double t) {
    if (t > 0.5) return gap_integrand(pq.p(), pq.q(), 1.0 - t);
    return std::exp(-std::log1p(-std::pow(t, pq.q())) / pq.p());
}

double arcsinh_integrand(const PQParams& pq, double t) {
    const double p = pq.p();
    const double q = pq.q();
    if (t <= 1.0) return std::exp(-std::log1p(std::pow(t, q)) / p);
    // log(1 + t^q) without overflowing t^q
    return std::exp(-(q * std::log(t) + std::log1p(std::pow(t, -q))) / p);
}

double arcsin_pq(const PQParams& pq, double x, const QuadratureConfig& cfg) {
    require_unit_interval("arcsin_pq", x);
    if (x == 0.0) return 0.0;
    if (x <= 0.5) return arcsin_small(pq, x, cfg);
    return arcsin_near_one(pq, 1.0 - x, cfg);  // exact for x >= 1/2
}

double arcsin_pq_from_gap(const PQParams& pq, double gap, const QuadratureConfig& cfg) {
    if (!(gap >= 0.0 && gap <= 1.0)) {
        std::ostringstream msg;
        msg << "arcsin_pq_from_gap: gap " << gap << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    if (gap == 1.0) return 0.0;
    if (gap < 0.5) return arcsin_near_one(pq, gap, cfg);
    return arcsin_small(pq, 1.0 - gap, cfg);
}

double half_pi_pq(const PQParams& pq, const QuadratureConfig& cfg) {
    return arcsin_near_one(pq, 0.0, cfg);
}

double arccos_pq(const PQParams& pq, double x, const QuadratureConfig& cfg) {
    require_unit_interval("arccos_pq", x);
    if (x == 1.0) return 0.0;
    if (x == 0.0) return half_pi_pq(pq, cfg);
    // w = (1 - x^p)^(1/q); hand arcsin the gap 1 - w without rounding w first.
    const double log_xp = pq.p() * std::log(x);
    const double log_w = (log_xp < -0.7 ? std::log1p(-std::exp(log_xp))
                                        : std::log(-std::expm1(log_xp))) /
                         pq.q();
    return arcsin_pq_from_gap(pq, -std::expm1(log_w), cfg);
}

double arcsinh_pq(const PQParams& pq, double x, const QuadratureConfig& cfg) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "arcsinh_pq: argument " << x << " must be finite and >= 0";
        throw DomainError(msg.str());
    }
    if (x == 0.0) return 0.0;
    const Integrand h = [&pq](double t) { return arcsinh_integrand(pq, t); };
    const double head_end = std::min(x, 1.0);
    const double head =
        value_or_throw("arcsinh_pq", integrate_singular(h, 0.0, head_end, scaled(cfg, head_end)));
    if (x <= 1.0) return head;

    // Beyond 1 substitute t = e^v; the integrand decays gently in v.
    const double p = pq.p();
    const double q = pq.q();
    const Integrand tail = [p, q](double v) {
        return std::exp(v - (q * v + std::log1p(std::exp(-q * v))) / p);
    };
    return head + value_or_throw("arcsinh_pq", integrate_singular(tail, 0.0, std::log(x), cfg));
}

ExtendedValue m_star_pq(const PQParams& pq, const QuadratureConfig& cfg) {
    if (pq.p() >= pq.q()) return ExtendedValue::infinity();
    const auto r = integrate_improper([&pq](double t) { return arcsinh_integrand(pq, t); }, cfg);
    return ExtendedValue::finite(value_or_throw("m_star_pq", r));
}

double arcsin_series_oracle(const PQParams& pq, double x, int n_terms) {
    if (!(x >= 0.0 && x < 1.0)) {
        std::ostringstream msg;
        msg << "arcsin_series_oracle: argument " << x << " outside [0, 1)";
        throw DomainError(msg.str());
    }
    if (n_terms < 1) throw DomainError("arcsin_series_oracle: n_terms must be at least 1");
    if (x == 0.0) return 0.0;

    const double a = 1.0 / pq.p();
    const double q = pq.q();
    const double log_x = std::log(x);
    double coef = 1.0;  // (1/p)_n / n!
    double sum = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        const double power = q * n + 1.0;
        const double term = coef * std::exp(power * log_x) / power;
        sum += term;
        if (term < 1e-17 * sum) break;
        coef *= (a + n) / (n + 1.0);
    }
    return sum;
}

PQEvaluator::PQEvaluator(const PQParams& pq, const QuadratureConfig& cfg)
    : pq_(pq), cfg_(cfg), half_pi_(half_pi_pq(pq, cfg)), m_star_(m_star_pq(pq, cfg)) {}

}  // namespace pqtrig
