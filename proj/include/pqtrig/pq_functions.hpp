#pragma once

// Forward generalized (p,q)-trigonometric and hyperbolic functions:
//
//   arcsin_{p,q}(x)  = int_0^x (1 - t^q)^(-1/p) dt,   x in [0, 1]
//   arccos_{p,q}(x)  = arcsin_{p,q}((1 - x^p)^(1/q))
//   arcsinh_{p,q}(x) = int_0^x (1 + t^q)^(-1/p) dt,   x >= 0
//   pi_{p,q} / 2     = arcsin_{p,q}(1)
//   m*_{p,q}         = int_0^inf (1 + t^q)^(-1/p) dt  (infinite iff p >= q)
//
// All functions reduce to the classical ones at p = q = 2.

#include <limits>

#include "pqtrig/quadrature.hpp"

namespace pqtrig {

/// The exponent pair (p, q); both strictly greater than one.
class PQParams {
public:
    /// Throws DomainError unless p > 1 and q > 1.
    PQParams(double p, double q);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    friend bool operator==(const PQParams&, const PQParams&) = default;

private:
    double p_;
    double q_;
};

/// A nonnegative real or +infinity.
class ExtendedValue {
public:
    static ExtendedValue finite(double v);
    static ExtendedValue infinity() noexcept { return ExtendedValue{}; }

    bool is_finite() const noexcept { return finite_; }
    /// Throws std::logic_error when infinite.
    double value() const;
    /// The value as a double, +inf when infinite.
    double as_double() const noexcept {
        return finite_ ? value_ : std::numeric_limits<double>::infinity();
    }

    friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

private:
    ExtendedValue() = default;
    bool finite_ = false;
    double value_ = 0.0;
};

// Defining integrands, which are also the derivatives of arcsin and arcsinh.
double arcsin_integrand(const PQParams& pq, double t);
double arcsinh_integrand(const PQParams& pq, double t);

double arcsin_pq(const PQParams& pq, double x, const QuadratureConfig& cfg = {});

/// arcsin_{p,q}(1 - gap) for an exactly known gap in [0, 1]. Keeps full
/// relative accuracy in the distance to the singular endpoint, which a
/// rounded x cannot.
double arcsin_pq_from_gap(const PQParams& pq, double gap, const QuadratureConfig& cfg = {});

double half_pi_pq(const PQParams& pq, const QuadratureConfig& cfg = {});
double arccos_pq(const PQParams& pq, double x, const QuadratureConfig& cfg = {});
double arcsinh_pq(const PQParams& pq, double x, const QuadratureConfig& cfg = {});

/// +infinity exactly when p >= q, decided on the parameters alone.
ExtendedValue m_star_pq(const PQParams& pq, const QuadratureConfig& cfg = {});

/// Partial sum of the termwise-integrated binomial series
///   sum_n ((1/p)_n / n!) x^(qn+1) / (qn+1),
/// stopping early once a term drops below 1e-17 of the running sum.
/// Independent of the quadrature path; x must lie in [0, 1).
double arcsin_series_oracle(const PQParams& pq, double x, int n_terms);

/// Holds one (p, q) pair with its constants computed once at construction.
/// Immutable afterwards, so a single instance may be shared across threads.
class PQEvaluator {
public:
    explicit PQEvaluator(const PQParams& pq, const QuadratureConfig& cfg = {});

    const PQParams& params() const noexcept { return pq_; }
    const QuadratureConfig& quadrature() const noexcept { return cfg_; }

    double half_pi() const noexcept { return half_pi_; }
    const ExtendedValue& m_star() const noexcept { return m_star_; }

    double arcsin(double x) const { return arcsin_pq(pq_, x, cfg_); }
    double arcsin_from_gap(double gap) const { return arcsin_pq_from_gap(pq_, gap, cfg_); }
    double arccos(double x) const { return arccos_pq(pq_, x, cfg_); }
    double arcsinh(double x) const { return arcsinh_pq(pq_, x, cfg_); }

private:
    PQParams pq_;
    QuadratureConfig cfg_;
    double half_pi_;
    ExtendedValue m_star_;
};

}  // namespace pqtrig
