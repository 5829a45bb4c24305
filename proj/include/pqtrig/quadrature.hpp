#pragma once

// Double-exponential (tanh-sinh) quadrature for integrands with integrable
// algebraic endpoint singularities, plus a rational map for [0, inf).

#include <cstdint>
#include <functional>

namespace pqtrig {

struct QuadratureConfig {
    double target_abs_tol = 1e-12;
    int max_levels = 12;
    std::int64_t max_evals = 1'000'000;

    /// Throws DomainError unless target_abs_tol > 0, max_levels >= 1 and
    /// max_evals >= 100.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/// Plain integrand f(t).
using Integrand = std::function<double(double)>;

/// Integrand receiving the abscissa t together with its exact distance to
/// the upper limit, b - t. Singular integrands such as (1 - t^q)^(-1/p)
/// need that distance to stay accurate once t rounds to b.
using EndpointIntegrand = std::function<double(double t, double to_upper)>;

/// Integrates f over [a, b]. f may carry an integrable singularity at
/// either endpoint; the abscissae never land on a or b. With the plain
/// integrand form, a node that rounds onto an endpoint is nudged inward
/// by one ulp, which limits accuracy for strong singularities. Prefer the
/// EndpointIntegrand overload there.
///
/// Returns converged == false when max_levels or max_evals runs out.
/// Throws DomainError if a >= b and ComputationError if f returns a
/// non-finite value at a node.
QuadratureResult integrate_singular(const Integrand& f, double a, double b,
                                    const QuadratureConfig& cfg = {});
QuadratureResult integrate_singular(const EndpointIntegrand& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

/// Integrates f over [0, inf) through t = u / (1 - u), Jacobian
/// 1 / (1 - u)^2, handing the mapped integrand to integrate_singular.
/// The caller guarantees absolute integrability.
QuadratureResult integrate_improper(const Integrand& f, const QuadratureConfig& cfg = {});

}  // namespace pqtrig
