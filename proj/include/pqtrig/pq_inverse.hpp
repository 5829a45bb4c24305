#pragma once

// Inverse functions on the principal branch, found by safeguarded Newton
// iteration on the monotone forward maps.
//
//   sin_{p,q}  : [0, pi_{p,q}/2] -> [0, 1]     inverse of arcsin_{p,q}
//   cos_{p,q}  : [0, pi_{p,q}/2] -> [0, 1]     inverse of arccos_{p,q}
//   sinh_{p,q} : [0, m*_{p,q})   -> [0, inf)   inverse of arcsinh_{p,q}

#include "pqtrig/pq_functions.hpp"

namespace pqtrig {

struct InversionConfig {
    /// Bound on the residual |F(s) - y| of the forward map.
    double tol = 1e-12;
    int max_iters = 100;

    /// Throws DomainError unless tol > 0 and max_iters >= 10.
    void validate() const;
};

/// Returns s in [0, 1] with |arcsin(s) - y| <= tol. Accepts y up to
/// half_pi + 1e-12. Throws DomainError outside that range and
/// ComputationError (carrying the best iterate) if max_iters runs out.
double sin_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg = {});

/// Inverse of arccos_pq, solved directly rather than through any identity
/// linking it to sin_pq.
double cos_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg = {});

/// Returns s >= 0 with |arcsinh(s) - y| <= tol. y must be below m* when
/// m* is finite.
double sinh_pq(const PQEvaluator& ev, double y, const InversionConfig& cfg = {});

inline double sin_pq(const PQParams& pq, double y, const InversionConfig& cfg = {}) {
    return sin_pq(PQEvaluator{pq}, y, cfg);
}
inline double cos_pq(const PQParams& pq, double y, const InversionConfig& cfg = {}) {
    return cos_pq(PQEvaluator{pq}, y, cfg);
}
inline double sinh_pq(const PQParams& pq, double y, const InversionConfig& cfg = {}) {
    return sinh_pq(PQEvaluator{pq}, y, cfg);
}

}  // namespace pqtrig
