#pragma once

// Mechanical checks of the inequalities, limits and monotonicity claims
// surrounding the geometric-mean inequalities
//
//   sin_{p,q}(sqrt(rs))    >= sqrt(sin_{p,q}(r) sin_{p,q}(s))
//   sinh_{p,q}(sqrt(r*s*)) <= sqrt(sinh_{p,q}(r*) sinh_{p,q}(s*))
//
// together with the lemmas and auxiliary functions used to establish them.
//
// Every check returns an InequalityVerdict oriented so that lhs is the side
// expected to be larger: margin = lhs - rhs >= 0 means the claim holds.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqtrig/means.hpp"
#include "pqtrig/pq_functions.hpp"
#include "pqtrig/pq_inverse.hpp"

namespace pqtrig {

/// Where a verdict was evaluated.
struct PointRecord {
    double p = 0.0;
    double q = 0.0;
    std::optional<double> arg1;
    std::optional<double> arg2;
    std::optional<double> order;
    /// Free-form annotation, e.g. which side of x0 a lemma22 point lies on.
    std::string note;
};

struct InequalityVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool satisfied = false;
    PointRecord at;
    /// Set when evaluating the point threw; the verdict then counts as failed.
    std::string error;
};

/// Builds a verdict with margin = lhs - rhs and satisfied = margin >= -tolerance.
InequalityVerdict make_verdict(double lhs, double rhs, double tolerance, PointRecord at);

/// 1e-9 + 1e-9 |rhs|: both sides carry quadrature and inversion error of
/// roughly 1e-10, and several claims allow equality.
double default_tolerance(double rhs);

// --- Lemmas -----------------------------------------------------------------

/// arcsin(x) > p x (1 - x^q)^(1 - 1/p) / ((q - p) x^q + p) on (0, 1).
InequalityVerdict lemma21_margin(const PQEvaluator& ev, double x);

/// x / arcsinh(x) > ((p - q) x^q + p) / (p (1 + x^q)^(1 - 1/p)) on (0, inf).
/// For p < q the note records "below-x0", "at-x0" or "above-x0" with
/// x0 = (p / (q - p))^(1/q), where the right side changes sign.
InequalityVerdict lemma22_margin(const PQEvaluator& ev, double x);

/// The sign-change point x0 of the lemma22 bound, or nullopt when p >= q.
std::optional<double> lemma22_x0(const PQParams& pq);

/// m* > 1. For p >= q the verdict has lhs = +inf and is satisfied.
InequalityVerdict lemma23_check(const PQEvaluator& ev);

// --- Main inequalities and their Hölder-mean generalizations ----------------

/// sin(sqrt(rs)) >= sqrt(sin(r) sin(s)) for r, s in (0, half_pi).
InequalityVerdict thm11_sin_margin(const PQEvaluator& ev, double r, double s,
                                   const InversionConfig& inv = {});

/// sqrt(sinh(r) sinh(s)) >= sinh(sqrt(rs)) for r, s in (0, m*).
InequalityVerdict thm11_sinh_margin(const PQEvaluator& ev, double r, double s,
                                    const InversionConfig& inv = {});

/// sin(sqrt(rs)) >= H_order(sin(r), sin(s)). Holds everywhere iff order <= 0.
InequalityVerdict gm_general_sin_margin(const PQEvaluator& ev, HolderOrder order, double r,
                                        double s, const InversionConfig& inv = {});

/// H_order(sinh(r), sinh(s)) >= sinh(sqrt(rs)). Holds everywhere when order >= 0.
InequalityVerdict gm_general_sinh_margin(const PQEvaluator& ev, HolderOrder order, double r,
                                         double s, const InversionConfig& inv = {});

/// Identity sin(2x) = 2 sin(x) cos(x)^(1/3) / (1 + 4 sin(x)^4 cos(x)^(4/3))^(1/2),
/// claimed for (p, q) = (4/3, 4) and x in (0, half_pi / 2). margin is
/// -|lhs - rhs| against a 1e-8 tolerance.
InequalityVerdict double_angle_margin(const PQEvaluator& ev, double x,
                                      const InversionConfig& inv = {});

// --- Auxiliary functions ----------------------------------------------------

/// G(x) = q x^q / (p (1 - x^q)) - x / (arcsin(x) (1 - x^q)^(1/p)) on (0, 1).
/// Tends to -1 at 0 and +inf at 1; its range is (-1, inf).
double G_fn(const PQEvaluator& ev, double x);

/// G*(x) = x / (arcsinh(x) (1 + x^q)^(1/p)) + q x^q / (p (1 + x^q)) on (0, inf).
/// Tends to 1 at 0 and exceeds 1 everywhere.
double Gstar_fn(const PQEvaluator& ev, double x);

/// F(x) = x^(1 - order) / (arcsin(x) (1 - x^q)^(1/p)) on (0, 1).
double F_fn(const PQEvaluator& ev, HolderOrder order, double x);

/// F*(x) = x^(1 - order) / (arcsinh(x) (1 + x^q)^(1/p)) on (0, inf).
double Fstar_fn(const PQEvaluator& ev, HolderOrder order, double x);

// --- Sweeps -----------------------------------------------------------------

enum class Check {
    Thm11Sin,
    Thm11Sinh,
    Lemma21,
    Lemma22,
    Lemma23,
    GmSin,
    GmSinh,
    DoubleAngle,
    FMonotone,
    FstarMonotone,
};

/// CLI spelling: "thm11-sin", "lemma21", "fstar-monotone", ...
std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);
std::vector<Check> all_checks();

/// Inclusive evenly spaced axis; count == 1 yields lo alone.
struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;

    std::vector<double> values() const;
};

/// What to sweep. Argument axes span the check's natural open domain with a
/// 1% relative inset at each end:
///   thm11-sin, gm-sin       r, s in (0, half_pi)
///   thm11-sinh, gm-sinh     r, s in (0, min(m*, 5))
///   lemma21, f-monotone     x in (0, 1)
///   lemma22, fstar-monotone x in (0, x_max)
///   double-angle            x in (0, half_pi / 2)
///   lemma23                 no argument axis
struct SweepSpec {
    Check check = Check::Thm11Sin;
    Axis p{"p", 2.0, 2.0, 1};
    Axis q{"q", 2.0, 2.0, 1};
    int grid = 10;
    double order = 0.0;
    /// Upper end of the x axis for lemma22 and fstar-monotone; NaN selects
    /// the check's default (10 and 50 respectively).
    double x_max = std::numeric_limits<double>::quiet_NaN();
};

struct SweepOptions {
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    QuadratureConfig quadrature{};
    InversionConfig inversion{};
};

struct SweepReport {
    std::string check;
    std::optional<double> order;
    std::vector<Axis> grid;
    std::vector<InequalityVerdict> verdicts;
    double worst_margin = std::numeric_limits<double>::infinity();
    bool all_satisfied = true;
    std::vector<PointRecord> counterexamples;
};

/// Evaluates the check over the grid. Verdicts appear in row-major grid
/// order (p outermost, then q, then arguments) whatever the thread count.
/// A point that throws becomes a failed verdict with `error` set. Throws
/// DomainError for an empty axis, grid < 2, or parameters out of range.
SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& opts = {});

/// Scans F on grid_n points over (0, 1) and records every consecutive pair
/// as a verdict F(x_{i+1}) >= F(x_i). all_satisfied means F increased on
/// the grid, which is expected iff order <= 0.
SweepReport F_monotonicity_probe(const PQEvaluator& ev, HolderOrder order, int grid_n);

/// As F_monotonicity_probe for F* on (0, x_max), with decreasing as the
/// expectation, which holds iff order >= 0.
SweepReport Fstar_monotonicity_probe(const PQEvaluator& ev, HolderOrder order, int grid_n,
                                     double x_max = 50.0);

// --- Sharpness witnesses ------------------------------------------------------

/// One instance of arcsin(H(x, y)) <= sqrt(arcsin(x) arcsin(y)).
/// margin = rhs - lhs in the verdict convention: lhs here is the geometric
/// mean of the arcsin values.
struct Witness {
    double x = 0.0;
    double y = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct CounterexampleResult {
    std::optional<Witness> violating;
    std::optional<Witness> satisfying;
    std::int64_t evaluations = 0;
};

/// Searches (0, 1)^2 for one point where the Hölder-mean form of the
/// arcsin inequality fails and one where it holds strictly. A budget x
/// budget grid over [0.01, 0.99]^2 is scanned, then three rounds of 10x
/// zoom refine around the extreme cells. Diagonal points and margins
/// within tolerance never count as witnesses. Requires order > 0 and
/// budget >= 100.
CounterexampleResult counterexample_search(const PQEvaluator& ev, HolderOrder order, int budget,
                                           unsigned threads = 0);

}  // namespace pqtrig
