#include "pqtrig/inequality_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "parallel.hpp"
#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

constexpr double kInset = 0.01;  // relative inset of open-interval grids
constexpr double kHyperbolicCap = 5.0;
constexpr double kIdentityTolerance = 1e-8;
constexpr double kDefaultLemma22XMax = 10.0;
constexpr double kDefaultFstarXMax = 50.0;

constexpr std::array<std::pair<Check, std::string_view>, 10> kCheckNames{{
    {Check::Thm11Sin, "thm11-sin"},
    {Check::Thm11Sinh, "thm11-sinh"},
    {Check::Lemma21, "lemma21"},
    {Check::Lemma22, "lemma22"},
    {Check::Lemma23, "lemma23"},
    {Check::GmSin, "gm-sin"},
    {Check::GmSinh, "gm-sinh"},
    {Check::DoubleAngle, "double-angle"},
    {Check::FMonotone, "f-monotone"},
    {Check::FstarMonotone, "fstar-monotone"},
}};

PointRecord point(const PQParams& pq, std::optional<double> a1 = {}, std::optional<double> a2 = {},
                  std::optional<double> order = {}) {
    return {pq.p(), pq.q(), a1, a2, order, {}};
}

[[noreturn]] void domain_fail(const char* fn, const std::string& detail) {
    throw DomainError(std::string(fn) + ": " + detail);
}

void require_open_unit(const char* fn, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        std::ostringstream msg;
        msg << "argument " << x << " outside (0, 1)";
        domain_fail(fn, msg.str());
    }
}

void require_positive(const char* fn, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "argument " << x << " must be positive and finite";
        domain_fail(fn, msg.str());
    }
}

void require_trig_box(const char* fn, const PQEvaluator& ev, double r, double s) {
    for (double v : {r, s}) {
        if (!(v > 0.0 && v < ev.half_pi())) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "argument " << v << " outside (0, half_pi) = (0, " << ev.half_pi() << ")";
            domain_fail(fn, msg.str());
        }
    }
}

void require_hyperbolic_box(const char* fn, const PQEvaluator& ev, double r, double s) {
    const double top = ev.m_star().as_double();
    for (double v : {r, s}) {
        if (!(v > 0.0 && v < top)) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "argument " << v << " outside (0, m*) = (0, " << top << ")";
            domain_fail(fn, msg.str());
        }
    }
}

// 1 - x^q, accurate near x = 1.
double one_minus_pow(double x, double q) {
    return x > 0.5 ? -std::expm1(q * std::log(x)) : 1.0 - std::pow(x, q);
}

// log(1 + x^q) without overflow for large x.
double log1p_pow(double x, double q) {
    if (x <= 1.0) return std::log1p(std::pow(x, q));
    return q * std::log(x) + std::log1p(std::pow(x, -q));
}

// Verdicts shared by the single-point operations and the cached sweeps:
// the inverse values at r and s are supplied by the caller.
InequalityVerdict sin_mean_verdict(const PQEvaluator& ev, std::optional<HolderOrder> order,
                                   double r, double s, double sin_r, double sin_s,
                                   const InversionConfig& inv) {
    const double lhs = sin_pq(ev, std::sqrt(r) * std::sqrt(s), inv);
    const double rhs = holder_mean(order.value_or(HolderOrder{0.0}), sin_r, sin_s);
    auto at = point(ev.params(), r, s);
    if (order) at.order = order->value();
    return make_verdict(lhs, rhs, default_tolerance(rhs), std::move(at));
}

InequalityVerdict sinh_mean_verdict(const PQEvaluator& ev, std::optional<HolderOrder> order,
                                    double r, double s, double sinh_r, double sinh_s,
                                    const InversionConfig& inv) {
    const double lhs = holder_mean(order.value_or(HolderOrder{0.0}), sinh_r, sinh_s);
    const double rhs = sinh_pq(ev, std::sqrt(r) * std::sqrt(s), inv);
    auto at = point(ev.params(), r, s);
    if (order) at.order = order->value();
    return make_verdict(lhs, rhs, default_tolerance(rhs), std::move(at));
}

InequalityVerdict double_angle_verdict(const PQEvaluator& ev, double x, double sin_x,
                                       double cos_x, const InversionConfig& inv) {
    const double lhs = sin_pq(ev, 2.0 * x, inv);
    const double c13 = std::cbrt(cos_x);
    const double rhs = 2.0 * sin_x * c13 /
                       std::sqrt(1.0 + 4.0 * std::pow(sin_x, 4) * std::pow(c13, 4));
    InequalityVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = -std::abs(lhs - rhs);
    v.tolerance = kIdentityTolerance;
    v.satisfied = v.margin >= -v.tolerance;
    v.at = point(ev.params(), x);
    return v;
}

std::vector<double> inset_grid(double lo, double hi, int n) {
    const double span = hi - lo;
    return Axis{"", lo + kInset * span, hi - kInset * span, n}.values();
}

InequalityVerdict failed_verdict(PointRecord at, const std::exception& e) {
    InequalityVerdict v;
    v.lhs = v.rhs = std::numeric_limits<double>::quiet_NaN();
    v.margin = -std::numeric_limits<double>::infinity();
    v.satisfied = false;
    v.at = std::move(at);
    v.error = e.what();
    return v;
}

void summarize(SweepReport& report) {
    report.worst_margin = std::numeric_limits<double>::infinity();
    report.counterexamples.clear();
    for (const auto& v : report.verdicts) {
        report.worst_margin = std::min(report.worst_margin, v.margin);
        if (!v.satisfied) report.counterexamples.push_back(v.at);
    }
    report.all_satisfied = report.counterexamples.empty();
}

SweepReport monotonicity_probe(const char* fn, const PQEvaluator& ev, HolderOrder order,
                               int grid_n, double x_max, bool increasing,
                               const std::function<double(double)>& f) {
    if (grid_n < 10) domain_fail(fn, "grid_n must be at least 10");
    const auto xs = inset_grid(0.0, x_max, grid_n);
    std::vector<double> values(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) values[i] = f(xs[i]);

    SweepReport report;
    report.check = increasing ? "f-monotone" : "fstar-monotone";
    report.order = order.value();
    report.grid = {Axis{"x", xs.front(), xs.back(), grid_n}};
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double lhs = increasing ? values[i + 1] : values[i];
        const double rhs = increasing ? values[i] : values[i + 1];
        report.verdicts.push_back(
            make_verdict(lhs, rhs, 0.0, point(ev.params(), xs[i], xs[i + 1], order.value())));
    }
    summarize(report);
    return report;
}

double resolve_x_max(const SweepSpec& spec, double fallback) {
    if (std::isnan(spec.x_max)) return fallback;
    if (!(spec.x_max > 0.0) || !std::isfinite(spec.x_max))
        throw DomainError("run_sweep: x_max must be positive and finite");
    return spec.x_max;
}

double hyperbolic_domain(const PQEvaluator& ev) {
    return std::min(ev.m_star().as_double(), kHyperbolicCap);
}

}  // namespace

InequalityVerdict make_verdict(double lhs, double rhs, double tolerance, PointRecord at) {
    InequalityVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = lhs - rhs;
    v.tolerance = tolerance;
    v.satisfied = v.margin >= -tolerance;
    v.at = std::move(at);
    return v;
}

double default_tolerance(double rhs) { return 1e-9 + 1e-9 * std::abs(rhs); }

InequalityVerdict lemma21_margin(const PQEvaluator& ev, double x) {
    require_open_unit("lemma21_margin", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    const double xq = std::pow(x, q);
    const double lhs = ev.arcsin(x);
    const double rhs =
        p * x * std::exp((1.0 - 1.0 / p) * std::log(one_minus_pow(x, q))) / ((q - p) * xq + p);
    return make_verdict(lhs, rhs, default_tolerance(rhs), point(ev.params(), x));
}

std::optional<double> lemma22_x0(const PQParams& pq) {
    if (pq.p() >= pq.q()) return std::nullopt;
    return std::pow(pq.p() / (pq.q() - pq.p()), 1.0 / pq.q());
}

InequalityVerdict lemma22_margin(const PQEvaluator& ev, double x) {
    require_positive("lemma22_margin", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    const double lhs = x / ev.arcsinh(x);
    const double rhs =
        ((p - q) * std::pow(x, q) + p) / (p * std::exp((1.0 - 1.0 / p) * log1p_pow(x, q)));
    auto v = make_verdict(lhs, rhs, default_tolerance(rhs), point(ev.params(), x));
    if (const auto x0 = lemma22_x0(ev.params())) {
        if (std::abs(x - *x0) <= 1e-12 * *x0) {
            v.at.note = "at-x0";
        } else {
            v.at.note = x < *x0 ? "below-x0" : "above-x0";
        }
    }
    return v;
}

InequalityVerdict lemma23_check(const PQEvaluator& ev) {
    const ExtendedValue& m = ev.m_star();
    auto at = point(ev.params());
    if (!m.is_finite()) {
        InequalityVerdict v;
        v.lhs = std::numeric_limits<double>::infinity();
        v.rhs = 1.0;
        v.margin = std::numeric_limits<double>::infinity();
        v.tolerance = 0.0;
        v.satisfied = true;
        v.at = std::move(at);
        v.at.note = "m*=inf";
        return v;
    }
    return make_verdict(m.value(), 1.0, 0.0, std::move(at));
}

InequalityVerdict thm11_sin_margin(const PQEvaluator& ev, double r, double s,
                                   const InversionConfig& inv) {
    require_trig_box("thm11_sin_margin", ev, r, s);
    return sin_mean_verdict(ev, std::nullopt, r, s, sin_pq(ev, r, inv), sin_pq(ev, s, inv), inv);
}

InequalityVerdict thm11_sinh_margin(const PQEvaluator& ev, double r, double s,
                                    const InversionConfig& inv) {
    require_hyperbolic_box("thm11_sinh_margin", ev, r, s);
    return sinh_mean_verdict(ev, std::nullopt, r, s, sinh_pq(ev, r, inv), sinh_pq(ev, s, inv),
                             inv);
}

InequalityVerdict gm_general_sin_margin(const PQEvaluator& ev, HolderOrder order, double r,
                                        double s, const InversionConfig& inv) {
    require_trig_box("gm_general_sin_margin", ev, r, s);
    return sin_mean_verdict(ev, order, r, s, sin_pq(ev, r, inv), sin_pq(ev, s, inv), inv);
}

InequalityVerdict gm_general_sinh_margin(const PQEvaluator& ev, HolderOrder order, double r,
                                         double s, const InversionConfig& inv) {
    require_hyperbolic_box("gm_general_sinh_margin", ev, r, s);
    return sinh_mean_verdict(ev, order, r, s, sinh_pq(ev, r, inv), sinh_pq(ev, s, inv), inv);
}

InequalityVerdict double_angle_margin(const PQEvaluator& ev, double x,
                                      const InversionConfig& inv) {
    if (!(x > 0.0 && x < 0.5 * ev.half_pi())) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "argument " << x << " outside (0, half_pi/2) = (0, " << 0.5 * ev.half_pi() << ")";
        domain_fail("double_angle_margin", msg.str());
    }
    return double_angle_verdict(ev, x, sin_pq(ev, x, inv), cos_pq(ev, x, inv), inv);
}

double G_fn(const PQEvaluator& ev, double x) {
    require_open_unit("G_fn", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    const double gap = one_minus_pow(x, q);
    return q * std::pow(x, q) / (p * gap) - x / (ev.arcsin(x) * std::exp(std::log(gap) / p));
}

double Gstar_fn(const PQEvaluator& ev, double x) {
    require_positive("Gstar_fn", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    const double log_base = log1p_pow(x, q);
    // q x^q / (p (1 + x^q)) written as q / (p (1 + x^-q)) to survive large x.
    const double second = x <= 1.0 ? q * std::pow(x, q) / (p * (1.0 + std::pow(x, q)))
                                   : q / (p * (1.0 + std::pow(x, -q)));
    return x / (ev.arcsinh(x) * std::exp(log_base / p)) + second;
}

double F_fn(const PQEvaluator& ev, HolderOrder order, double x) {
    require_open_unit("F_fn", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    return std::pow(x, 1.0 - order.value()) /
           (ev.arcsin(x) * std::exp(std::log(one_minus_pow(x, q)) / p));
}

double Fstar_fn(const PQEvaluator& ev, HolderOrder order, double x) {
    require_positive("Fstar_fn", x);
    const double p = ev.params().p();
    const double q = ev.params().q();
    return std::pow(x, 1.0 - order.value()) / (ev.arcsinh(x) * std::exp(log1p_pow(x, q) / p));
}

std::string_view check_name(Check c) {
    for (const auto& [check, name] : kCheckNames)
        if (check == c) return name;
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
    for (const auto& [check, n] : kCheckNames)
        if (n == name) return check;
    return std::nullopt;
}

std::vector<Check> all_checks() {
    std::vector<Check> out;
    for (const auto& entry : kCheckNames) out.push_back(entry.first);
    return out;
}

std::vector<double> Axis::values() const {
    if (count < 1) throw DomainError("axis '" + name + "' is empty");
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        std::ostringstream msg;
        msg << "axis '" << name << "' has invalid range " << lo << ":" << hi;
        throw DomainError(msg.str());
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

SweepReport F_monotonicity_probe(const PQEvaluator& ev, HolderOrder order, int grid_n) {
    return monotonicity_probe("F_monotonicity_probe", ev, order, grid_n, 1.0, true,
                              [&](double x) { return F_fn(ev, order, x); });
}

SweepReport Fstar_monotonicity_probe(const PQEvaluator& ev, HolderOrder order, int grid_n,
                                     double x_max) {
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        domain_fail("Fstar_monotonicity_probe", "x_max must be positive and finite");
    return monotonicity_probe("Fstar_monotonicity_probe", ev, order, grid_n, x_max, false,
                              [&](double x) { return Fstar_fn(ev, order, x); });
}

SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& opts) {
    const auto ps = spec.p.values();
    const auto qs = spec.q.values();
    const bool has_args = spec.check != Check::Lemma23;
    if (has_args && spec.grid < 2) throw DomainError("run_sweep: grid must be at least 2");
    const HolderOrder order{spec.order};
    const bool uses_order = spec.check == Check::GmSin || spec.check == Check::GmSinh ||
                            spec.check == Check::FMonotone || spec.check == Check::FstarMonotone;
    if ((spec.check == Check::FMonotone || spec.check == Check::FstarMonotone) && spec.grid < 10)
        throw DomainError("run_sweep: monotonicity probes need grid >= 10");
    // Validate every parameter pair before doing any work.
    for (double p : ps)
        for (double q : qs) PQParams{p, q};

    SweepReport report;
    report.check = std::string(check_name(spec.check));
    if (uses_order) report.order = order.value();
    report.grid = {spec.p, spec.q};

    const double frac_lo = kInset;
    const double frac_hi = 1.0 - kInset;
    const InversionConfig& inv = opts.inversion;
    std::optional<HolderOrder> mean_order;
    if (spec.check == Check::GmSin || spec.check == Check::GmSinh) mean_order = order;

    switch (spec.check) {
        case Check::Thm11Sin:
        case Check::GmSin:
            report.grid.push_back({"r/half_pi", frac_lo, frac_hi, spec.grid});
            report.grid.push_back({"s/half_pi", frac_lo, frac_hi, spec.grid});
            break;
        case Check::Thm11Sinh:
        case Check::GmSinh:
            report.grid.push_back({"r/min(m*,5)", frac_lo, frac_hi, spec.grid});
            report.grid.push_back({"s/min(m*,5)", frac_lo, frac_hi, spec.grid});
            break;
        case Check::Lemma21:
        case Check::FMonotone:
            report.grid.push_back({"x", frac_lo, frac_hi, spec.grid});
            break;
        case Check::Lemma22: {
            const double xm = resolve_x_max(spec, kDefaultLemma22XMax);
            report.grid.push_back({"x", frac_lo * xm, frac_hi * xm, spec.grid});
            break;
        }
        case Check::FstarMonotone: {
            const double xm = resolve_x_max(spec, kDefaultFstarXMax);
            report.grid.push_back({"x", frac_lo * xm, frac_hi * xm, spec.grid});
            break;
        }
        case Check::DoubleAngle:
            report.grid.push_back({"x/(half_pi/2)", frac_lo, frac_hi, spec.grid});
            break;
        case Check::Lemma23:
            break;
    }

    for (double p : ps) {
        for (double q : qs) {
            const PQParams pq{p, q};
            std::optional<PQEvaluator> ev;
            try {
                ev.emplace(pq, opts.quadrature);
            } catch (const std::exception& e) {
                report.verdicts.push_back(failed_verdict(point(pq), e));
                continue;
            }

            std::vector<InequalityVerdict> block;
            auto grid_1d = [&](const std::vector<double>& xs, auto&& eval) {
                block.resize(xs.size());
                detail::parallel_for(xs.size(), opts.threads, [&](std::size_t i) {
                    try {
                        block[i] = eval(xs[i]);
                    } catch (const std::exception& e) {
                        block[i] = failed_verdict(point(pq, xs[i]), e);
                    }
                });
            };
            // Inverse values along one axis, then every (r, s) pair.
            auto grid_2d = [&](const std::vector<double>& xs, auto&& inverse, auto&& eval) {
                const std::size_t n = xs.size();
                std::vector<double> inv_vals(n, std::numeric_limits<double>::quiet_NaN());
                std::vector<std::string> inv_errors(n);
                detail::parallel_for(n, opts.threads, [&](std::size_t i) {
                    try {
                        inv_vals[i] = inverse(xs[i]);
                    } catch (const std::exception& e) {
                        inv_errors[i] = e.what();
                    }
                });
                block.resize(n * n);
                detail::parallel_for(n * n, opts.threads, [&](std::size_t k) {
                    const std::size_t i = k / n;
                    const std::size_t j = k % n;
                    try {
                        for (std::size_t idx : {i, j})
                            if (!inv_errors[idx].empty()) throw ComputationError(inv_errors[idx], 0, 0);
                        block[k] = eval(xs[i], xs[j], inv_vals[i], inv_vals[j]);
                    } catch (const std::exception& e) {
                        auto at = point(pq, xs[i], xs[j]);
                        if (mean_order) at.order = mean_order->value();
                        block[k] = failed_verdict(std::move(at), e);
                    }
                });
            };

            switch (spec.check) {
                case Check::Thm11Sin:
                case Check::GmSin:
                    grid_2d(
                        inset_grid(0.0, ev->half_pi(), spec.grid),
                        [&](double r) { return sin_pq(*ev, r, inv); },
                        [&](double r, double s, double sr, double ss) {
                            return sin_mean_verdict(*ev, mean_order, r, s, sr, ss, inv);
                        });
                    break;
                case Check::Thm11Sinh:
                case Check::GmSinh:
                    grid_2d(
                        inset_grid(0.0, hyperbolic_domain(*ev), spec.grid),
                        [&](double r) { return sinh_pq(*ev, r, inv); },
                        [&](double r, double s, double sr, double ss) {
                            return sinh_mean_verdict(*ev, mean_order, r, s, sr, ss, inv);
                        });
                    break;
                case Check::Lemma21:
                    grid_1d(inset_grid(0.0, 1.0, spec.grid),
                            [&](double x) { return lemma21_margin(*ev, x); });
                    break;
                case Check::Lemma22:
                    grid_1d(inset_grid(0.0, resolve_x_max(spec, kDefaultLemma22XMax), spec.grid),
                            [&](double x) { return lemma22_margin(*ev, x); });
                    break;
                case Check::Lemma23:
                    block.push_back(lemma23_check(*ev));
                    break;
                case Check::DoubleAngle:
                    grid_1d(inset_grid(0.0, 0.5 * ev->half_pi(), spec.grid), [&](double x) {
                        return double_angle_verdict(*ev, x, sin_pq(*ev, x, inv),
                                                    cos_pq(*ev, x, inv), inv);
                    });
                    break;
                case Check::FMonotone:
                    block = F_monotonicity_probe(*ev, order, spec.grid).verdicts;
                    break;
                case Check::FstarMonotone:
                    block = Fstar_monotonicity_probe(*ev, order, spec.grid,
                                                     resolve_x_max(spec, kDefaultFstarXMax))
                                .verdicts;
                    break;
            }
            for (auto& v : block) report.verdicts.push_back(std::move(v));
        }
    }
    summarize(report);
    return report;
}

CounterexampleResult counterexample_search(const PQEvaluator& ev, HolderOrder order, int budget,
                                           unsigned threads) {
    if (!(order.value() > 0.0))
        domain_fail("counterexample_search", "order must be positive (the inequality holds for order <= 0)");
    if (budget < 100) domain_fail("counterexample_search", "budget must be at least 100");

    CounterexampleResult result;
    // margin = sqrt(A(x) A(y)) - A(H(x, y)); negative means (x, y) violates.
    auto witness = [&](double x, double y, double ax, double ay) {
        Witness w{x, y, std::sqrt(ax) * std::sqrt(ay), ev.arcsin(holder_mean(order, x, y)), 0.0};
        w.margin = w.lhs - w.rhs;
        return w;
    };
    auto qualifies = [](const Witness& w, bool violating) {
        if (w.x == w.y) return false;
        const double tol = default_tolerance(w.rhs);
        return violating ? w.margin < -tol : w.margin > tol;
    };

    const auto axis = inset_grid(0.0, 1.0, budget);
    const std::size_t n = axis.size();
    std::vector<double> arcsins(n);
    detail::parallel_for(n, threads, [&](std::size_t i) { arcsins[i] = ev.arcsin(axis[i]); });
    result.evaluations += static_cast<std::int64_t>(n);

    // Coarse scan over the strict upper triangle; the margin is symmetric.
    struct RowExtremes {
        std::optional<Witness> lowest;
        std::optional<Witness> highest;
    };
    std::vector<RowExtremes> rows(n);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Witness w = witness(axis[i], axis[j], arcsins[i], arcsins[j]);
            if (!rows[i].lowest || w.margin < rows[i].lowest->margin) rows[i].lowest = w;
            if (!rows[i].highest || w.margin > rows[i].highest->margin) rows[i].highest = w;
        }
    });
    result.evaluations += static_cast<std::int64_t>(n * (n - 1) / 2);

    std::optional<Witness> lowest;
    std::optional<Witness> highest;
    for (const auto& row : rows) {
        if (row.lowest && (!lowest || row.lowest->margin < lowest->margin)) lowest = row.lowest;
        if (row.highest && (!highest || row.highest->margin > highest->margin)) highest = row.highest;
    }

    const double step = axis[1] - axis[0];
    auto refine = [&](Witness best, bool violating) {
        double half = step;
        for (int round = 0; round < 3; ++round) {
            const Witness center = best;
            for (int i = 0; i <= 10; ++i) {
                for (int j = 0; j <= 10; ++j) {
                    const double x = center.x + half * (i / 5.0 - 1.0);
                    const double y = center.y + half * (j / 5.0 - 1.0);
                    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0) || x == y) continue;
                    const Witness w = witness(x, y, ev.arcsin(x), ev.arcsin(y));
                    result.evaluations += 3;
                    if (violating ? w.margin < best.margin : w.margin > best.margin) best = w;
                }
            }
            half /= 10.0;
        }
        return best;
    };

    if (lowest) {
        const Witness w = refine(*lowest, true);
        if (qualifies(w, true)) result.violating = w;
    }
    if (highest) {
        const Witness w = refine(*highest, false);
        if (qualifies(w, false)) result.satisfying = w;
    }
    return result;
}

}  // namespace pqtrig
