// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "pqtrig/cli.hpp"
#include "pqtrig/inequality_lab.hpp"

using namespace pqtrig;

namespace {

const std::vector<double> kGrid{1.25, 1.5, 2.0, 3.0, 5.0};

int g_failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("%s  %2d  %-32s %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::vector<double> closed_grid(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return out;
}

// Runs `f` over every (p, q) pair, turning exceptions into failures.
template <class F>
bool each_pair(F&& f, std::string& why) {
    for (double p : kGrid) {
        for (double q : kGrid) {
            try {
                if (!f(PQEvaluator{PQParams{p, q}})) {
                    why = fmt("first failure at (p, q) = (%g, %g)", p, q);
                    return false;
                }
            } catch (const std::exception& e) {
                why = fmt("(p, q) = (%g, %g) threw: ", p, q) + e.what();
                return false;
            }
        }
    }
    return true;
}

void classical_case() {
    const PQEvaluator ev{PQParams{2.0, 2.0}};
    const double hp = std::numbers::pi / 2;
    double worst = 0.0;
    auto track = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
    for (double x : closed_grid(0.0, 1.0, 500)) {
        track(ev.arcsin(x), std::asin(x));
        track(ev.arccos(x), std::acos(x));
    }
    for (double x : closed_grid(0.0, 10.0, 500)) track(ev.arcsinh(x), std::asinh(x));
    for (double y : closed_grid(0.0, hp, 500)) {
        track(sin_pq(ev, y), std::sin(y));
        track(cos_pq(ev, y), std::cos(y));
    }
    for (double y : closed_grid(0.0, 5.0, 500)) track(sinh_pq(ev, y), std::sinh(y));
    report(1, "classical case (p = q = 2)", worst <= 1e-10, fmt("max error %.3e (tol 1e-10)", worst));
}

void beta_oracle() {
    double worst_hp = 0.0;
    double worst_m = 0.0;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            const double p = ev.params().p();
            const double q = ev.params().q();
            worst_hp = std::max(worst_hp, std::abs(ev.half_pi() - oracle::half_pi_beta(p, q)));
            if (ev.m_star().is_finite())
                worst_m = std::max(worst_m, std::abs(ev.m_star().value() - oracle::m_star_beta(p, q)));
            return true;
        },
        why);
    report(2, "Beta identity oracle", ok && worst_hp <= 1e-10 && worst_m <= 1e-9,
           why.empty() ? fmt("half_pi max error %.3e, m* max error %.3e", worst_hp, worst_m) : why);
}

void series_oracle() {
    double worst = 0.0;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            for (double x : closed_grid(0.0, 0.9, 91))
                worst = std::max(worst, std::abs(ev.arcsin(x) - arcsin_series_oracle(ev.params(), x, 100000)));
            return true;
        },
        why);
    report(3, "series oracle (x <= 0.9)", ok && worst <= 1e-9,
           why.empty() ? fmt("max error %.3e (tol 1e-9)", worst) : why);
}

void round_trips() {
    double worst = 0.0;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            auto track = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
            for (double x : closed_grid(0.0, 1.0, 50)) {
                track(sin_pq(ev, ev.arcsin(x)), x);
                track(cos_pq(ev, ev.arccos(x)), x);
            }
            for (double y : closed_grid(0.0, ev.half_pi(), 50)) {
                track(ev.arcsin(sin_pq(ev, y)), y);
                track(ev.arccos(cos_pq(ev, y)), y);
            }
            const double top = 0.99 * std::min(ev.m_star().as_double(), 5.0);
            for (double y : closed_grid(0.0, top, 50)) track(ev.arcsinh(sinh_pq(ev, y)), y);
            for (double x : closed_grid(0.0, 10.0, 50)) track(sinh_pq(ev, ev.arcsinh(x)), x);
            return true;
        },
        why);
    report(4, "round trips", ok && worst <= 1e-9, why.empty() ? fmt("max error %.3e (tol 1e-9)", worst) : why);
}

void theorem() {
    double worst = INFINITY;
    double diag = 0.0;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            const auto rs = closed_grid(0.01 * ev.half_pi(), 0.99 * ev.half_pi(), 15);
            const double h = std::min(ev.m_star().as_double(), 5.0);
            const auto hs = closed_grid(0.01 * h, 0.99 * h, 15);
            for (std::size_t i = 0; i < 15; ++i) {
                for (std::size_t j = 0; j < 15; ++j) {
                    const double a = thm11_sin_margin(ev, rs[i], rs[j]).margin;
                    const double b = thm11_sinh_margin(ev, hs[i], hs[j]).margin;
                    worst = std::min({worst, a, b});
                    if (i == j) diag = std::max({diag, std::abs(a), std::abs(b)});
                }
            }
            return true;
        },
        why);
    report(5, "geometric-mean inequalities", ok && worst >= -1e-9 && diag <= 1e-9,
           why.empty() ? fmt("worst margin %.3e, max |diagonal| %.3e", worst, diag) : why);
}

void lemmas_21_22() {
    double worst = INFINITY;
    int below = 0;
    int above = 0;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            for (int i = 1; i <= 49; ++i) worst = std::min(worst, lemma21_margin(ev, 0.02 * i).margin);
            bool lo = false;
            bool hi = false;
            for (int i = 1; i <= 100; ++i) {
                const auto v = lemma22_margin(ev, 0.1 * i);
                worst = std::min(worst, v.margin);
                lo = lo || v.at.note == "below-x0";
                hi = hi || v.at.note == "above-x0";
            }
            if (ev.params().p() < ev.params().q()) {
                below += lo;
                above += hi;
                return lo && hi;
            }
            return true;
        },
        why);
    report(6, "rational lower bounds", ok && worst > 1e-12,
           why.empty() ? fmt("min margin %.3e; both sides of x0 covered for %g pairs", worst, std::min(below, above))
                       : why);
}

void lemma_23() {
    double smallest = INFINITY;
    std::string why;
    const bool ok = each_pair(
        [&](const PQEvaluator& ev) {
            const bool infinite = !ev.m_star().is_finite();
            if (infinite != (ev.params().p() >= ev.params().q())) return false;
            if (!infinite) smallest = std::min(smallest, ev.m_star().value());
            return lemma23_check(ev).satisfied;
        },
        why);
    report(7, "m* dichotomy and m* > 1", ok && smallest > 1.0,
           why.empty() ? fmt("smallest finite m* %.6f", smallest) : why);
}

void sharpness() {
    const PQEvaluator ev{PQParams{2.0, 2.0}};
    bool ok = true;
    std::ostringstream detail;
    for (double o : {0.5, 1.0, 2.0}) {
        const auto res = counterexample_search(ev, HolderOrder{o}, 200);
        const bool both = res.violating && res.satisfying;
        ok = ok && both;
        detail << "ord " << o << (both ? " both" : " MISSING") << "; ";
    }
    for (double o : {-1.0, 0.0}) {
        SweepSpec spec;
        spec.check = Check::GmSin;
        spec.order = o;
        spec.grid = 40;
        const auto r = run_sweep(spec);
        ok = ok && r.all_satisfied;
        detail << "ord " << o << " worst " << r.worst_margin << "; ";
    }
    report(8, "sharpness of the order threshold", ok, detail.str());
}

void proof_machinery() {
    const PQEvaluator ev{PQParams{2.0, 2.0}};
    bool ok = std::abs(G_fn(ev, 1e-6) + 1.0) <= 1e-3;
    std::string why;
    ok = each_pair(
             [&](const PQEvaluator& e) {
                 for (int i = 1; i < 100; ++i)
                     if (!(G_fn(e, i / 100.0) > -1.0)) return false;
                 for (int i = 1; i <= 100; ++i)
                     if (!(Gstar_fn(e, 0.2 * i) > 1.0)) return false;
                 return true;
             },
             why) &&
         ok;
    for (double o : {-2.0, -0.5, 0.0}) ok = ok && F_monotonicity_probe(ev, HolderOrder{o}, 100).all_satisfied;
    ok = ok && !F_monotonicity_probe(ev, HolderOrder{1.0}, 1000).all_satisfied;
    for (double o : {0.0, 1.0, 3.0})
        ok = ok && Fstar_monotonicity_probe(ev, HolderOrder{o}, 100, 20.0).all_satisfied;
    ok = ok && !Fstar_monotonicity_probe(ev, HolderOrder{-1.0}, 1000, 20.0).all_satisfied;
    report(9, "G, G*, F, F* claims", ok, why.empty() ? fmt("G(1e-6) = %.6f", G_fn(ev, 1e-6)) : why);
}

void double_angle() {
    const PQEvaluator ev{PQParams{4.0 / 3.0, 4.0}};
    double worst = 0.0;
    for (int i = 1; i <= 25; ++i)
        worst = std::max(worst, -double_angle_margin(ev, 0.5 * ev.half_pi() * i / 26.0).margin);
    report(10, "double-angle identity (4/3, 4)", worst <= 1e-8, fmt("max |difference| %.3e (tol 1e-8)", worst));
}

void cli_contract() {
    auto code = [](const std::vector<std::string>& args, std::string* out = nullptr) {
        std::ostringstream o;
        std::ostringstream e;
        const int c = cli::run(args, o, e);
        if (out) *out = o.str();
        return c;
    };
    const std::vector<std::string> sweep{"sweep", "--check", "thm11-sin", "--p-range", "1.25:5:3",
                                         "--q-range", "1.25:5:3", "--grid", "8", "--format", "csv"};
    std::string first;
    std::string second;
    const int a = code(sweep, &first);
    const int b = code(sweep, &second);
    const bool header = first.rfind("p,q,check,arg1,arg2,lhs,rhs,margin,satisfied\n", 0) == 0;
    const bool rows = std::count(first.begin(), first.end(), '\n') == 1 + 9 * 64;
    const int violated = code({"verify", "--check", "gm-sin", "--order", "1", "--p", "2", "--q", "2", "--grid", "12"});
    const int unknown = code({"verify", "--check", "nope", "--p", "2", "--q", "2"});
    const int inverted = code({"sweep", "--check", "lemma21", "--p-range", "3:2:2", "--q-range", "2:2:1"});
    const int bad_p = code({"constants", "--p", "0.9", "--q", "2"});
    const bool ok = a == 0 && b == 0 && first == second && header && rows && violated == 1 &&
                    unknown == 2 && inverted == 2 && bad_p == 2;
    std::ostringstream detail;
    detail << "exit codes " << a << "/" << violated << "/" << unknown << "/" << inverted << "/" << bad_p
           << ", csv " << (first == second ? "identical" : "DIFFERS") << " across runs";
    report(11, "CLI contract", ok, detail.str());
}

void guarded(const std::function<void()>& f, int id) {
    try {
        f();
    } catch (const std::exception& e) {
        report(id, "unexpected exception", false, e.what());
    }
}

}  // namespace

int main() {
    guarded(classical_case, 1);
    guarded(beta_oracle, 2);
    guarded(series_oracle, 3);
    guarded(round_trips, 4);
    guarded(theorem, 5);
    guarded(lemmas_21_22, 6);
    guarded(lemma_23, 7);
    guarded(sharpness, 8);
    guarded(proof_machinery, 9);
    guarded(double_angle, 10);
    guarded(cli_contract, 11);
    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
