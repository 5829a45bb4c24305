#include "pqtrig/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqtrig/errors.hpp"
#include "pqtrig/inequality_lab.hpp"
#include "pqtrig/pq_inverse.hpp"
#include "pqtrig/report_io.hpp"

namespace pqtrig::cli {

namespace {

enum class Format { Text, Csv, Json };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

const std::vector<std::string> kFunctions{"arcsin", "arccos", "arcsinh", "sin", "cos", "sinh"};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    Format format = Format::Text;
    std::string output;
    double quad_tol = QuadratureConfig{}.target_abs_tol;
    double inv_tol = InversionConfig{}.tol;
    unsigned threads = 0;
};

struct Options {
    Common common;
    double p = 0.0;
    double q = 0.0;
    std::string fn;
    std::vector<double> xs;
    std::string check;
    int grid = 10;
    double order = 0.0;
    double x_max = std::numeric_limits<double>::quiet_NaN();
    std::string p_range;
    std::string q_range;
    int budget = 200;
};

void add_common(CLI::App* cmd, Common& c, bool threaded) {
    cmd->add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("text");
    cmd->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
    cmd->add_option("--quad-tol", c.quad_tol, "Quadrature absolute tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--inv-tol", c.inv_tol, "Inversion residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (threaded) {
        cmd->add_option("--threads", c.threads, "Sweep worker threads (0 = hardware default)")
            ->capture_default_str();
    }
}

void add_pq(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "First exponent, p > 1")->required();
    cmd->add_option("--q", o.q, "Second exponent, q > 1")->required();
}

PQParams checked_params(double p, double q) {
    try {
        return PQParams{p, q};
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Axis parse_range(const std::string& name, const std::string& text) {
    // lo:hi:n
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    auto fail = [&](const std::string& why) -> Axis {
        throw UsageError("--" + name + "-range '" + text + "': " + why + " (expected lo:hi:n)");
    };
    if (parts.size() != 3) return fail("wrong number of fields");
    Axis axis{name, 0.0, 0.0, 0};
    try {
        std::size_t used = 0;
        axis.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) return fail("bad lower bound");
        axis.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) return fail("bad upper bound");
        axis.count = std::stoi(parts[2], &used);
        if (used != parts[2].size()) return fail("bad count");
    } catch (const std::logic_error&) {
        return fail("not a number");
    }
    if (axis.count < 1) return fail("count must be at least 1");
    if (!(axis.lo <= axis.hi)) return fail("lower bound exceeds upper bound");
    if (axis.count == 1 && axis.lo != axis.hi) return fail("a single point needs lo == hi");
    if (!(axis.lo > 1.0)) throw UsageError(name + " must exceed 1 (range starts at " + parts[0] + ")");
    return axis;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot open output file '" + path + "'");
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit_report(const SweepReport& report, const Common& c, std::ostream& out) {
    Sink sink(c.output, out);
    switch (c.format) {
        case Format::Text: write_text(sink.stream(), report); break;
        case Format::Csv: write_csv(sink.stream(), report); break;
        case Format::Json: sink.stream() << to_json(report) << '\n'; break;
    }
}

SweepOptions sweep_options(const Common& c) {
    SweepOptions opts;
    opts.threads = c.threads;
    opts.quadrature.target_abs_tol = c.quad_tol;
    opts.inversion.tol = c.inv_tol;
    return opts;
}

Check checked_check(const std::string& name) {
    if (auto c = parse_check(name)) return *c;
    std::string known;
    for (Check c : all_checks()) known += (known.empty() ? "" : ", ") + std::string(check_name(c));
    throw UsageError("unknown check '" + name + "' (known: " + known + ")");
}

int cmd_eval(const Options& o, std::ostream& out) {
    const PQParams pq = checked_params(o.p, o.q);
    QuadratureConfig qc;
    qc.target_abs_tol = o.common.quad_tol;
    InversionConfig ic;
    ic.tol = o.common.inv_tol;
    const PQEvaluator ev{pq, qc};

    std::vector<std::pair<double, double>> rows;
    for (double x : o.xs) {
        double v = 0.0;
        if (o.fn == "arcsin") v = ev.arcsin(x);
        else if (o.fn == "arccos") v = ev.arccos(x);
        else if (o.fn == "arcsinh") v = ev.arcsinh(x);
        else if (o.fn == "sin") v = sin_pq(ev, x, ic);
        else if (o.fn == "cos") v = cos_pq(ev, x, ic);
        else v = sinh_pq(ev, x, ic);
        rows.emplace_back(x, v);
    }

    Sink sink(o.common.output, out);
    std::ostream& os = sink.stream();
    switch (o.common.format) {
        case Format::Text:
            for (const auto& [x, v] : rows) os << format_number(x) << '\t' << format_number(v) << '\n';
            break;
        case Format::Csv:
            os << "fn,p,q,x,value\n";
            for (const auto& [x, v] : rows) {
                os << o.fn << ',' << format_number(pq.p()) << ',' << format_number(pq.q()) << ','
                   << format_number(x) << ',' << format_number(v) << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& [x, v] : rows) values.push_back({{"x", x}, {"value", v}});
            os << nlohmann::json{{"fn", o.fn}, {"p", pq.p()}, {"q", pq.q()}, {"values", values}}.dump(2)
               << '\n';
            break;
        }
    }
    return kSatisfied;
}

int cmd_constants(const Options& o, std::ostream& out) {
    const PQParams pq = checked_params(o.p, o.q);
    QuadratureConfig qc;
    qc.target_abs_tol = o.common.quad_tol;
    const PQEvaluator ev{pq, qc};
    const std::string half_pi = format_number(ev.half_pi());
    const std::string m_star = format_number(ev.m_star().as_double());

    Sink sink(o.common.output, out);
    std::ostream& os = sink.stream();
    switch (o.common.format) {
        case Format::Text:
            os << "p       = " << format_number(pq.p()) << '\n'
               << "q       = " << format_number(pq.q()) << '\n'
               << "half_pi = " << half_pi << '\n'
               << "m_star  = " << m_star << '\n';
            break;
        case Format::Csv:
            os << "p,q,half_pi,m_star\n"
               << format_number(pq.p()) << ',' << format_number(pq.q()) << ',' << half_pi << ','
               << m_star << '\n';
            break;
        case Format::Json: {
            nlohmann::json j{{"p", pq.p()}, {"q", pq.q()}, {"half_pi", ev.half_pi()}};
            if (ev.m_star().is_finite()) {
                j["m_star"] = ev.m_star().value();
            } else {
                j["m_star"] = "inf";
            }
            os << j.dump(2) << '\n';
            break;
        }
    }
    return kSatisfied;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Check check = checked_check(o.check);
    checked_params(o.p, o.q);
    SweepSpec spec;
    spec.check = check;
    spec.p = Axis{"p", o.p, o.p, 1};
    spec.q = Axis{"q", o.q, o.q, 1};
    spec.grid = o.grid;
    spec.order = o.order;
    spec.x_max = o.x_max;
    const SweepReport report = run_sweep(spec, sweep_options(o.common));
    emit_report(report, o.common, out);
    return report.all_satisfied ? kSatisfied : kFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const Check check = checked_check(o.check);
    SweepSpec spec;
    spec.check = check;
    spec.p = parse_range("p", o.p_range);
    spec.q = parse_range("q", o.q_range);
    spec.grid = o.grid;
    spec.order = o.order;
    spec.x_max = o.x_max;
    const SweepReport report = run_sweep(spec, sweep_options(o.common));
    emit_report(report, o.common, out);
    return report.all_satisfied ? kSatisfied : kFailed;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    const PQParams pq = checked_params(o.p, o.q);
    if (!(o.order > 0.0)) throw UsageError("--order must be positive for a counterexample search");
    QuadratureConfig qc;
    qc.target_abs_tol = o.common.quad_tol;
    const PQEvaluator ev{pq, qc};
    const auto result = counterexample_search(ev, HolderOrder{o.order}, o.budget, o.common.threads);

    struct Row {
        std::string kind;
        const std::optional<Witness>* w;
    };
    const Row rows[] = {{"violating", &result.violating}, {"satisfying", &result.satisfying}};

    Sink sink(o.common.output, out);
    std::ostream& os = sink.stream();
    switch (o.common.format) {
        case Format::Text:
            for (const auto& [kind, w] : rows) {
                os << kind << ": ";
                if (*w) {
                    os << "x=" << format_number((*w)->x) << " y=" << format_number((*w)->y)
                       << " geometric=" << format_number((*w)->lhs)
                       << " arcsin(H)=" << format_number((*w)->rhs)
                       << " margin=" << format_number((*w)->margin) << '\n';
                } else {
                    os << "not found within budget\n";
                }
            }
            os << "evaluations: " << result.evaluations << '\n';
            break;
        case Format::Csv:
            os << "p,q,order,kind,x,y,lhs,rhs,margin\n";
            for (const auto& [kind, w] : rows) {
                if (!*w) continue;
                os << format_number(pq.p()) << ',' << format_number(pq.q()) << ','
                   << format_number(o.order) << ',' << kind << ',' << format_number((*w)->x) << ','
                   << format_number((*w)->y) << ',' << format_number((*w)->lhs) << ','
                   << format_number((*w)->rhs) << ',' << format_number((*w)->margin) << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::json j{{"p", pq.p()}, {"q", pq.q()}, {"order", o.order},
                             {"evaluations", result.evaluations}};
            for (const auto& [kind, w] : rows) {
                if (*w) {
                    j[kind] = {{"x", (*w)->x}, {"y", (*w)->y}, {"lhs", (*w)->lhs},
                               {"rhs", (*w)->rhs}, {"margin", (*w)->margin}};
                } else {
                    j[kind] = nullptr;
                }
            }
            os << j.dump(2) << '\n';
            break;
        }
    }
    return result.violating && result.satisfying ? kSatisfied : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized (p,q)-trigonometric functions and inequality verification", "pqtrig"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Evaluate a function at one or more points");
    add_pq(eval, o);
    eval->add_option("--fn", o.fn, "Function name")->required()->check(CLI::IsMember(kFunctions));
    eval->add_option("--x", o.xs, "Argument(s)")->required();
    add_common(eval, o.common, false);

    auto* constants = app.add_subcommand("constants", "Print half_pi and m* for (p, q)");
    add_pq(constants, o);
    add_common(constants, o.common, false);

    auto* verify = app.add_subcommand("verify", "Run one check at a single (p, q)");
    add_pq(verify, o);
    verify->add_option("--check", o.check, "Check name")->required();
    verify->add_option("--grid", o.grid, "Points per argument axis")
        ->check(CLI::Range(2, 1'000'000))
        ->capture_default_str();
    verify->add_option("--order", o.order, "Hölder order for gm-* and *-monotone checks")
        ->capture_default_str();
    verify->add_option("--x-max", o.x_max, "Upper end of the x axis for lemma22 / fstar-monotone");
    add_common(verify, o.common, true);

    auto* sweep = app.add_subcommand("sweep", "Run one check over a (p, q) grid");
    sweep->add_option("--check", o.check, "Check name")->required();
    sweep->add_option("--p-range", o.p_range, "p axis as lo:hi:n")->required();
    sweep->add_option("--q-range", o.q_range, "q axis as lo:hi:n")->required();
    sweep->add_option("--grid", o.grid, "Points per argument axis")
        ->check(CLI::Range(2, 1'000'000))
        ->capture_default_str();
    sweep->add_option("--order", o.order, "Hölder order for gm-* and *-monotone checks")
        ->capture_default_str();
    sweep->add_option("--x-max", o.x_max, "Upper end of the x axis for lemma22 / fstar-monotone");
    add_common(sweep, o.common, true);

    auto* cex = app.add_subcommand("counterexample",
                                   "Find witnesses of both signs for a positive Hölder order");
    add_pq(cex, o);
    cex->add_option("--order", o.order, "Hölder order, > 0")->required();
    cex->add_option("--budget", o.budget, "Coarse grid points per axis")
        ->check(CLI::Range(100, 100'000))
        ->capture_default_str();
    add_common(cex, o.common, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSatisfied;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSatisfied;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        if (constants->parsed()) return cmd_constants(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        return cmd_counterexample(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
}

}  // namespace pqtrig::cli
