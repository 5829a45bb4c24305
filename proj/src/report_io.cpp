#include "pqtrig/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace pqtrig {

namespace {

using nlohmann::json;

json number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

json optional_number(const std::optional<double>& v) {
    return v ? number(*v) : json(nullptr);
}

json point_json(const PointRecord& at) {
    json j{{"p", number(at.p)},
           {"q", number(at.q)},
           {"arg1", optional_number(at.arg1)},
           {"arg2", optional_number(at.arg2)},
           {"order", optional_number(at.order)}};
    if (!at.note.empty()) j["note"] = at.note;
    return j;
}

std::string optional_field(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepReport& report, bool header) {
    if (header) os << "p,q,check,arg1,arg2,lhs,rhs,margin,satisfied\n";
    for (const auto& v : report.verdicts) {
        os << format_number(v.at.p) << ',' << format_number(v.at.q) << ',' << report.check << ','
           << optional_field(v.at.arg1) << ',' << optional_field(v.at.arg2) << ','
           << format_number(v.lhs) << ',' << format_number(v.rhs) << ','
           << format_number(v.margin) << ',' << (v.satisfied ? "true" : "false") << '\n';
    }
}

std::string to_json(const SweepReport& report, int indent) {
    json grid = json::array();
    for (const auto& axis : report.grid) {
        grid.push_back({{"name", axis.name},
                        {"lo", number(axis.lo)},
                        {"hi", number(axis.hi)},
                        {"count", axis.count}});
    }
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        json j{{"at", point_json(v.at)},
               {"lhs", number(v.lhs)},
               {"rhs", number(v.rhs)},
               {"margin", number(v.margin)},
               {"tolerance", number(v.tolerance)},
               {"satisfied", v.satisfied}};
        if (!v.error.empty()) j["error"] = v.error;
        verdicts.push_back(std::move(j));
    }
    json counterexamples = json::array();
    for (const auto& at : report.counterexamples) counterexamples.push_back(point_json(at));

    const json out{{"check", report.check},
                   {"order", optional_number(report.order)},
                   {"grid", std::move(grid)},
                   {"verdicts", std::move(verdicts)},
                   {"worst_margin", number(report.worst_margin)},
                   {"all_satisfied", report.all_satisfied},
                   {"counterexamples", std::move(counterexamples)}};
    return out.dump(indent);
}

void write_text(std::ostream& os, const SweepReport& report, std::size_t max_listed) {
    os << "check:        " << report.check << '\n';
    if (report.order) os << "order:        " << format_number(*report.order) << '\n';
    os << "grid:        ";
    for (const auto& axis : report.grid) {
        os << ' ' << axis.name << '=' << format_number(axis.lo) << ':' << format_number(axis.hi)
           << ':' << axis.count;
    }
    os << '\n'
       << "verdicts:     " << report.verdicts.size() << '\n'
       << "worst margin: " << format_number(report.worst_margin) << '\n'
       << "result:       " << (report.all_satisfied ? "all satisfied" : "VIOLATIONS FOUND") << '\n';
    if (report.all_satisfied) return;

    os << "counterexamples (" << report.counterexamples.size() << "):\n";
    std::size_t listed = 0;
    for (const auto& v : report.verdicts) {
        if (v.satisfied) continue;
        if (listed == max_listed) {
            os << "  ... " << report.counterexamples.size() - listed << " more\n";
            break;
        }
        os << "  p=" << format_number(v.at.p) << " q=" << format_number(v.at.q);
        if (v.at.arg1) os << " arg1=" << format_number(*v.at.arg1);
        if (v.at.arg2) os << " arg2=" << format_number(*v.at.arg2);
        if (v.error.empty()) {
            os << " lhs=" << format_number(v.lhs) << " rhs=" << format_number(v.rhs)
               << " margin=" << format_number(v.margin);
        } else {
            os << " error: " << v.error;
        }
        os << '\n';
        ++listed;
    }
}

}  // namespace pqtrig
