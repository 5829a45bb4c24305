#pragma once

#include <iosfwd>
#include <string>

#include "pqtrig/inequality_lab.hpp"

namespace pqtrig {

/// 12 significant digits; non-finite values render as inf, -inf, nan.
std::string format_number(double v);

/// Header `p,q,check,arg1,arg2,lhs,rhs,margin,satisfied`, then one row per
/// verdict in report order. Absent arguments leave their field empty.
void write_csv(std::ostream& os, const SweepReport& report, bool header = true);

/// A single JSON object mirroring SweepReport. Non-finite numbers are
/// encoded as the strings "inf", "-inf" and "nan".
std::string to_json(const SweepReport& report, int indent = 2);

/// Human-readable summary with the first `max_listed` counterexamples.
void write_text(std::ostream& os, const SweepReport& report, std::size_t max_listed = 20);

}  // namespace pqtrig
