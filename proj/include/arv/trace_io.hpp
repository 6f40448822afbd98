#pragma once

#include <iosfwd>
#include <string>

#include "arv/valuation.hpp"

namespace arv {

/// Header row of variable names, then one numeric row per sample. Blank
/// lines are skipped; numbers are parsed without locale. Throws ParseError
/// (position = 1-based line number) on malformed input or an empty trace.
Trace read_trace_csv(std::istream& in);
Trace read_trace_csv_file(const std::string& path);

/// Writes values in shortest round-trip form, so reading back is exact.
void write_trace_csv(std::ostream& out, const Trace& trace);

}  // namespace arv
