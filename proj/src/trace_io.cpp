#include "arv/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "arv/error.hpp"
#include "arv/predicate.hpp"

namespace arv {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = line.find(',');
    out.push_back(strip(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

double parse_value(std::string_view s, std::size_t line) {
  if (s == "inf" || s == "+inf") return Interval::kInf;
  if (s == "-inf") return -Interval::kInf;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "not a number: '" + std::string(s) + "'");
  }
  return x;
}

}  // namespace

Trace read_trace_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    auto cells = split(line);
    if (header.empty()) {
      for (auto c : cells) {
        if (c.empty()) throw ParseError(lineno, "empty column name");
        header.emplace_back(c);
      }
      continue;
    }
    if (cells.size() != header.size()) {
      throw ParseError(lineno, "expected " + std::to_string(header.size()) + " columns, got " +
                                   std::to_string(cells.size()));
    }
    std::vector<double> row;
    for (auto c : cells) row.push_back(parse_value(c, lineno));
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw ParseError(lineno, "missing header row");
  if (rows.empty()) throw ParseError(lineno, "trace has no samples");
  return Trace::from_rows(std::move(header), rows);
}

Trace read_trace_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_trace_csv(in);
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  const auto& vars = trace.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
  out << '\n';
  for (const auto& v : trace.samples()) {
    for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << format_number(v.at(vars[i]));
    out << '\n';
  }
}

}  // namespace arv
