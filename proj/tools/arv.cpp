#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "arv/error.hpp"
#include "arv/fixtures.hpp"
#include "arv/monitor.hpp"
#include "arv/parser.hpp"
#include "arv/serialize.hpp"
#include "arv/suites.hpp"
#include "arv/trace_io.hpp"

namespace {

using namespace arv;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kUnbound = 3, kUnsupported = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  // Write to a sibling file first so readers never see a partial result.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot write '" + path + "'");
}

nlohmann::json number_json(double x) {
  if (x == Interval::kInf) return "inf";
  if (x == -Interval::kInf) return "-inf";
  return x;
}

Semiring semiring_arg(const std::string& name) {
  auto s = semiring_from_name(name);
  if (!s) throw Error("unknown semiring '" + name + "'");
  return *s;
}

PointwiseDistance distance_arg(const std::string& name, const Semiring& s) {
  if (name.empty()) return default_distance(s);
  if (name == "discrete") return PointwiseDistance::Discrete01;
  if (name == "abs") return PointwiseDistance::AbsDiff;
  throw Error("unknown distance '" + name + "'");
}

void check_bound(const Spec& spec, const Trace& trace) {
  const auto vars = spec.is_stl() ? variables_of(spec.stl()) : variables_of(spec.sre());
  for (const auto& v : vars) {
    if (std::find(trace.variables().begin(), trace.variables().end(), v) == trace.variables().end()) {
      throw UnboundVariable(v);
    }
  }
}

struct MonitorArgs {
  std::string spec;
  std::vector<std::string> traces;
  std::string semiring = "tropical";
  std::string distance;
  std::string mode = "final";
  std::string prefix_series;
  bool json = false;
  bool deterministic = false;
};

int cmd_monitor(const MonitorArgs& args) {
  const Spec spec = parse_spec(read_file(args.spec));
  const Semiring s = semiring_arg(args.semiring);
  const RobustnessMonitor monitor(spec, s, distance_arg(args.distance, s), {args.deterministic});
  const bool series = args.mode == "prefix-series" || !args.prefix_series.empty();
  for (const auto& path : args.traces) {
    const Trace trace = read_trace_csv_file(path);
    check_bound(spec, trace);
    if (series) {
      std::ostringstream csv;
      csv << "t,rho,satisfied\n";
      for (const auto& p : monitor.prefix_series(trace)) {
        csv << p.t << ',' << format_number(p.rho) << ',' << (p.satisfied ? "true" : "false") << '\n';
      }
      if (args.prefix_series.empty()) {
        std::cout << csv.str();
      } else {
        std::string out = args.prefix_series;
        if (args.traces.size() > 1) out += "." + std::to_string(&path - args.traces.data());
        write_file(out, csv.str());
      }
      continue;
    }
    const auto verdict = monitor.evaluate(trace);
    if (args.json) {
      nlohmann::json j{{"trace", path},
                       {"semiring", std::string(s.name())},
                       {"rho", number_json(verdict.rho)},
                       {"satisfied", verdict.satisfied},
                       {"d_phi", number_json(verdict.d_phi.value)},
                       {"d_not_phi", number_json(verdict.d_not_phi.value)}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << path << ": rho = " << format_number(verdict.rho) << " ("
                << (verdict.satisfied ? "satisfied" : "violated") << "), d_phi = " << format_number(verdict.d_phi.value)
                << ", d_not_phi = " << format_number(verdict.d_not_phi.value) << '\n';
    }
  }
  return kOk;
}

struct TranslateArgs {
  std::string spec;
  std::string dot;
  std::string json;
  bool complement = false;
};

int cmd_translate(const TranslateArgs& args) {
  const Spec spec = parse_spec(read_file(args.spec));
  const auto raw = args.complement ? complement_automaton(spec) : spec_automaton(spec);
  // Guards are shown ∧-minimized, as the monitors use them.
  const auto a = decorate(raw, Semiring::boolean()).base();
  if (!args.dot.empty()) write_file(args.dot, to_dot(a));
  if (!args.json.empty()) write_file(args.json, to_json(a));
  if (args.dot.empty() && args.json.empty()) std::cout << to_dot(a);
  std::cerr << a.num_locations() << " locations, " << a.transitions().size() << " transitions\n";
  return kOk;
}

int cmd_oracle(std::uint64_t seed, std::size_t vpd_cases, std::size_t path_cases, std::size_t distance_cases) {
  std::size_t total = 0;
  for (const Semiring s : {Semiring::boolean(), Semiring::minmax(), Semiring::tropical()}) {
    const std::pair<const char*, suites::SuiteResult> runs[] = {
        {"vpd vs grid", suites::vpd_suite(seed, vpd_cases, s)},
        {"val vs paths", suites::path_suite(seed, path_cases, s)},
        {"val vs trace distance", suites::distance_suite(seed, distance_cases, s)},
    };
    for (const auto& [name, r] : runs) {
      std::cout << std::left << std::setw(10) << s.name() << std::setw(24) << name << r.cases << " cases, "
                << r.mismatches << " mismatches\n";
      if (r.first_mismatch) std::cout << "  first mismatch: " << *r.first_mismatch << '\n';
      total += r.mismatches;
    }
  }
  std::cout << "total mismatches: " << total << '\n';
  return total == 0 ? kOk : kFailure;
}

int cmd_fixtures() {
  bool all = true;
  auto cell = [&](double got, double want) {
    const bool ok = got == want;
    all = all && ok;
    std::ostringstream s;
    s << format_number(got) << (ok ? "" : "(!=" + format_number(want) + ")");
    return s.str();
  };

  const auto a = fixtures::example_automaton();
  const auto trace = fixtures::example_trace();
  for (const auto& table : fixtures::example_tables()) {
    const auto w = decorate(a, table.semiring);
    ValStream stream(w);
    std::vector<std::vector<double>> got(a.num_locations());
    for (Location q = 0; q < a.num_locations(); ++q) got[q].push_back(stream.costs().cost[q].value);
    for (const auto& v : trace.samples()) {
      stream.step(v);
      for (Location q = 0; q < a.num_locations(); ++q) got[q].push_back(stream.costs().cost[q].value);
    }
    std::cout << table.semiring.name() << '\n';
    bool ok = true;
    for (Location q = 0; q < a.num_locations(); ++q) {
      std::cout << "  q" << q << ':';
      for (std::size_t i = 0; i < got[q].size(); ++i) {
        std::cout << ' ' << cell(got[q][i], table.rows[q][i]);
        ok = ok && got[q][i] == table.rows[q][i];
      }
      std::cout << '\n';
    }
    const double final_value = stream.value().value;
    const double oracle = path_oracle(trace, w).value;
    ok = ok && final_value == table.final_value && oracle == final_value;
    all = all && ok;
    std::cout << "  val = " << cell(final_value, table.final_value) << ", path oracle = " << format_number(oracle)
              << "  " << (ok ? "PASS" : "FAIL") << '\n';
  }

  const Valuation v{{"x", 6}};
  const auto raw = to_dnf(parse_predicate("x <= 3 && x <= 5"));
  const auto raw_value = vpd(v, raw, Semiring::tropical(), PointwiseDistance::AbsDiff, {true}).value;
  const auto min_value = vpd(v, wedge_minimize(raw), Semiring::tropical(), PointwiseDistance::AbsDiff).value;
  const bool ok = raw_value == 4 && min_value == 3;
  all = all && ok;
  std::cout << "tropical vpd at x = 6: raw " << format_number(raw_value) << ", minimized " << format_number(min_value)
            << "  " << (ok ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kFailure;
}

int cmd_vpd(const std::string& predicate, const std::vector<std::string>& bindings, const std::string& semiring,
            const std::string& distance, bool raw) {
  const Semiring s = semiring_arg(semiring);
  Valuation v;
  for (const auto& b : bindings) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw Error("expected name=value, got '" + b + "'");
    v.set(b.substr(0, eq), std::stod(b.substr(eq + 1)));
  }
  auto p = to_dnf(parse_predicate(predicate));
  if (!raw) p = wedge_minimize(p);
  const auto value = vpd(v, p, s, distance_arg(distance, s), {raw});
  std::cout << to_string(p) << " -> " << format_number(value.value) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiring-parametric robustness monitoring for STL and SRE"};
  app.require_subcommand(1);

  MonitorArgs monitor;
  auto* mon = app.add_subcommand("monitor", "Robustness of traces against a specification");
  mon->add_option("--spec", monitor.spec, "Specification file")->required();
  mon->add_option("--trace", monitor.traces, "Trace CSV file(s)")->required();
  mon->add_option("--semiring", monitor.semiring, "boolean | minmax | tropical")
      ->check(CLI::IsMember({"boolean", "minmax", "tropical"}));
  mon->add_option("--distance", monitor.distance, "discrete | abs (default: per semiring)")
      ->check(CLI::IsMember({"discrete", "abs"}));
  mon->add_option("--mode", monitor.mode, "final | prefix-series")->check(CLI::IsMember({"final", "prefix-series"}));
  mon->add_option("--prefix-series", monitor.prefix_series, "Write per-prefix robustness CSV here");
  mon->add_flag("--json", monitor.json, "Print the verdict as JSON");
  mon->add_flag("--deterministic", monitor.deterministic, "Determinize and use a single run");

  TranslateArgs translate;
  auto* tr = app.add_subcommand("translate", "Compile a specification to a symbolic automaton");
  tr->add_option("--spec", translate.spec, "Specification file")->required();
  tr->add_option("--dot", translate.dot, "Write Graphviz output here");
  tr->add_option("--json", translate.json, "Write JSON output here");
  tr->add_flag("--complement", translate.complement, "Translate the complement instead");

  std::uint64_t seed = 1;
  std::size_t vpd_cases = 1000, path_cases = 500, distance_cases = 200;
  auto* orc = app.add_subcommand("oracle", "Cross-check the dynamic programs against brute force");
  orc->add_option("--seed", seed, "Random seed");
  orc->add_option("--vpd-cases", vpd_cases);
  orc->add_option("--path-cases", path_cases);
  orc->add_option("--distance-cases", distance_cases);

  auto* fix = app.add_subcommand("fixtures", "Reproduce the worked examples");

  std::string predicate, semiring = "tropical", distance;
  std::vector<std::string> bindings;
  bool raw = false;
  auto* vp = app.add_subcommand("vpd", "Distance between a valuation and a predicate");
  vp->add_option("--predicate", predicate)->required();
  vp->add_option("--valuation", bindings, "name=value pairs")->required();
  vp->add_option("--semiring", semiring)->check(CLI::IsMember({"boolean", "minmax", "tropical"}));
  vp->add_option("--distance", distance)->check(CLI::IsMember({"discrete", "abs"}));
  vp->add_flag("--raw", raw, "Skip ∧-minimization (demonstration mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mon->parsed()) return cmd_monitor(monitor);
    if (tr->parsed()) return cmd_translate(translate);
    if (orc->parsed()) return cmd_oracle(seed, vpd_cases, path_cases, distance_cases);
    if (fix->parsed()) return cmd_fixtures();
    if (vp->parsed()) return cmd_vpd(predicate, bindings, semiring, distance, raw);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnbound;
  } catch (const UnsupportedFragment& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
