#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arv/error.hpp"
#include "arv/random.hpp"
#include "arv/trace_io.hpp"

using namespace arv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = 0;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("arv_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(ARV_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::ostringstream s;
  s << in.rdbuf();
  r.out = s.str();
  return r;
}

std::string data(const char* name) { return std::string(ARV_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("csv round-trip is value-identical") {
  random::Rng rng(97);
  for (int i = 0; i < 50; ++i) {
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    std::vector<std::vector<double>> rows(1 + i % 7, std::vector<double>(3));
    for (auto& r : rows) {
      for (auto& v : r) v = u(rng);
    }
    const auto t = Trace::from_rows({"a", "b", "speed"}, rows);
    std::stringstream buf;
    write_trace_csv(buf, t);
    CHECK(read_trace_csv(buf) == t);
  }
}

TEST_CASE("csv ingestion") {
  std::istringstream ok("x, y\n\n1, 2.5\n-3e1,4\r\n\n");
  const auto t = read_trace_csv(ok);
  CHECK(t.size() == 2);
  CHECK(t[1].at("x") == -30);
  std::istringstream ragged("x,y\n1\n");
  CHECK_THROWS_AS(read_trace_csv(ragged), ParseError);
  std::istringstream bad("x\n1,5\n");
  CHECK_THROWS_AS(read_trace_csv(bad), ParseError);
  std::istringstream word("x\nabc\n");
  CHECK_THROWS_AS(read_trace_csv(word), ParseError);
  std::istringstream empty("x\n");
  CHECK_THROWS_AS(read_trace_csv(empty), ParseError);
}

TEST_CASE("monitor") {
  const auto r = run("monitor --spec " + data("psi5.stl") + " --trace " + data("a.csv") + " --semiring minmax --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"rho\":\"-inf\"") != std::string::npos);

  const auto series = run("monitor --spec " + data("phi1.stl") + " --trace " + data("xy.csv") +
                          " --semiring tropical --mode prefix-series");
  CHECK(series.status == 0);
  CHECK(series.out.rfind("t,rho,satisfied\n", 0) == 0);
  CHECK(std::count(series.out.begin(), series.out.end(), '\n') == 5);

  const auto file = scratch() / "series.csv";
  CHECK(run("monitor --spec " + data("phi1.stl") + " --trace " + data("xy.csv") + " --prefix-series " + file.string())
            .status == 0);
  CHECK(fs::exists(file));

  const auto text = run("monitor --spec " + data("phi1.stl") + " --trace " + data("xy.csv") + " --semiring boolean");
  CHECK(text.out.find("rho = -1 (violated)") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto bad = write("bad.stl", "F(x <= )\n");
  CHECK(run("monitor --spec " + bad.string() + " --trace " + data("xy.csv")).status == 2);
  const auto unbound = write("z.stl", "G(z <= 1)\n");
  CHECK(run("monitor --spec " + unbound.string() + " --trace " + data("xy.csv")).status == 3);
  const auto past = write("past.stl", "F(Y(x <= 3))\n");
  CHECK(run("monitor --spec " + past.string() + " --trace " + data("xy.csv")).status == 4);
  CHECK(run("translate --spec " + past.string()).status == 4);
  CHECK(run("monitor --spec /nonexistent.stl --trace " + data("xy.csv")).status == 1);
}

TEST_CASE("translate") {
  const auto dot = scratch() / "phi1.dot";
  const auto json = scratch() / "phi1.json";
  CHECK(run("translate --spec " + data("phi1.stl") + " --dot " + dot.string() + " --json " + json.string()).status == 0);
  std::ifstream in(dot);
  std::ostringstream s;
  s << in.rdbuf();
  const auto text = s.str();
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = text.find("shape=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 3);
  CHECK(fs::exists(json));
}

TEST_CASE("fixtures, oracle and vpd") {
  const auto f = run("fixtures");
  CHECK(f.status == 0);
  CHECK(f.out.find("FAIL") == std::string::npos);
  const auto o = run("oracle --vpd-cases 100 --path-cases 50 --distance-cases 30");
  CHECK(o.status == 0);
  CHECK(o.out.find("total mismatches: 0") != std::string::npos);
  CHECK(run("vpd --predicate 'x <= 3 && x <= 5' --valuation x=6").out == "x <= 3 -> 3\n");
  CHECK(run("vpd --predicate 'x <= 3 && x <= 5' --valuation x=6 --raw").out == "x <= 3 && x <= 5 -> 4\n");
}
