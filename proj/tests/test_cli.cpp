#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acp/cli.hpp"
#include "acp/enumerate.hpp"
#include "acp/histogram_io.hpp"
#include "acp/localglobal.hpp"
#include "acp/orbits.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = acp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("acp_cli_" + name); }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == acp::cli::kExitUsage);
  CHECK(run({"bogus"}).code == acp::cli::kExitUsage);
  const auto r = run({"orbit", "--mod", "3", "--frobnicate"});
  CHECK(r.code == acp::cli::kExitUsage);
  CHECK(!r.err.empty());
  CHECK(run({"orbit"}).code == acp::cli::kExitUsage);
  CHECK(run({"--root", "-2,4,4,6", "residues"}).code == acp::cli::kExitUsage);
  CHECK(run({"--root", "nonsense", "residues"}).code == acp::cli::kExitUsage);
  CHECK(run({"--memory-budget", "12Q", "exceptions", "--lo", "1", "--hi", "9"}).code ==
        acp::cli::kExitUsage);
  CHECK(run({"hist-summary", temp("missing.acph").string(), "--residue", "2"}).code ==
        acp::cli::kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == acp::cli::kExitOk);
  CHECK(help.out.find("exceptions") != std::string::npos);
}

TEST_CASE("capacity and arithmetic errors") {
  CHECK(run({"orbit", "--mod", "20000"}).code == acp::cli::kExitCapacity);
  CHECK(run({"--memory-budget", "1K", "hist", "--lo", "1", "--hi", "100000", "--out",
             temp("cap.acph").string()})
            .code == acp::cli::kExitCapacity);
  CHECK(run({"stats", "--bound", "4294967296", "--checkpoints", "2"}).code ==
        acp::cli::kExitCapacity);
}

TEST_CASE("orbit and residues") {
  const auto r = run({"--root", "coins", "orbit", "--mod", "24"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["modulus"] == 24);
  CHECK(j["size"] == 40);
  CHECK(j["states"].size() == 40);
  CHECK(j["states"][0].size() == 4);
  CHECK(j["gamma"]["13"] == "3/10");
  CHECK(j["admissible"] == json::array({0, 4, 12, 13, 16, 21}));

  const auto three = json::parse(run({"orbit", "--mod", "3"}).out);
  CHECK(three["size"] == 10);

  const auto res = json::parse(run({"residues"}).out);
  CHECK(res["root"] == json::array({-1, 2, 2, 3}));
  CHECK(res["gamma"]["2"] == "3/20");
  CHECK(res["gamma"]["0"] == "0/1");
  CHECK(res["admissible"] == json::array({2, 3, 6, 11, 14, 15, 18, 23}));

  // Presets equal their literal quadruples.
  CHECK(run({"--root", "-11,21,24,28", "residues"}).out == run({"--root", "coins", "residues"}).out);
}

TEST_CASE("stats") {
  const auto path = temp("stats.csv");
  const auto r = run({"--root", "bugeye", "stats", "--bound", "100000", "--checkpoints", "5",
                      "--out", path.string()});
  REQUIRE(r.code == 0);
  const std::string csv = slurp(path);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,N,psi,pi,psi2,ratio_psi,ratio_psi2_over_3N");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 5);
  CHECK(last.rfind("100000,", 0) == 0);
  fs::remove(path);

  // Thread count does not change the output.
  const auto a = run({"stats", "--bound", "200000", "--checkpoints", "4"});
  const auto b = run({"--threads", "3", "stats", "--bound", "200000", "--checkpoints", "4"});
  std::istringstream sa(a.out), sb(b.out);
  std::string la, lb;
  while (std::getline(sa, la) && std::getline(sb, lb)) {
    // x and N are integers and must match exactly; the float columns may
    // differ in the last printed digit from summation order.
    CHECK(la.substr(0, la.find(',', la.find(',') + 1)) == lb.substr(0, lb.find(',', lb.find(',') + 1)));
  }
}

TEST_CASE("exceptions") {
  const auto r = run({"exceptions", "--lo", "1", "--hi", "1000000"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& ex = j["exceptions"];
  CHECK(std::find(ex.begin(), ex.end(), 13806) != ex.end());
  CHECK(j["by_residue"].contains("6"));

  const auto six = json::parse(run({"exceptions", "--lo", "1", "--hi", "100000", "--residue", "6"}).out);
  CHECK(six["by_residue"].size() == 1);
  CHECK(run({"exceptions", "--lo", "1", "--hi", "100", "--residue", "30"}).code ==
        acp::cli::kExitUsage);
}

TEST_CASE("hist and hist-summary round trip") {
  const auto path = temp("h.acph");
  REQUIRE(run({"hist", "--lo", "100000", "--hi", "300000", "--out", path.string()}).code == 0);
  const auto h = acp::load_acph(path);
  CHECK(h == acp::histogram(acp::bugeye(), 100000, 300000));

  const auto r = run({"hist-summary", path.string(), "--residue", "2"});
  REQUIRE(r.code == 0);
  const auto d = acp::frequency_distribution(h, 2);
  std::ostringstream expected;
  expected << "m,count\n";
  for (const auto& [m, c] : d.delta) expected << m << ',' << c << '\n';
  CHECK(r.out.rfind(expected.str(), 0) == 0);
  CHECK(r.out.find("mean,variance,predicted_mean\n") != std::string::npos);
  std::istringstream tail(r.out.substr(r.out.find("predicted_mean\n") + 15));
  double mean = 0, var = 0, pred = 0;
  char comma;
  tail >> mean >> comma >> var >> comma >> pred;
  CHECK(mean == doctest::Approx(d.mean).epsilon(1e-11));
  CHECK(var == doctest::Approx(d.variance).epsilon(1e-11));
  CHECK(pred == doctest::Approx(acp::predicted_mean(acp::bugeye(), 2, 100000, 300000)).epsilon(1e-11));
  fs::remove(path);
}

TEST_CASE("constants") {
  const auto r = run({"constants", "--tol", "1e-12"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["L2chi4"].get<double>() - 0.915965594177219) < 1e-12);
  CHECK(std::abs(j["c"].get<double>() - 1.6493376891) < 1e-9);
  CHECK(j["c_error"].get<double>() < 1e-11);
  CHECK(j["alpha"].get<double>() == doctest::Approx(0.46126).epsilon(1e-4));
  CHECK(j["delta"].get<double>() == 1.30568);
  CHECK(run({"constants", "--tol", "1e-20"}).code == acp::cli::kExitUsage);
}

TEST_CASE("render") {
  const auto path = temp("b.svg");
  REQUIRE(run({"render", "--max", "10", "--out", path.string()}).code == 0);
  const std::string svg = slurp(path);
  int circles = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 9);
  fs::remove(path);
  const auto plain = run({"--root", "coins", "render", "--max", "65", "--no-labels", "--stroke", "red"});
  CHECK(plain.out.find("<text") == std::string::npos);
  CHECK(plain.out.find("stroke=\"red\"") != std::string::npos);
}

TEST_CASE("fit") {
  const auto r = run({"fit", "--xs", "10000,100000,1000000"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["samples"].size() == 3);
  CHECK(j["samples"][0][1] == acp::count_circles(acp::bugeye(), 10000));
  CHECK(std::abs(j["delta"].get<double>() - 1.30568) < 0.05);
  CHECK(run({"fit", "--xs", "100,1000"}).code == acp::cli::kExitUsage);
}
