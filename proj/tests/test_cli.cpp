#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <map>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(HUNT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("hunt1 episodes are deterministic byte-for-byte") {
  REQUIRE(run_cli("hunt1 --treasure 100,37 --adversary perp --out cli_ep1.json") == 0);
  REQUIRE(run_cli("hunt1 --treasure 100,37 --adversary perp --out cli_ep2.json") == 0);
  CHECK(slurp("cli_ep1.json") == slurp("cli_ep2.json"));
  std::remove("cli_ep2.json");
}

TEST_CASE("hunt2 runs end to end and renders") {
  REQUIRE(run_cli("hunt2 --distance 12 --seed 2 --beta 4.712 --adversary random "
                  "--index-mode empirical --out cli_ep3.json") == 0);
  REQUIRE(run_cli("render --in cli_ep3.json --out cli_ep3.svg") == 0);
  std::string svg = slurp("cli_ep3.svg");
  CHECK(svg.find("<svg") == 0);
  std::remove("cli_ep3.json");
  std::remove("cli_ep3.svg");
}

TEST_CASE("render of the hunt1 episode is deterministic") {
  REQUIRE(run_cli("render --in cli_ep1.json --out cli_ep1a.svg") == 0);
  REQUIRE(run_cli("render --in cli_ep1.json --out cli_ep1b.svg") == 0);
  CHECK(slurp("cli_ep1a.svg") == slurp("cli_ep1b.svg"));
  std::remove("cli_ep1.json");
  std::remove("cli_ep1a.svg");
  std::remove("cli_ep1b.svg");
}

TEST_CASE("sweep writes a deterministic CSV with the documented columns") {
  std::string flags = "sweep --algo hunt1 --dmin 4 --dmax 16 --seeds 3 --adversary perp "
                      "--jobs 2 --out cli_sweep_a.csv";
  REQUIRE(run_cli(flags) == 0);
  REQUIRE(run_cli("sweep --algo hunt1 --dmin 4 --dmax 16 --seeds 3 --adversary perp "
                  "--jobs 1 --out cli_sweep_b.csv") == 0);
  std::string a = slurp("cli_sweep_a.csv"), b = slurp("cli_sweep_b.csv");
  CHECK(a == b);  // job count must not change the bytes
  CHECK(a.rfind("D,seed,cost,found,phases\n", 0) == 0);
  int lines = 0;
  for (char c : a) lines += c == '\n';
  CHECK(lines == 1 + 3 * 3);  // header + |{4,8,16}| x 3 seeds
  std::remove("cli_sweep_a.csv");
  std::remove("cli_sweep_b.csv");
}

TEST_CASE("exact index mode exits with the tile-budget code") {
  CHECK(run_cli("hunt2 --treasure 9,9 --beta 4.712 --index-mode exact") == 3);
}

TEST_CASE("bad flags exit nonzero") {
  CHECK(run_cli("hunt1 --treasure nonsense") != 0);
  CHECK(run_cli("definitely-not-a-subcommand") != 0);
}

TEST_CASE("baseline audit emits a witness and an area report") {
  REQUIRE(run_cli("baseline --audit --distance 10 --samples 262144 --out cli_audit.json") == 0);
  std::string text = slurp("cli_audit.json");
  CHECK(text.find("\"area_report\"") != std::string::npos);
  CHECK(text.find("\"witness\"") != std::string::npos);
  std::remove("cli_audit.json");
}

TEST_CASE("verify exits cleanly on a healthy build") {
  CHECK(run_cli("verify") == 0);
}

TEST_CASE("sweep CSV supports a subquadratic growth fit") {
  REQUIRE(run_cli("sweep --algo hunt2 --beta 4.712 --dmin 4 --dmax 64 --seeds 4 "
                  "--index-mode empirical --jobs 4 --out cli_fit.csv") == 0);
  std::ifstream in("cli_fit.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "D,seed,cost,found,phases");
  std::map<double, std::pair<double, int>> by_d;
  std::string line;
  while (std::getline(in, line)) {
    double d, cost;
    unsigned long seed;
    int found, phases;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lu,%lf,%d,%d", &d, &seed, &cost, &found, &phases) == 5);
    CHECK(found == 1);
    by_d[d].first += cost;
    by_d[d].second += 1;
  }
  REQUIRE(by_d.size() == 5);  // 4, 8, 16, 32, 64
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (const auto& [d, acc] : by_d) {
    double lx = std::log(d), ly = std::log(acc.first / acc.second);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    n += 1;
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope < 2.0);
  std::remove("cli_fit.csv");
}

TEST_CASE("the tolerance override is honoured end to end") {
  std::string cmd = std::string("ANGULAR_HUNT_EPS=1e-7 ") + HUNT_CLI_PATH +
                    " hunt1 --treasure 50,20 --adversary random --seed 4 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}
