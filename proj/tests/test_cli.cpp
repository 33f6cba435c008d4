#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/spawn.hpp"
#include "trisphere/report.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using trisphere::testing::run_command;

namespace {

std::string g_cli;
fs::path g_scratch;

std::string cli(const std::string& args) { return g_cli + " " + args; }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("represent: exit codes follow the contract") {
  const auto found = run_command(cli("represent 3 --ring eisenstein"));
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("3 = N(") != std::string::npos);

  const auto absent = run_command(cli("represent 5 --ring eisenstein"));
  CHECK(absent.exit_code == 2);
  CHECK(absent.output.find("no representation (5 ≡ 2 mod 3)") != std::string::npos);

  const auto absent4 = run_command(cli("represent 7 --ring gaussian"));
  CHECK(absent4.exit_code == 2);
  CHECK(absent4.output.find("7 ≡ 3 mod 4") != std::string::npos);

  const auto composite = run_command(cli("represent 9 --ring eisenstein"));
  CHECK(composite.exit_code == 1);
  CHECK(composite.output.find("prime") != std::string::npos);

  const auto bad_ring = run_command(cli("represent 5 --ring quaternion"));
  CHECK(bad_ring.exit_code == 1);
}

TEST_CASE("represent: machine output") {
  const auto result = run_command(cli("represent 13 --ring gaussian --json"));
  REQUIRE(result.exit_code == 0);
  const json j = json::parse(result.output);
  CHECK(j["p"] == 13);
  CHECK(j["ring"] == "gaussian");
  const long c = j["witness"][0].get<long>();
  const long d = j["witness"][1].get<long>();
  CHECK(c * c + d * d == 13);
  CHECK(j["norm_check"] == true);
  CHECK(j["certificate"]["conjugator"].size() == 4);
}

TEST_CASE("triangles listing") {
  const auto orbits = run_command(cli("triangles 3 --orbits"));
  CHECK(orbits.exit_code == 0);
  CHECK(orbits.output.find("2 triangles") != std::string::npos);
  std::size_t fixed = 0;
  for (std::size_t pos = orbits.output.find("FIXED"); pos != std::string::npos;
       pos = orbits.output.find("FIXED", pos + 5))
    ++fixed;
  CHECK(fixed == 2);

  const auto plain = run_command(cli("triangles 7"));
  CHECK(plain.exit_code == 0);
  CHECK(plain.output.find("10 triangles") != std::string::npos);

  CHECK(run_command(cli("triangles 2")).exit_code == 1);
  CHECK(run_command(cli("triangles 15")).exit_code == 1);
}

TEST_CASE("verify writes parseable artifacts") {
  const fs::path dir = g_scratch / "verify30";
  const auto result = run_command(cli("verify --max 30 --out " + dir.string()));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("all checks passed") != std::string::npos);

  const auto rows = trisphere::parse_csv(slurp(dir / "verify_report.csv"));
  CHECK(rows.size() == 2 * 10);  // ten primes ≤ 30, two rings each

  const json summary = json::parse(slurp(dir / "verify_summary.json"));
  CHECK(summary["all_passed"] == true);
  CHECK(summary["p_max"] == 30);

  CHECK(run_command(cli("verify --max 2")).exit_code == 1);
}

TEST_CASE("render produces stable svg files") {
  const fs::path a = g_scratch / "p3a.svg";
  const fs::path b = g_scratch / "p3b.svg";
  CHECK(run_command(cli("render 3 --out " + a.string())).exit_code == 0);
  CHECK(run_command(cli("render 3 --out " + b.string())).exit_code == 0);
  const std::string bytes = slurp(a);
  CHECK(bytes.rfind("<?xml", 0) == 0);
  CHECK(bytes == slurp(b));

  const fs::path w = g_scratch / "p5w.svg";
  CHECK(run_command(cli("render 5 --out " + w.string() + " --window 1/2 3/2 --den-limit 8"))
            .exit_code == 0);
  CHECK(slurp(w).find("window=[1/2,3/2]") != std::string::npos);

  CHECK(run_command(cli("render 4 --out " + (g_scratch / "bad.svg").string())).exit_code == 1);
  CHECK(run_command(cli("render 5 --out /nonexistent-dir/x.svg")).exit_code == 1);
  CHECK(run_command(cli("render 5 --out " + w.string() + " --window 1 1")).exit_code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run_command(g_cli).exit_code == 1);
  CHECK(run_command(cli("frobnicate")).exit_code == 1);
  CHECK(run_command(cli("--version")).exit_code == 0);
  CHECK(run_command(cli("--help")).exit_code == 0);
}

int main(int argc, char** argv) {
  std::vector<char*> doctest_args;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      g_cli = argv[++i];
    } else if (arg == "--scratch" && i + 1 < argc) {
      g_scratch = argv[++i];
    } else {
      doctest_args.push_back(argv[i]);
    }
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli <path-to-binary> --scratch <dir>\n");
    return 1;
  }
  if (g_scratch.empty()) g_scratch = fs::temp_directory_path() / "trisphere_cli_tests";
  fs::create_directories(g_scratch);

  doctest::Context context(static_cast<int>(doctest_args.size()), doctest_args.data());
  return context.run();
}
