#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
};

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "lieloop_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run cli(const std::string& args) {
  auto out = scratch("stdout.txt");
  std::string cmd = std::string(LIELOOP_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("cli: list --algebra sl3R shows 35 subalgebras with parameter slots") {
  auto r = cli("list --algebra sl3R");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("sl3R: 35 subalgebras\n", 0) == 0);
  CHECK(lines(r.out) == 36);
  CHECK(r.out.find("sl3R.h1 params(c)") != std::string::npos);
}

TEST_CASE("cli: verify-prop Prop4 gives five matching rows") {
  auto r = cli("verify-prop Prop4");
  CHECK(r.status == 0);
  CHECK(lines(r.out) == 6);
  CHECK(r.out.find("summary: 5 match, 0 mismatch, 0 unknown") != std::string::npos);
  CHECK(cli("verify-prop --prop Prop4").out == r.out);
}

TEST_CASE("cli: mismatches exit with status 2") {
  CHECK(cli("verify-prop Prop9").status == 2);
  CHECK(cli("classify").status == 2);
}

TEST_CASE("cli: operational errors exit with status 1") {
  CHECK(cli("list --algebra sl9R").status == 1);
  CHECK(cli("verify-prop Prop99").status == 1);
  CHECK(cli("verify-prop Prop4 --out /nonexistent-dir/report.json").status == 1);
  CHECK(cli("verify-prop Prop4 --format yaml").status == 1);
  CHECK(cli("").status == 1);
  CHECK(cli("classify e1").status == 1);
}

TEST_CASE("cli: json reports are byte-identical across runs and follow the seed") {
  auto a = scratch("a.json"), b = scratch("b.json"), c = scratch("c.json");
  CHECK(cli("loop-check --samples 10 --format json --out " + a.string()).status == 0);
  CHECK(cli("loop-check --samples 10 --format json --out " + b.string()).status == 0);
  CHECK(cli("loop-check --samples 10 --seed 7 --format json --out " + c.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
  auto text = slurp(a);
  auto pos = text.find("\"suite\"");
  REQUIRE(pos != std::string::npos);
  for (const auto* key : {"\"case\"", "\"verdict\"", "\"expected\"", "\"match\"", "\"details\""}) {
    auto next = text.find(key, pos);
    CHECK(next != std::string::npos);
    pos = next;
  }
}

TEST_CASE("cli: classify given elements") {
  auto r = cli("classify --algebra su21 e1+e6 e7");
  CHECK(r.status == 0);
  CHECK(r.out.find("su21: e1+e6  verdict=Elliptic") != std::string::npos);
  CHECK(r.out.find("su21: e7  verdict=HyperbolicOrLoxodromic") != std::string::npos);
}

TEST_CASE("cli: witness table dumps and verifies from file") {
  auto table = scratch("witnesses.txt");
  CHECK(cli("dump --witnesses --out " + table.string()).status == 0);
  auto r = cli("verify-witnesses --table " + table.string());
  CHECK(r.status == 2);  // the printed typo rows are part of the table
  CHECK(r.out.find("sl3R.h32") != std::string::npos);
}

TEST_CASE("cli: structure constants dump") {
  auto r = cli("dump --algebra sl2R");
  CHECK(r.status == 0);
  CHECK_FALSE(r.out.empty());
}
