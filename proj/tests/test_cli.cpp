#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

const std::string& cache_dir() {
  static const std::string dir = [] {
    std::string tmpl = (std::filesystem::temp_directory_path() / "octoplane-cli-XXXXXX").string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    return tmpl;
  }();
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd = "OCTOPLANE_CACHE_DIR='" + cache_dir() + "' '" OCTOPLANE_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("--no-such-flag table").status == 2);
  CHECK(run("lie").status == 2);
  CHECK(run("lie so --algebra X").status == 2);
  CHECK(run("plane-axioms --algebra O --samples 0").status == 2);
  CHECK(run("jordan-info --element '{\"lambda\": [1]}'").status == 2);
}

TEST_CASE("algebra-check") {
  const auto r = run("--samples 20 --format json --no-timestamp algebra-check --algebra Os");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out).is_object());
}

TEST_CASE("lie with expectations") {
  CHECK(run("lie der-jordan --algebra O --gamma ++- --expect 'f4(-20)'").status == 0);
  CHECK(run("lie der-alg --algebra O --expect 'g2(2)'").status == 1);
  const auto e6 = run("--no-timestamp lie e6 --algebra Os --expect 'e6(6)'");
  REQUIRE(e6.status == 0);
  const auto j = nlohmann::json::parse(e6.out);
  CHECK(j.dump().find("\"dim\":78") != std::string::npos);
  CHECK(run("lie stabilizer --algebra O --parent f4 --point E11 --expect-dim 36").status == 0);
  CHECK(run("lie stabilizer --algebra O --parent f4 --point E11 --expect-dim 35").status == 1);
}

TEST_CASE("second run is served from the disk cache") {
  REQUIRE(run("--no-timestamp lie der-alg --algebra Os").status == 0);
  bool found = false;
  for (const auto& entry : std::filesystem::directory_iterator(cache_dir()))
    found = found || entry.path().extension() == ".json";
  CHECK(found);
  CHECK(run("--no-timestamp lie der-alg --algebra Os").out == run("--no-timestamp --no-cache lie der-alg --algebra Os").out);
}

TEST_CASE("plane-axioms over O passes") {
  const auto r = run("--samples 30 --format json --no-timestamp plane-axioms --algebra O");
  CHECK(r.status == 0);
}

TEST_CASE("classification table") {
  const auto csv = run("--format csv table");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.rfind("space,collineation,isometry,quadrangle_fixing,source\n", 0) == 0);
  CHECK(csv.out.find("OH2,E6(-14) [paper; not constructed],F4(-20),G2(-14)") != std::string::npos);
  CHECK(csv.out.find("OsH2,E6(2) [paper; not constructed],F4(4),G2(2)") != std::string::npos);

  const auto a = run("--format json --no-timestamp table"), b = run("--format json --no-timestamp table");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(nlohmann::json::parse(run("--format json table").out).contains("timestamp"));
}

TEST_CASE("audit-translation and jordan-info") {
  const auto audit = run("--format json --no-timestamp audit-translation");
  CHECK(audit.status == 0);
  CHECK(nlohmann::json::parse(audit.out)["consistent"] == true);
  const std::string zero = "[0, 0, 0, 0, 0, 0, 0, 0]";
  const auto info = run("--no-timestamp jordan-info --element '{\"lambda\": [1, 0, 0], \"x\": [" + zero + ", " + zero +
                        ", " + zero + "]}'");
  REQUIRE(info.status == 0);
  CHECK(info.out.find("rank 1") != std::string::npos);
}
