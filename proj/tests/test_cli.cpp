#include <doctest.h>

#include <unistd.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtomo/cli.hpp"
#include "oracles.hpp"

using Json = nlohmann::json;

namespace {

const std::filesystem::path kFixtures = GTOMO_FIXTURE_DIR;

std::string fixture(const char* name) { return "'" + (kFixtures / name).string() + "'"; }

oracle::Command cli_run(const std::string& args) {
  return oracle::run(std::string("'") + GTOMO_CLI + "' " + args + " 2>/dev/null");
}

Json parse(const oracle::Command& c) { return Json::parse(c.out); }

std::vector<double> reals(const Json& a) { return a.get<std::vector<double>>(); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("gtomo_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const char* name) const { return "'" + (path / name).string() + "'"; }
};

}  // namespace

TEST_CASE("naimark check on the S3 character") {
  oracle::Command c = cli_run("naimark check " + fixture("chi2.json"));
  CHECK(c.exit_code == 0);
  Json j = parse(c);
  CHECK(j["verdict"] == "positive");
  std::vector<double> ev = reals(j["eigenvalues"]);
  const double expected[6] = {0, 0, 3, 3, 3, 3};
  REQUIRE(ev.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(std::abs(ev[k] - expected[k]) < 1e-9);
}

TEST_CASE("group validate") {
  oracle::Command ok = cli_run("group validate " + fixture("s3.json"));
  CHECK(ok.exit_code == 0);
  CHECK(parse(ok)["valid"] == true);
  CHECK(parse(ok)["inverses"] == Json::parse("[1, 3, 2, 4, 5, 6]"));

  TempDir tmp;
  std::ofstream(tmp.path / "bad.json") << R"({"name": "bad", "order": 3, "mul_table": [[1,2,3],[2,3,1],[3,1,1]]})";
  oracle::Command bad = cli_run("group validate " + (tmp / "bad.json"));
  CHECK(bad.exit_code == 1);
  Json j = parse(bad);
  CHECK(j["valid"] == false);
  CHECK(j["axiom"] == "latin square");
}

TEST_CASE("tomogram invert") {
  SUBCASE("outside the ball") {
    oracle::Command c = cli_run("tomogram invert " + fixture("tau_r1.21.json") + " --irrep D2");
    CHECK(c.exit_code == 1);
    Json j = parse(c);
    CHECK(j["verdict"] == "indefinite");
    CHECK(j["compatible"] == true);
    CHECK(j["hermitian"] == true);
    CHECK_FALSE(j.contains("recovered_state"));
  }
  SUBCASE("inside the ball") {
    oracle::Command c =
        cli_run("tomogram invert " + fixture("tau_r0.50.json") + " --irrep D2 --registry '" + kFixtures.string() + "'");
    CHECK(c.exit_code == 0);
    Json j = parse(c);
    CHECK(j["verdict"] == "tomogram");
    REQUIRE(j.contains("recovered_state"));
    CHECK(j["off_block_weight"].get<double>() < 1e-12);
    // r = 0.5 along (1,1,1)/sqrt3: diagonal (1 +- z)/2 with z = 0.5/sqrt3.
    const double z = 0.5 / std::sqrt(3.0);
    CHECK(j["recovered_state"][0][0][0].get<double>() == doctest::Approx((1 + z) / 2));
  }
  SUBCASE("incompatible") {
    oracle::Command c = cli_run("tomogram invert " + fixture("tau_incompatible.json") + " --irrep D2");
    CHECK(c.exit_code == 1);
    CHECK(parse(c)["verdict"] == "incompatible");
  }
}

TEST_CASE("tomogram compute and reconstruct round trip") {
  TempDir tmp;
  oracle::Command w = cli_run("tomogram compute " + fixture("bloch_mixed.json") + " --irrep D2 -o " + (tmp / "W.json"));
  REQUIRE(w.exit_code == 0);
  oracle::Command r = cli_run("tomogram reconstruct " + (tmp / "W.json") + " --irrep D2");
  REQUIRE(r.exit_code == 0);
  Json j = parse(r);
  const Json& m = j["matrix"];
  const oracle::CMatrix expected = oracle::bloch(0.3, -0.2, 0.5);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(std::abs(m[a][b][0].get<double>() - expected(a, b).real()) < 1e-10);
      CHECK(std::abs(m[a][b][1].get<double>() - expected(a, b).imag()) < 1e-10);
    }

  oracle::Command csv = cli_run("tomogram compute " + fixture("bloch_mixed.json") + " --irrep D2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("element,w1,w2\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 7);
}

TEST_CASE("algebra and irrep subcommands") {
  // chi * chi = (K / n) chi for an irreducible character.
  oracle::Command c = cli_run("algebra convolve " + fixture("chi2.json") + " " + fixture("chi2.json"));
  CHECK(c.exit_code == 0);
  Json v = parse(c)["values"];
  const double chi[6] = {2, -1, -1, 0, 0, 0};
  for (int g = 0; g < 6; ++g) CHECK(std::abs(v[g][0].get<double>() - 3 * chi[g]) < 1e-12);

  CHECK(cli_run("algebra unitary-solve " + fixture("z2_targets.json") + " " + fixture("z2_irreps.json")).exit_code == 0);
  CHECK(cli_run("irrep check " + fixture("s3_D2.json")).exit_code == 0);
  oracle::Command e = cli_run("irrep expand " + fixture("chi2.json") + " --registry '" + kFixtures.string() + "'");
  CHECK(e.exit_code == 0);
  CHECK(cli_run("naimark gns " + fixture("chi2.json") + " --irrep D2").exit_code == 0);
}

TEST_CASE("compact groups") {
  TempDir tmp;
  REQUIRE(cli_run("su2 tomogram " + fixture("spin1.json") + " --j 1 -o " + (tmp / "W.json")).exit_code == 0);
  oracle::Command r = cli_run("su2 reconstruct " + (tmp / "W.json") + " --j 1");
  REQUIRE(r.exit_code == 0);
  Json m = parse(r)["matrix"];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(std::abs(m[a][b][0].get<double>() - (a == b ? 1.0 / 3 : 0.0)) < 1e-10);

  // A grid too coarse for J = 2j is a numerical failure.
  CHECK(cli_run("su2 tomogram " + fixture("spin1.json") + " --j 1 --grid-order 1").exit_code == 3);

  oracle::Command s = cli_run("su3 tomogram " + fixture("qutrit.json") + " --params " + fixture("su3_params.json"));
  CHECK(s.exit_code == 0);
  std::vector<double> W = reals(parse(s)["W"]);
  CHECK(std::abs(W[0] + W[1] + W[2] - 1.0) < 1e-12);
}

TEST_CASE("usage errors") {
  CHECK(cli_run("").exit_code == 2);
  CHECK(cli_run("frobnicate").exit_code == 2);
  CHECK(cli_run("naimark check " + fixture("missing.json")).exit_code == 2);
  CHECK(cli_run("--tolerance -1 naimark check " + fixture("chi2.json")).exit_code == 2);
  CHECK(cli_run("tomogram compute " + fixture("bloch_z.json") + " --irrep D9").exit_code == 2);
}

TEST_CASE("identical inputs give byte-identical output") {
  TempDir tmp;
  const std::string cmd = "tomogram invert " + fixture("tau_r1.21.json") + " --irrep D2 --seed 7";
  oracle::Command a = cli_run(cmd), b = cli_run(cmd);
  CHECK(a.out == b.out);
  cli_run(cmd + " -o " + (tmp / "out.json"));
  std::ifstream in(tmp.path / "out.json");
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == a.out);

  // The in-process entry point prints the same document.
  std::ostringstream out, err;
  const std::string path = (kFixtures / "tau_r1.21.json").string();
  const char* argv[] = {"gtomo", "tomogram", "invert", path.c_str(), "--irrep", "D2", "--seed", "7"};
  CHECK(gtomo::cli::run(8, argv, out, err) == 1);
  CHECK(out.str() == a.out);
}
