#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sumdiff/cli.hpp"

using namespace sumdiff;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sumdiff_test_" + name)).string();
}

}  // namespace

TEST_CASE("analyze prints the profile") {
  const CliRun r = run({"analyze", "0,2,3,4,7,11,12,14"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "MSTD sums=26 diffs=25");
  CHECK(r.out.find("card=8 diam=14 density=0.571") != std::string::npos);
  CHECK(run({"analyze", "1,3,5"}).out.find("symmetric about 6") != std::string::npos);
}

TEST_CASE("malformed set literals are usage errors with a position") {
  const CliRun r = run({"analyze", "1,2,x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 4") != std::string::npos);
  CHECK(run({"analyze", "3,1"}).code == 2);
  CHECK(run({"chain", "--method", "fill1", "--seed-set", "0,,2"}).code == 2);
}

TEST_CASE("chain reproduces the explicit table and verifies") {
  const CliRun r = run({"chain", "--method", "nonfill", "--steps", "7", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| A_7 | 84        | 83        | 23          | 42") != std::string::npos);
  CHECK(r.out.find("Limiting MSTD density: 0.500") != std::string::npos);
  CHECK(r.out.find("verification: PASS") != std::string::npos);
  CHECK(r.out.find("PASS no_fill_in") != std::string::npos);
}

TEST_CASE("chain with the Conway seed") {
  const CliRun r = run({"chain", "--method", "fill1", "--seed-set", "0,2,3,4,7,11,12,14", "--steps", "7", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A_7,1278,1277,423,639,2.024,3.057,0.662") != std::string::npos);
  CHECK(r.out.find("# Limiting MSTD density: 0.667") != std::string::npos);
}

TEST_CASE("chain defaults and method aliases") {
  const CliRun fill2 = run({"chain", "--method", "fill2", "--steps", "3", "--verify"});
  CHECK(fill2.code == 0);
  CHECK(fill2.out.find("note: A_1 Diameter: computed 19, published 16") != std::string::npos);
  const CliRun thm = run({"chain", "--method", "thm31", "--steps", "5", "--format", "json", "--verify"});
  CHECK(thm.code == 0);
  const json j = json::parse(thm.out);
  CHECK(j.at("method") == "NONFILL_FRINGE");
  CHECK(j.at("verification").at("passed") == true);
  const CliRun general = run({"chain", "--method", "fringe", "--L", "0,1,3,7", "--R", "0,1,2,4,7", "--n", "7",
                           "--mode", "generalized", "--steps", "5", "--verify"});
  CHECK(general.code == 0);
  CHECK(general.out.find("| A_1 | 30 ") != std::string::npos);
  CHECK(run({"chain", "--method", "fringe", "--L", "0,1,3,7", "--R", "0,1,2,4,7", "--n", "7", "--m", "8"}).code == 2);
}

TEST_CASE("chain usage errors") {
  CHECK(run({"chain", "--method", "fill2", "--n", "10", "--steps", "0"}).code == 2);
  CHECK(run({"chain", "--method", "fill3"}).code == 2);
  CHECK(run({"chain", "--format", "xml"}).code == 2);
  CHECK(run({"chain", "--method", "fill1", "--seed-set", "1,2,3"}).code == 2);
  CHECK(run({"chain", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("saved chains verify and render") {
  const std::string path = temp_path("chain.json");
  REQUIRE(run({"chain", "--method", "fill1", "--steps", "4", "--save", path}).code == 0);
  const CliRun v = run({"verify", path});
  CHECK(v.code == 0);
  const CliRun forced = run({"verify", path, "--no-fill-in"});
  CHECK(forced.code == 1);
  CHECK(forced.out.find("FAIL no_fill_in") != std::string::npos);
  const CliRun t = run({"table", path, "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out.find("A_2,33,35,16,17,2.000,1.214,0.941") != std::string::npos);

  // Report is identical after the JSON round trip.
  const std::string nf = temp_path("nonfill.json");
  REQUIRE(run({"chain", "--steps", "6", "--save", nf}).code == 0);
  const json saved = json::parse(cli::read_text(nf));
  const ChainRecord direct = nonfill_chain(6);
  CHECK(json::parse(run({"verify", nf, "--json"}).out) == verification_to_json(verify_chain(direct)));

  // Tampering is detected.
  json broken = saved;
  broken["steps"][2]["sums"] = 1;
  const std::string bad = temp_path("broken.json");
  std::ofstream(bad) << broken.dump();
  const CliRun b = run({"verify", bad});
  CHECK(b.code == 1);
  CHECK(b.out.find("FAIL profiles") != std::string::npos);

  CHECK(run({"verify", temp_path("missing.json")}).code == 2);
  std::ofstream(bad) << "{not json";
  CHECK(run({"table", bad}).code == 2);
  std::filesystem::remove(path);
  std::filesystem::remove(nf);
  std::filesystem::remove(bad);
}

TEST_CASE("search subcommands") {
  const CliRun d = run({"search", "diameter", "--max", "14"});
  CHECK(d.code == 0);
  CHECK(d.out.find("min MSTD diameter: 14") != std::string::npos);
  CHECK(d.out.find("  0,2,3,4,7,11,12,14") != std::string::npos);
  const CliRun c = run({"search", "cardinality", "--d-max", "16", "--card-max", "7", "--json"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out).at("mstd_count") == 0);
  const CliRun s1 = run({"search", "sample", "--n", "30", "--samples", "4000", "--seed", "42", "--json"});
  const CliRun s4 = run({"search", "--workers", "4", "sample", "--n", "30", "--samples", "4000", "--seed", "42", "--json"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s4.out);
  const CliRun seeds = run({"search", "seeds", "--n", "10"});
  CHECK(seeds.out.find("L=1,3,4,8,9 R=12,13,15,18,19,20") != std::string::npos);
  CHECK(run({"search", "diameter", "--max", "30"}).code == 2);
  CHECK(run({"search"}).code == 2);
}

TEST_CASE("growth and construct subcommands") {
  const CliRun g = run({"growth"});
  CHECK(g.code == 0);
  CHECK(g.out.find("Non-filling in | 11 | 18 | 4 | 8 | Linear") != std::string::npos);
  CHECK(run({"growth", "--steps", "2"}).code == 2);

  const CliRun c = run({"construct", R"({"theorem":"interval_plus_point","m":14,"p":17})"});
  CHECK(c.code == 0);
  CHECK(c.out.find("MDTS sums=33 diffs=35") != std::string::npos);
  const CliRun s = run({"construct", R"({"theorem":"symmetric_plus_point","m":19,"B":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,17,18],"Lstar":16,"k":2})"});
  CHECK(s.code == 0);
  CHECK(s.out.find("MSTD sums=126 diffs=125 card=39 diam=63") != std::string::npos);
  CHECK(run({"construct", R"({"theorem":"interval_plus_point","m":14,"p":15})"}).code == 2);
}

TEST_CASE("installed binary exit codes") {
  const char* exe = std::getenv("SUMDIFF_CLI");
  if (exe == nullptr) SKIP("SUMDIFF_CLI not set");
  const std::string base = std::string("\"") + exe + "\"";
  CHECK(std::system((base + " analyze 0,2,3,4,7,11,12,14 > /dev/null").c_str()) == 0);
  const int usage = std::system((base + " chain --method fill2 --n 10 --steps 0 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(usage) == 2);
}
