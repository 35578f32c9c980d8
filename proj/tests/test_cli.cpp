// CLI layer: verb dispatch, formats, exit codes, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmw/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int rc;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = dmw::cli_main(std::move(args), out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> ls;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) ls.push_back(line);
  return ls;
}

// dim column of the CSV rows for a given n
std::vector<std::string> csv_dims_for_n(const std::string& csv, int n) {
  std::vector<std::string> dims;
  for (const std::string& line : lines_of(csv)) {
    std::string prefix = "tl," + std::to_string(n) + ",";
    if (line.rfind(prefix, 0) != 0) continue;
    std::vector<std::string> cells;
    std::istringstream is(line);
    std::string cell;
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 7);
    dims.push_back(cells[4]);
  }
  return dims;
}

}  // namespace

TEST_CASE("dims reproduces the reference tables (CLI round trip)") {
  auto r0 = run({"dims", "--family", "tl", "--n", "16", "--format", "csv"});
  CHECK(r0.rc == 0);
  CHECK(csv_dims_for_n(r0.out, 16) ==
        std::vector<std::string>{"1", "3432", "1429", "2211", "1260", "337",
                                 "103", "15", "1"});
  CHECK(csv_dims_for_n(r0.out, 8) ==
        std::vector<std::string>{"1", "28", "13", "7", "1"});

  auto r2 = run({"dims", "--family", "tl", "--n", "16", "--char", "2",
                 "--format", "csv"});
  CHECK(r2.rc == 0);
  CHECK(csv_dims_for_n(r2.out, 16) ==
        std::vector<std::string>{"1", "2187", "1093", "2211", "1245", "336",
                                 "103", "15", "1"});
  CHECK(csv_dims_for_n(r2.out, 8) ==
        std::vector<std::string>{"1", "27", "13", "7", "1"});

  auto text = run({"dims", "--family", "tl", "--n", "16"});
  CHECK(text.rc == 0);
  CHECK(text.out.find("k=2:3432") != std::string::npos);

  // byte determinism
  auto again = run({"dims", "--family", "tl", "--n", "16", "--format", "csv"});
  CHECK(again.out == r0.out);
  CHECK(r0.out.find("# schema_version=1") == 0);
}

TEST_CASE("dims is exact for TL only and validates the field") {
  auto r = run({"dims", "--family", "brauer", "--n", "4"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("Temperley-Lieb") != std::string::npos);
  CHECK(run({"dims", "--family", "tl", "--n", "4", "--char", "4"}).rc == 2);
}

TEST_CASE("enumerate counts, lists, and guards") {
  auto r = run({"enumerate", "--family", "tl", "--n", "4"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("14 elements") != std::string::npos);

  auto j = run({"enumerate", "--family", "tl", "--n", "4", "--elements",
                "--format", "json"});
  CHECK(j.rc == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["size"] == "14");
  CHECK(parsed["elements"].size() == 14);
  CHECK(parsed["elements"][0].get<std::string>().rfind("4;", 0) == 0);

  auto big = run({"enumerate", "--family", "partition", "--n", "6"});
  CHECK(big.rc == 3);
  CHECK(big.err.find("resource guard") != std::string::npos);
  CHECK(run({"enumerate", "--family", "nosuch", "--n", "3"}).rc == 2);
}

TEST_CASE("cells prints the eggbox shapes") {
  auto r = run({"cells", "--family", "tl", "--n", "4", "--format", "csv"});
  CHECK(r.rc == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 5);  // schema comment, header, three cells
  CHECK(ls[1] == "cell,width,size,l_classes,r_classes,h_size,has_idempotent");
  CHECK(ls[2] == "0,4,1,1,1,1,1");
  CHECK(ls[3] == "1,2,9,3,3,1,1");
  CHECK(ls[4] == "2,0,4,2,2,1,1");
}

TEST_CASE("gram emits the matrix and its rank") {
  auto r = run({"gram", "--family", "tl", "--n", "4", "--k", "2", "--char",
                "2", "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["rank"] == "3");
  CHECK(j["field"] == "F2");
  CHECK(j["matrix"] == json({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
  CHECK(run({"gram", "--family", "tl", "--n", "4"}).rc == 2);  // --k missing
  CHECK(run({"gram", "--family", "tl", "--n", "4", "--k", "1"}).rc == 2);
}

TEST_CASE("gap covers tl, prook, and cyclic groups") {
  auto inf = run({"gap", "--family", "tl", "--n", "2"});
  CHECK(inf.rc == 0);
  CHECK(inf.out.find("infinity") != std::string::npos);

  auto j = run({"gap", "--family", "tl", "--n", "8", "--format", "json"});
  json pj = json::parse(j.out);
  CHECK(pj["value"] == "7");
  CHECK(pj["status"] == "exact");

  auto cy = run({"gap", "--cyclic", "30"});
  CHECK(cy.out.find("= 1 ") != std::string::npos);
  auto fa = run({"gap", "--cyclic", "12", "--faithful"});
  CHECK(fa.out.find("= 4 ") != std::string::npos);
  auto fq = run({"gap", "--cyclic", "7", "--char", "2", "--format", "json"});
  CHECK(json::parse(fq.out)["value"] == "3");

  auto pr = run({"gap", "--family", "prook", "--n", "6"});
  CHECK(pr.out.find("= 6 ") != std::string::npos);
  CHECK(run({"gap", "--family", "brauer", "--n", "4"}).rc == 2);
  CHECK(run({"gap", "--n", "4"}).rc == 2);  // neither family nor cyclic

  auto ss = run({"gap", "--family", "tl", "--n", "8", "--semisimple",
                 "--truncate-low", "4"});
  CHECK(ss.rc == 0);
  CHECK(ss.out.find("= 20 ") != std::string::npos);
}

TEST_CASE("bounds reports statuses and sources") {
  auto r = run({"bounds", "--family", "tl", "--n", "24", "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["gap"]["value"] == "4807/2");
  CHECK(j["gap"]["status"] == "lower-bound");
  CHECK(j["ssgap"]["value"] == "676039/6");
  CHECK(j["faith"]["value"] == "534888");
  auto text = run({"bounds", "--family", "sym", "--n", "4"});
  CHECK(text.rc == 0);
  CHECK(text.out.find("gap   = 1 ") != std::string::npos);
}

TEST_CASE("rounded, h1, and ext verbs") {
  auto r = run({"rounded", "--family", "tl", "--n", "5", "--format", "json"});
  CHECK(json::parse(r.out)["well_rounded"] == true);
  auto t3 = run({"rounded", "--family", "tl", "--n", "3"});
  CHECK(t3.out.find("left classes 2") != std::string::npos);

  auto h = run({"h1", "--family", "tl", "--n", "4", "--char", "2"});
  CHECK(h.out.find(": 0") != std::string::npos);

  auto e = run({"ext", "--family", "tl", "--n", "5", "--char", "3", "--x",
                "trivial", "--y", "units", "--format", "json"});
  CHECK(json::parse(e.out)["ext_dim"] == 0);
  CHECK(run({"ext", "--family", "tl", "--n", "5", "--x", "bogus"}).rc == 2);
}

TEST_CASE("period reports index, period, and the H-cell order") {
  auto r = run({"period", "--family", "brauer", "--n", "5", "--diagram",
                "5;0,6|1,7|2,8|3,9|4,5", "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["period"] == 5);
  CHECK(j["largest_prime"] == 5);
  CHECK(j["h_cell_order"] == "120");
  CHECK(run({"period", "--family", "tl", "--n", "3", "--element",
             "99"}).rc == 2);
  CHECK(run({"period", "--family", "tl", "--n", "3"}).rc == 2);
}

TEST_CASE("truncate builds the Rees subquotient by width") {
  auto r = run({"truncate", "--family", "tl", "--n", "10", "--low", "4",
                "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["size"] == 15490);
  CHECK(j["fresh_unit"] == true);
  CHECK(j["has_zero"] == false);
  CHECK(run({"truncate", "--family", "tl", "--n", "4", "--low",
             "3"}).rc == 2);
}

TEST_CASE("protocol su transcript: reproducible and key-agreeing") {
  std::vector<std::string> args = {"protocol", "su",     "--family",
                                   "tl",       "--n",    "10",
                                   "--seed",   "7",      "--truncate-low",
                                   "4",        "--format", "json"};
  auto r1 = run(args);
  CHECK(r1.rc == 0);
  json j = json::parse(r1.out);
  CHECK(j["equal"] == true);
  CHECK(j["secrets"]["a"]["index"] == j["secrets"]["b"]["index"]);
  CHECK(j["public"]["gens_a"].size() == 4);
  CHECK(j["public"]["gens_b"].size() == 4);
  CHECK(j["monoid"]["size"] == 16796);

  auto r2 = run(args);
  CHECK(r2.out == r1.out);  // same seed, same bytes

  auto other = run({"protocol", "su", "--family", "tl", "--n", "10", "--seed",
                    "8", "--truncate-low", "4", "--format", "json"});
  CHECK(json::parse(other.out)["equal"] == true);
  CHECK(other.out != r1.out);

  CHECK(run({"protocol", "su", "--family", "motzkin", "--n", "6"}).rc == 2);
  CHECK(run({"protocol", "su", "--family", "tl", "--n", "3"}).rc == 2);
}

TEST_CASE("protocol stickel transcript") {
  auto r = run({"protocol", "stickel", "--family", "brauer", "--n", "5",
                "--seed", "11", "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["public"].contains("h"));
  CHECK(run({"protocol", "stickel", "--family", "brauer", "--n", "5",
             "--truncate-low", "2"}).rc == 2);
  CHECK(run({"protocol", "dh", "--family", "tl", "--n", "4"}).rc == 2);
}

TEST_CASE("selftest verb runs the acceptance suite") {
  auto r = run({"selftest", "--format", "json"});
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["criteria"].size() == 14);
}

TEST_CASE("ssdims works for every family") {
  auto r = run({"ssdims", "--family", "tl", "--n", "24", "--format", "csv"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("tl,24,0,0,,208012,table-formula") != std::string::npos);
  CHECK(r.out.find("tl,24,24,0,,1,table-formula") != std::string::npos);
  auto mo = run({"ssdims", "--family", "motzkin", "--n", "4"});
  CHECK(mo.out.find("k= 1: 12") != std::string::npos);
}

TEST_CASE("timestamps are opt-in; help and bad verbs exit cleanly") {
  auto plain = run({"rounded", "--family", "tl", "--n", "3"});
  CHECK(plain.out.find("generated") == std::string::npos);
  auto stamped = run({"--timestamps", "rounded", "--family", "tl", "--n",
                      "3"});
  CHECK(stamped.out.find("generated: ") != std::string::npos);

  CHECK(run({"--help"}).rc == 0);
  CHECK(run({"nosuchverb"}).rc == 2);
  CHECK(run({}).rc == 2);
}
