#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cx2/cli.hpp"
#include "cx2/complex.hpp"
#include "cx2/families.hpp"

using namespace cx2;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json out_json(const RunResult& r) { return json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze a built-in family as json") {
  RunResult r = run({"analyze", "--family", "tor:2,3", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  json j = out_json(r);
  CHECK(j["schema"] == "cx2/analyze/1");
  CHECK(j["source"] == "tor:2,3");
  CHECK(j["vertices"] == 2);
  CHECK(j["edges"] == 3);
  CHECK(j["faces"] == 1);
  CHECK(j["eulerCharacteristic"] == 0);
  CHECK(j["polygonQuotient"] == true);
  CHECK(j["linkComponents"] == json::array({1, 1}));
  CHECK(j["linkConnected"] == true);
  CHECK(j["closedSurface"] == false);  // b occurs three times, not twice
  CHECK(j["wedge"].is_null());
}

TEST_CASE("analyze human output is one stable line") {
  RunResult r = run({"analyze", "--family", "tor:2,3"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "tor:2,3: V=2 E=3 F=1 chi=0 linkConnected=true closedSurface=false\n");
}

TEST_CASE("analyze a presentation file with a wedge summary") {
  auto path = temp_file("cx2_cli_hexagon.gp", "gens: a b c\nabc = cba\n");
  RunResult r = run({"analyze", "--pres", path.string(), "--json", "--wedge"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j["source"] == path.string());
  CHECK(j["vertices"] == 1);
  CHECK(j["linkComponents"] == json::array({2}));
  CHECK(j["linkConnected"] == false);
  CHECK(j["closedSurface"].is_null());  // presentations have no pairing claim
  CHECK(j["wedge"]["circles"] == 1);
  CHECK(j["wedge"]["pieces"].size() == 1);
  CHECK(j["wedge"]["pieces"][0]["vertices"] == 2);
  CHECK(j["wedge"]["pieces"][0]["labels"] == "abc");
}

TEST_CASE("split reports circles and pieces") {
  auto path = temp_file("cx2_cli_spheres.gp",
                        "gens: a b c d e\naB\naB\ncdE\ncdE\n");
  RunResult r = run({"split", "--pres", path.string(), "--json"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j["schema"] == "cx2/split/1");
  CHECK(j["linkComponents"] == 5);
  CHECK(j["minusVertexComponents"] == 2);
  CHECK(j["circles"] == 3);
  REQUIRE(j["pieces"].size() == 2);
  CHECK(j["pieces"][0]["eulerCharacteristic"] == 2);
  CHECK(j["pieces"][1]["eulerCharacteristic"] == 2);
  CHECK(j["pieces"][0]["labels"] == "ab");
  CHECK(j["pieces"][1]["labels"] == "cde");

  RunResult human = run({"split", "--pres", path.string()});
  CHECK(human.out.find("circles=3 pieces=2\n") == 0);
  CHECK(human.out.find("piece 0: V=2 E=2 F=2 chi=2 labels=ab\n") !=
        std::string::npos);
}

TEST_CASE("split leaves link-connected complexes whole") {
  RunResult r = run({"split", "--family", "art:3", "--json"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j["circles"] == 0);
  CHECK(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["labels"] == "abt");
}

TEST_CASE("links reports per-vertex graphs") {
  RunResult r = run({"links", "--family", "tor:2,3", "--json"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j["schema"] == "cx2/links/1");
  CHECK(j["linkConnected"] == true);
  REQUIRE(j["links"].size() == 2);
  CHECK(j["links"][0] == json({{"vertex", 0},
                               {"ends", 3},
                               {"corners", 3},
                               {"components", 1}}));
  CHECK(j["links"][1] == json({{"vertex", 1},
                               {"ends", 3},
                               {"corners", 4},
                               {"components", 1}}));

  RunResult one = run({"links", "--family", "tor:2,3", "--vertex", "1"});
  CHECK(one.out == "vertex 1: ends=3 corners=4 components=1\n");

  RunResult bad = run({"links", "--family", "tor:2,3", "--vertex", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("no vertex 5") != std::string::npos);
}

TEST_CASE("build prints the canonical complex json") {
  RunResult r = run({"build", "--family", "tor:2,3"});
  REQUIRE(r.code == 0);
  TwoComplex x = description_complex(torus_knot_description(2, 3));
  CHECK(r.out == to_json(x).dump(2) + "\n");

  // Byte-stable across runs.
  RunResult again = run({"build", "--family", "tor:2,3"});
  CHECK(again.out == r.out);
}

TEST_CASE("word problem verdicts as json") {
  RunResult r = run({"wp", "--family", "tor:2,3", "--word", "aabAAB",
                     "--method", "all", "--json"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j["schema"] == "cx2/wp/1");
  CHECK(j["family"] == "tor:2,3");
  CHECK(j["word"] == "aabAAB");
  REQUIRE(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["method"] == "normal-form");
  CHECK(j["verdicts"][0]["isIdentity"] == true);
  CHECK(j["verdicts"][1]["method"] == "rewrite");
  CHECK(j["verdicts"][1]["isIdentity"] == true);
  CHECK(j["agree"] == true);
  // The rewrite trace carries replayable steps.
  CHECK(j["verdicts"][1]["trace"].size() > 0);
  CHECK(j["verdicts"][1]["trace"].back()["result"] == "");

  RunResult human = run({"wp", "--family", "tor:2,3", "--word", "aaBBB",
                         "--method", "all"});
  REQUIRE(human.code == 0);
  CHECK(human.out.find("normal-form: identity (normal form z^0)\n") !=
        std::string::npos);
  CHECK(human.out.find("agreement: yes\n") != std::string::npos);
}

TEST_CASE("word problem for bs runs the pinch solver only") {
  RunResult r = run({"wp", "--family", "bs:2", "--word", "taaTAA",
                     "--method", "all", "--json"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  REQUIRE(j["verdicts"].size() == 1);  // no rewrite system for bs
  CHECK(j["verdicts"][0]["isIdentity"] == true);
  CHECK(j["verdicts"][0]["trace"][0]["kind"] == "pinch");

  RunResult no = run({"wp", "--family", "bs:2", "--word", "taTA", "--json"});
  REQUIRE(no.code == 0);
  json nj = out_json(no);
  CHECK(nj["verdicts"][0]["isIdentity"] == false);
  CHECK(nj["verdicts"][0]["certificate"] ==
        "Britton-reduced residue \"taTA\"");
}

TEST_CASE("verify emits a timed report and is otherwise byte-stable") {
  std::vector<std::string> args{"verify", "--property", "agreement",
                                "--family", "tor:2,3", "--max-len", "5",
                                "--json"};
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.code == 0);
  json ja = out_json(a), jb = out_json(b);
  CHECK(ja["schema"] == "cx2/verify/1");
  CHECK(ja["wordsScanned"] == 485);
  CHECK(ja["disagreements"] == json::array());
  CHECK(ja.contains("elapsedMs"));
  ja.erase("elapsedMs");
  jb.erase("elapsedMs");
  CHECK(ja == jb);
}

TEST_CASE("verify iso in human form") {
  RunResult r = run({"verify", "--property", "iso", "--family", "art:4"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "iso art:4: target=bs:2 checks=6 verified=true PASS\n");
}

TEST_CASE("verify rejects mismatched properties and families") {
  CHECK(run({"verify", "--property", "subword", "--family", "art:3"}).code ==
        2);
  CHECK(run({"verify", "--property", "syllables", "--family", "tor:2,3"})
            .code == 2);
  CHECK(run({"verify", "--property", "nonsense", "--family", "tor:2,3"})
            .code == 2);
  // Budget refusals surface as usage errors, with the estimate.
  RunResult big = run({"verify", "--property", "agreement", "--family",
                       "tor:2,3", "--max-len", "20"});
  CHECK(big.code == 2);
  CHECK(big.err.find("exceeds the budget cap") != std::string::npos);
}

TEST_CASE("export-dot writes skeletons and links") {
  RunResult skel = run({"export-dot", "--family", "tor:2,3"});
  REQUIRE(skel.code == 0);
  CHECK(skel.out.find("digraph skeleton {") == 0);
  CHECK(skel.out.find("v0 -> v0 [label=\"a\"]") != std::string::npos);
  CHECK(skel.out.find("v0 -> v1 [label=\"t\"]") != std::string::npos);

  RunResult link = run({"export-dot", "--family", "tor:2,3", "--vertex",
                        "0"});
  REQUIRE(link.code == 0);
  CHECK(link.out.find("graph link_v0 {") == 0);

  auto path = std::filesystem::temp_directory_path() / "cx2_cli_skel.dot";
  std::filesystem::remove(path);
  RunResult file = run({"export-dot", "--family", "tor:2,3", "--dot",
                        path.string()});
  REQUIRE(file.code == 0);
  CHECK(file.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str() == skel.out);
}

TEST_CASE("input selection must be unambiguous") {
  RunResult none = run({"analyze"});
  CHECK(none.code == 2);
  CHECK(none.err.find("exactly one of --desc, --pres, --family") !=
        std::string::npos);
  auto path = temp_file("cx2_cli_torus.gd", "[abAB]\n");
  RunResult both =
      run({"analyze", "--desc", path.string(), "--family", "tor:2,3"});
  CHECK(both.code == 2);
}

TEST_CASE("parse failures report file positions") {
  auto unclosed = temp_file("cx2_cli_unclosed.gd", "[abc\n");
  RunResult r = run({"analyze", "--desc", unclosed.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(r.err.find("unclosed '['") != std::string::npos);

  auto headless = temp_file("cx2_cli_headless.gp", "abAB\n");
  RunResult h = run({"analyze", "--pres", headless.string()});
  CHECK(h.code == 2);
  CHECK(h.err.find("gens:") != std::string::npos);

  RunResult missing = run({"analyze", "--desc", "/no/such/file.gd"});
  CHECK(missing.code == 2);
  CHECK(!missing.err.empty());

  RunResult badfam = run({"analyze", "--family", "knot:2,3"});
  CHECK(badfam.code == 2);
  CHECK(badfam.err.find("unknown family") != std::string::npos);

  RunResult badword = run({"wp", "--family", "tor:2,3", "--word", "a^"});
  CHECK(badword.code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--family", "tor:2,3", "--frob"}).code == 2);
  CHECK(run({}).code == 2);  // a subcommand is required
  CHECK(run({"--help"}).code == 0);
  RunResult help = run({"--help"});
  CHECK(help.out.find("build") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}

}  // TEST_SUITE
