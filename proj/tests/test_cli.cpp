#include "doctest.h"
#include "toric/cli.hpp"
#include "toric/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace toric;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() / ("toric_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

 private:
  fs::path dir_;
};

Json output_of(const Result& r) { return parse_json(r.out).at("output"); }

}  // namespace

TEST_CASE("gen and validate") {
  Workspace ws;
  Result g = run({"gen", "p2"});
  REQUIRE(g.code == 0);
  std::string fan = ws.write("p2.json", g.out);
  Json v = output_of(run({"validate", fan}));
  CHECK(v.at("complete") == true);
  CHECK(v.at("smooth") == true);
  CHECK(v.at("simplicial") == true);

  std::string pyramid = ws.write("pyr.json", run({"gen", "example56"}).out);
  Json p = output_of(run({"validate", pyramid}));
  CHECK(p.at("complete") == true);
  CHECK(p.at("simplicial") == false);
}

TEST_CASE("invalid fans exit with code 2") {
  Workspace ws;
  std::string bad = ws.write("bad.json", R"({"rank":2,"rays":[[1,0],[0,1],[1,1]],"max_cones":[[0,1],[0,2]]})");
  Result r = run({"validate", bad});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("not a fan") != std::string::npos);
  CHECK(run({"validate", ws.write("junk.json", "{ not json")}).code == 2);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "nosuchfan"}).code == 2);
}

TEST_CASE("precondition and genericity exit codes") {
  Workspace ws;
  std::string pyramid = ws.write("pyr.json", run({"gen", "example56"}).out);
  CHECK(run({"todd", "weight", pyramid}).code == 3);
  std::string f1 = ws.write("f1.json", run({"gen", "hirzebruch", "1"}).out);
  std::string c = ws.write("c.json", R"({"codim":1,"values":{"[0]":0,"[1]":1,"[2]":0,"[3]":1}})");
  CHECK(run({"cup", f1, c, c, "--displacement", "1,0"}).code == 4);
  std::string half = ws.write("half.json", R"({"codim":1,"values":{"[0]":"1/2","[1]":0,"[2]":"1/2","[3]":"1/2"}})");
  CHECK(run({"cup", f1, half, half}).code == 2);
  CHECK(run({"cup", f1, half, half, "--rational"}).code == 0);
}

TEST_CASE("betti numbers") {
  Workspace ws;
  std::string h = ws.write("h.json", run({"gen", "hypersimplex", "2", "5"}).out);
  CHECK(output_of(run({"betti", h})).at("betti") == Json::array({1, 1, 6, 6, 1}));
  std::string e = ws.write("e.json", run({"gen", "example13", "3"}).out);
  Json table = output_of(run({"betti", e})).at("table");
  CHECK(table[1].at("torsion") == Json::array({"3"}));
}

TEST_CASE("cup with an explicit displacement lists the formula terms") {
  Workspace ws;
  std::string f = ws.write("f.json", run({"gen", "hirzebruch", "2"}).out);
  std::string c = ws.write("c.json", R"({"codim":1,"values":{"[0]":0,"[1]":1,"[2]":0,"[3]":1}})");
  std::string d = ws.write("d.json", R"({"codim":1,"values":{"[0]":1,"[1]":0,"[2]":1,"[3]":2}})");
  Result r = run({"cup", f, c, d, "--displacement", "1,1"});
  REQUIRE(r.code == 0);
  Json out = output_of(r);
  CHECK(out.at("weight").at("values").at("[]") == "1");
  Json pairs = out.at("certificates")[0].at("pairs");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].at("sigma") == "[0]");
  CHECK(pairs[0].at("tau") == "[3]");
  CHECK(pairs[1].at("sigma") == "[1]");
  CHECK(pairs[1].at("tau") == "[2]");
  CHECK(parse_json(r.out).at("displacements") == Json::array({Json::array({"1", "1"})}));
}

TEST_CASE("manifests replay byte for byte") {
  Workspace ws;
  std::string f = ws.write("f.json", run({"gen", "hirzebruch", "3"}).out);
  std::string c = ws.write("c.json", R"({"codim":1,"values":{"[0]":1,"[1]":0,"[2]":1,"[3]":3}})");
  Result first = run({"cup", f, c, c, "--seed", "17"});
  REQUIRE(first.code == 0);
  CHECK(run({"cup", f, c, c, "--seed", "17"}).out == first.out);
  std::string manifest = ws.write("m.json", first.out);
  Result replay = run({"replay", manifest});
  CHECK(replay.code == 0);
  CHECK(parse_json(replay.out).at("bytes_identical") == true);

  ws.write("c.json", R"({"codim":1,"values":{"[0]":2,"[1]":0,"[2]":2,"[3]":6}})");
  Result changed = run({"replay", manifest});
  CHECK(changed.code == 1);
  CHECK(parse_json(changed.out).at("inputs_unchanged") == false);
}

TEST_CASE("todd subcommands") {
  Workspace ws;
  std::string f = ws.write("f.json", run({"gen", "hirzebruch", "1"}).out);
  Json e = output_of(run({"todd", "ehrhart", f}));
  CHECK(e.at("polynomial").at("text") ==
        "a1*a2 + a1*a4 - 1/2*a2^2 + a2*a3 + a3*a4 + 1/2*a4^2 + a1 + 1/2*a2 + a3 + 3/2*a4 + 1");
  CHECK(e.at("square_free_matches_todd") == true);
  Json c = output_of(run({"todd", "count", f, "--a", "1,1,2,1"}));
  CHECK(c.at("count") == c.at("phi"));
  CHECK(run({"todd", "count", f, "--a", "0,1,0,0"}).code == 3);
  std::string pyramid = ws.write("pyr.json", run({"gen", "example56"}).out);
  Json o = output_of(run({"todd", "obstruction", pyramid}));
  CHECK(o.at("obstructed") == true);
  CHECK(o.at("determinant") == "176");
}

TEST_CASE("polytope subcommands") {
  Workspace ws;
  std::string sq = ws.write("sq.json", R"({"rank":2,"vertices":[[0,0],[1,0],[0,1],[1,1]]})");
  CHECK(output_of(run({"points", "count", sq})).at("count") == "4");
  Json nf = output_of(run({"polytope", "normalfan", sq}));
  CHECK(nf.at("summary").at("smooth") == true);
  std::string tri = ws.write("tri.json", R"({"rank":2,"facets":[{"normal":[1,0],"offset":0},{"normal":[0,1],"offset":0},{"normal":[-1,-1],"offset":"3"}]})");
  CHECK(output_of(run({"points", "count", tri})).at("count") == "10");
}

TEST_CASE("weights, cap, pullback and closure") {
  Workspace ws;
  std::string p2 = ws.write("p2.json", run({"gen", "p2"}).out);
  std::string p1 = ws.write("p1.json", run({"gen", "p1"}).out);
  std::string f0 = ws.write("f0.json", run({"gen", "hirzebruch", "0"}).out);
  Json bases = output_of(run({"weights", "basis", p2})).at("bases");
  CHECK(bases.size() == 3);
  std::string h = ws.write("h.json", R"({"codim":1,"values":["1","1","1"]})");
  CHECK(output_of(run({"weights", "check", p2, h})).at("balanced") == true);
  std::string bad = ws.write("bad.json", R"({"codim":1,"values":["1","0","0"]})");
  CHECK(output_of(run({"weights", "check", p2, bad})).at("balanced") == false);

  std::string line = ws.write("line.json", R"({"codim":1,"coefficients":{"[0]":1}})");
  Json cap = output_of(run({"cap", p2, h, line}));
  int points = 0;
  for (const auto& [k, v] : cap.at("cycle").at("coefficients").items()) points += std::stoi(v.get<std::string>());
  CHECK(points == 1);

  std::string map = ws.write("map.json", R"({"matrix":[[1,0]]})");
  std::string pt = ws.write("pt.json", R"({"codim":1,"values":{"[]":1}})");
  Json pb = output_of(run({"pullback", f0, p1, map, pt}));
  CHECK(pb.at("closed_form_agrees") == true);
  CHECK(pb.at("weight").at("values").at("[1]") == "1");

  std::string lat = ws.write("lat.json", R"({"generators":[[3,2]]})");
  Json cl = output_of(run({"closure", p2, lat, "--seed", "4"}));
  Json coeffs = cl.at("cycle").at("coefficients");
  int degree = 0;
  for (const auto& [k, v] : coeffs.items()) degree += std::stoi(v.get<std::string>());
  CHECK(degree == 3);
}

TEST_CASE("pretty output") {
  Workspace ws;
  std::string f = ws.write("f.json", run({"gen", "p2"}).out);
  Result r = run({"validate", f, "--pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("complete: true") != std::string::npos);
  CHECK(run({"validate", f, "--pretty", "--json"}).code == 2);
}
