#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tropgroups/io.hpp"

namespace fs = std::filesystem;
using tropgroups::Json;
using tropgroups::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "tropgroups_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

const char* kF =
    "0 -1+e1 -1+e3 -1+e1\n"
    "-1+e2 0 -1+e2 -1+e3\n"
    "-1+e3 -1+e1 0 -1+e1\n"
    "-1+e2 -1+e3 -1+e2 0\n";

}  // namespace

TEST_CASE("analyze reports descriptions") {
  const auto f = run({"analyze", write_temp("f.txt", kF)});
  CHECK(f.code == 0);
  CHECK(f.out.find("(R x D4)") != std::string::npos);

  const auto id = run({"analyze", write_temp("i3.txt", "0 -inf -inf\n-inf 0 -inf\n-inf -inf 0\n")});
  CHECK(id.code == 0);
  CHECK(id.out.find("R wr S_3") != std::string::npos);

  const auto ex = run({"analyze", "--json",
                       write_temp("ex.txt", "0 0 -inf -inf\n-inf 1 -inf -inf\n-inf -inf 1 0\n")});
  REQUIRE(ex.code == 0);
  const Json j = Json::parse(ex.out);
  CHECK(j["partition"]["components"].size() == 2);
  CHECK(j["description"]["formula"] == "R  x  R");
  CHECK(j["description"]["real_rank"] == 2);
  CHECK(j["partition"]["components"][1]["omega"] == Json::array({3}));
  CHECK(j["input_digest"].get<std::string>().size() == 16);
  for (const char* key : {"kind", "formula", "real_rank", "reduction", "factors"})
    CHECK(j["description"].contains(key));
}

TEST_CASE("analyze accepts JSON matrices and the idempotent route") {
  const std::string p = write_temp(
      "e.json", R"({"rows": 2, "cols": 2, "entries": [["0", "-1+e1"], ["-1+e1", "0"]]})");
  const auto r = run({"analyze", "--assume-idempotent", "--json", p});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["description"]["kind"] == "maximal_subgroup");
  CHECK(j["description"]["factors"][0]["order"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", write_temp("bad.txt", "0 x\n")}).code == 2);
  CHECK(run({"analyze", write_temp("ragged.txt", "0 1\n2\n")}).code == 2);
  CHECK(run({"analyze", "/nonexistent/file"}).code == 2);
  CHECK(run({"analyze", "--max-nodes", "1", write_temp("f2.txt", kF)}).code == 3);
  CHECK(run({"closure", "--gens", "(1,2", "--degree", "3"}).code == 2);
  CHECK(run({"closure", "--gens", "(1,2,3,4,5,6)", "(1,2)", "--degree", "6", "--max-order", "10"}).code == 3);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"analyze", "--assume-idempotent", write_temp("ni.txt", "1 0\n0 1\n")}).code == 1);
}

TEST_CASE("closure subcommand") {
  const auto a4 = run({"closure", "--json", "--degree", "10", "--gens", "(1,3,2)(5,10,7)(6,8,9)",
                       "(1,4)(2,3)(6,10)(7,8)", "(1,3)(2,4)(5,9)(6,10)"});
  REQUIRE(a4.code == 0);
  const Json j = Json::parse(a4.out);
  CHECK(j["order"] == 12);
  CHECK(j["closure_order"] == 12);
  CHECK(j["two_closed"] == true);

  const auto c3 = run({"closure", "--json", "--degree", "4", "--gens", "(1,2,3)"});
  REQUIRE(c3.code == 0);
  // S_4 elements preserving the orbitals of <(1,2,3)> fixing 4: exactly the group itself
  CHECK(Json::parse(c3.out)["closure_order"] == 3);

  const auto paired = run({"closure", "--json", "--bidegree", "2,2", "--gens", "(1,2)(3,4)"});
  REQUIRE(paired.code == 0);
  CHECK(Json::parse(paired.out)["two_closed"] == true);
  CHECK(run({"closure", "--bidegree", "2x2", "--gens", "(1,2)(3,4)"}).code == 2);
}

TEST_CASE("construct, approximate and verify") {
  const std::string spec = write_temp("s2.json", R"js({"degree": 2, "generators": ["(1,2)"]})js");
  const std::string out = write_temp("s2_out.txt", "");
  REQUIRE(run({"construct", spec, "-o", out}).code == 0);
  const auto analyzed = run({"analyze", "--assume-idempotent", out});
  CHECK(analyzed.out.find("(R x S2)") != std::string::npos);
  CHECK(run({"verify", out}).code == 0);

  const std::string graph = write_temp(
      "g.json", R"({"omega": 2, "theta": 2, "edges": [[1,1,"x"],[2,2,"x"],[1,2,"y"],[2,1,"y"]]})");
  const auto g = run({"construct", "--json", graph});
  REQUIRE(g.code == 0);
  CHECK(Json::parse(g.out)["matrix"]["rows"] == 2);

  const auto ap = run({"approximate", write_temp("j.txt", "0 0\n-inf 0\n"), "--m", "1"});
  CHECK(ap.code == 0);
  CHECK(ap.out == "0 0\n-1 0\n");

  const auto v = run({"verify", "--json", write_temp("e.txt", "0 -1+e1\n-1+e2 0\n")});
  CHECK(v.code == 0);
  const Json vj = Json::parse(v.out);
  CHECK(vj["passed"] == true);
  for (const auto& [name, ok] : vj["verification"].items()) CHECK(ok == true);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const std::string p = write_temp("f3.txt", kF);
  const auto a = run({"analyze", "--json", p});
  const auto b = run({"analyze", "--json", p});
  CHECK(a.out == b.out);
  const auto t1 = run({"analyze", p});
  const auto t4 = run({"analyze", "--threads", "4", p});
  CHECK(t1.out == t4.out);
}
