#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dcstab/canon.hpp"
#include "dcstab/census.hpp"
#include "dcstab/cli.hpp"
#include "dcstab/families.hpp"
#include "dcstab/graph6.hpp"

using namespace dcstab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "Bw"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["stable"] == true);
  CHECK(j["aut_bx_order"] == "12");
  CHECK(r.err.empty());

  auto c = run({"analyze", "--criteria", "IheA@GUAo"});
  REQUIRE(c.code == 0);
  auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["criteria"].is_array());
  CHECK(jc["criteria"].size() == 7);

  auto t = run({"analyze", "--text", "-"}, "A_\n");
  CHECK(t.code == 0);
  CHECK(t.out.find("trivially_unstable") != std::string::npos);
}

TEST_CASE("criteria, cover, iso") {
  auto c = run({"criteria", "Bw"});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out).is_array());

  auto cov = run({"cover", "Bw"});
  REQUIRE(cov.code == 0);
  CHECK(are_isomorphic(parse_graph6(cov.out.substr(0, cov.out.size() - 1)), cycle(6)));
  auto canon = run({"cover", "--canonical", "Bw"});
  CHECK(canon.out == canonical_form(cycle(6)).canonical_graph6 + "\n");

  CHECK(run({"iso", "IheA@GUAo", write_graph6(complement(johnson(5, 2)))}).out == "true\n");
  CHECK(run({"iso", "Bw", "Bg"}).out == "false\n");
}

TEST_CASE("family") {
  CHECK(run({"family", "johnson", "--n", "6", "--k", "2"}).out == write_graph6(johnson(6, 2)) + "\n");
  CHECK(run({"family", "lexcycle", "--m", "8", "--h", "EhEG"}).out ==
        write_graph6(lex_product(cycle(8), cycle(6))) + "\n");
  CHECK(run({"family", "xab", "--base", "Dhc", "--a", "0,1", "--b", "3"}).out ==
        write_graph6(extend_xab(cycle(5), {0, 1}, {3}).result) + "\n");
  CHECK(run({"family", "petersen"}).out == "IheA@GUAo\n");
  CHECK(run({"family", "lms", "--m", "7", "--h", "EhEG"}).code == 1);
  CHECK(run({"family", "xab", "--base", "Dhc", "--a", "x"}).code == 1);
}

TEST_CASE("census") {
  auto r = run({"census", "--n", "5", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n,cnbtf,ntu,xab\n5,10,1,1\n");
  auto table = run({"census", "--n", "5"});
  CHECK(table.out.find("10") != std::string::npos);

  std::ostringstream all;
  for (const Graph& g : enumerate_graphs(5)) all << write_graph6(g) << '\n';
  CHECK(run({"census", "--n", "5", "--csv", "--stream", "-"}, all.str()).out == r.out);
  CHECK(run({"census", "--n", "6", "--csv", "--threads", "3"}).out == run({"census", "--n", "6", "--csv"}).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  auto bad = run({"analyze", "A`"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"census", "--n", "3", "--stream", "-"}, "A_\nzz\n").code == 2);
  CHECK(run({"--help"}).code == 0);
}
