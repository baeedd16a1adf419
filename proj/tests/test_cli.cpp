#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>

#include "support.hpp"
#include "valmon/valuation.hpp"

using nlohmann::json;
using namespace valmon;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VALMON_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

json run_json(const std::string& args, int status = 0) {
  const Run r = run(args);
  CHECK(r.status == status);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("cli leadexp, member and sequences") {
  CHECK(run("leadexp \"y^2 - x\"").out == "{\"lc\":\"2\",\"le\":\"3/4\"}\n");
  CHECK(run_json("member 1/4") == json{{"in_monoid", false}});
  CHECK(run_json("member 7/4") == json{{"in_monoid", true}, {"n", "1"}, {"digits", {0, 1}}});
  CHECK(run_json("sequences --depth 1")["rho"] == json{"1/2"});
  CHECK(run_json("--spec primes sequences --depth 3")["r"] == json{"1", "1", "2", "2", "6", "30"});
  CHECK(run("--output text leadexp y").out == "le=1/2 lc=1\n");
}

TEST_CASE("cli decompose, lambda, preimage and divide") {
  const json d = run_json("decompose 31/8");
  CHECK(d["value"] == "31/8");
  CHECK(d["digits"] == json{1, 0, 1});
  CHECK(run("decompose 1/4").status == 1);
  CHECK(run_json("lambda 3")["lambda"] == "5/4");
  CHECK(run("preimage 3/4").out == "y^2 - x\n");
  CHECK(run_json("--output json preimage 7/4") == json{{"poly", "x*y^2 - x^2"}, {"lc", "2"}});
  CHECK(run_json("divide x y") == json{{"quotient", "y"}});
  CHECK(run_json("divide y x") == json{{"quotient", nullptr}});
}

TEST_CASE("cli preimage output parses back to the library polynomial") {
  const Valuation val(MonoidContext(dyadic_spec(), 8));
  for (const char* m : {"0", "1", "1/2", "3/4", "11/8", "31/8", "43/16"}) {
    std::string text = run(std::string("preimage ") + m).out;
    REQUIRE(!text.empty());
    text.pop_back();
    CHECK(parse_poly(text) == preimage(parse_rational(m), val));
  }
}

TEST_CASE("cli reduce, syzygy and gb") {
  const json r = run_json("reduce --basis \"y^2-x,x*y\" \"x^2\"");
  REQUIRE(r["steps"].size() == 1);
  CHECK(r["steps"][0]["divisor"] == 0);
  CHECK(parse_poly(r["remainder"].get<std::string>()) == parse_poly("x^2 - 1/4*y*(y^2 - x)^2"));
  CHECK(run_json("syzygy \"y^2-x\" \"x*y\"").size() == 4);
  CHECK(run_json("gb x") == json{{"basis", {"x"}}, {"complete", true}, {"iterations", 1}});
  const json inc = run_json("gb --max-rounds 2 \"x,y\"", 2);
  CHECK(inc["complete"] == false);
  CHECK(inc["basis"].size() == 4);
}

TEST_CASE("cli selfcheck and spec files") {
  CHECK(run_json("selfcheck --depth 6")["ok"] == true);
  const std::string path = std::string(TEST_TMP_DIR) + "/dyadic_spec.json";
  std::ofstream(path) << R"({"prefix":[{"c":"1","e":"1/2"}],"tail":{"kind":"geometric","base":2}})";
  CHECK(run("--spec " + path + " leadexp \"y^2 - x\"").out == run("leadexp \"y^2 - x\"").out);
  CHECK(run_json("--spec " + path + " sequences --depth 4") == run_json("sequences --depth 4"));
  std::ofstream(path) << R"({"prefix":[{"c":"1","e":"1/2"},{"c":"1","e":"2"}]})";
  CHECK(run("--spec " + path + " sequences --depth 1").status == 1);
  CHECK(run("--spec /nonexistent/spec.json sequences").status == 1);
}

TEST_CASE("cli exit codes") {
  CHECK(run("leadexp \"y^2 -\"").status == 4);
  CHECK(run("member 1/3").status == 3);
  CHECK(run("bogus").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("--output xml leadexp y").status == 1);
  CHECK(run("lambda -1").status == 1);
  CHECK(run("reduce --basis \"x,0\" y").status == 1);
  CHECK(run("--help").status == 0);
}
