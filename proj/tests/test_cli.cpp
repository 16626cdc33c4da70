#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "ghostkit/cli.hpp"
#include "pool.hpp"

using namespace ghostkit;
using CM = CanonicalModule;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fuse text and json", "[cli]") {
  CHECK(run({"fuse", "W[1/3,0]", "W[2/3,0]"}).out == "P[-1]\n");
  CHECK(run({"fuse", "--compact", "B[5,0]", "B[3,0]"}).out == "B[7,0] + S{2,1}_1\n");
  CHECK(run({"fuse", "B[5,0]", "B[3,0]"}).out == "B[7,0] + P[2] + P[4]\n");

  auto j = nlohmann::json::parse(run({"fuse", "--format", "json", "B[3,0]", "B[4,0]"}).out);
  CHECK(j["guard_extended"] == true);
  CHECK(j["input"] == nlohmann::json::array({"B[3,0]", "B[4,0]"}));
  CHECK(j["summands"].size() == 3);

  Run strict = run({"fuse", "--strict-guards", "B[3,0]", "B[4,0]"});
  CHECK(strict.code == 1);
  CHECK(strict.out.empty());
}

TEST_CASE("hom, ext, dual, cover, hull", "[cli]") {
  CHECK(run({"hom", "B[2,0]", "B[2,1]"}).out == "1\n");
  CHECK(run({"ext", "V[0]", "V[1]"}).out == "1\n");
  CHECK(run({"ext", "P[0]", "V[1]"}).out == "0\n");
  CHECK(run({"dual", "--kind", "conjugate", "B[2,0]"}).out == "T[2,-2]\n");
  CHECK(run({"dual", "--kind", "star", "V[3]"}).out == dual_star(CM::vac(3)).str() + "\n");
  CHECK(run({"cover", "--kernel", "B[3,0]"}).out == "P[1]\nkernel: V[1]\n");
  CHECK(run({"hull", "B[3,0]"}).out == "P[0] + P[2]\n");
  CHECK(run({"hull", "--cokernel", "B[3,0]"}).out == "P[0] + P[2]\ncokernel: B[5,-1]\n");
  CHECK(run({"cover", "2*V[0]"}).code == 1);
}

TEST_CASE("loewy diagrams", "[cli]") {
  const std::string t5 = run({"loewy", "T[5,0]"}).out;
  const std::string top = t5.substr(0, t5.find('\n'));
  CHECK(top.find("V[0]") != std::string::npos);
  CHECK(top.find("V[2]") != std::string::npos);
  CHECK(top.find("V[4]") != std::string::npos);
  CHECK(top.find("V[1]") == std::string::npos);
  CHECK(t5.substr(t5.rfind('\n', t5.size() - 2)).find("V[3]") != std::string::npos);

  const std::string b3 = run({"loewy", "B[3,0]"}).out;
  CHECK(b3.substr(0, b3.find('\n')).find("V[1]") != std::string::npos);

  const std::string p = run({"loewy", "P[0]"}).out;
  CHECK(std::count(p.begin(), p.end(), '\n') == 5);
  CHECK(p.find("V[-1]") != std::string::npos);
  CHECK(run({"loewy", "V[2]"}).out == "V[2]\n");
}

TEST_CASE("char output", "[cli]") {
  CHECK(run({"char", "--format", "csv", "W[1/3,0]", "--hmax", "2", "--jwindow", "0:1"}).out ==
        "j,h,dim\n1/3,0,1\n1/3,1,2\n1/3,2,5\n");
  auto j = nlohmann::json::parse(run({"char", "--format", "json", "V[0]", "--hmax", "1", "--jwindow", "-1:1"}).out);
  CHECK(j["hmax"] == "1");
  CHECK(j["coefficients"].size() == 5);
  CHECK(run({"char", "V[0]", "--jwindow", "2:1"}).code == 1);
  CHECK(run({"char", "V[0]", "--hmax", "x"}).code == 1);
}

TEST_CASE("rigidity command", "[cli]") {
  auto j = nlohmann::json::parse(run({"rigidity", "--format", "json", "--j", "0.3", "--w1", "1.0"}).out);
  CHECK(j["identities_pass"] == true);
  CHECK(j["I_abs"].get<double>() > 1e-8);
  CHECK(run({"rigidity", "--j", "0"}).code == 1);
  CHECK(run({"rigidity", "--j", "0.7", "--w1", "0"}).code == 1);
}

TEST_CASE("verify and catalog commands", "[cli]") {
  Run v = run({"verify", "--suite", "numerics", "--max-length", "2", "--max-flow", "0"});
  CHECK(v.code == 0);
  CHECK(v.out.find("verify: PASS") != std::string::npos);
  CHECK(v.out.find("pool: 7 modules, 343 triples") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
  CHECK(run({"verify", "--max-length", "0", "--suite", "numerics"}).code == 1);

  Run c = run({"catalog", "--bound", "1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("def-b-odd[n=1]: 0 -> V[0] -> B[3,0] -> T[2,1] -> 0") != std::string::npos);
}

TEST_CASE("errors map to exit codes", "[cli]") {
  Run parse = run({"hom", "V[0] + Q[1]", "V[0]"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("position 7") != std::string::npos);
  CHECK(run({"fuse", "W[0/1,2]", "V[0]"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"fuse", "V[0]"}).code == 1);
  CHECK(run({"fuse", "--format", "csv", "V[0]", "V[0]"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config parsing and precedence", "[cli][config]") {
  std::istringstream in("# defaults\nhmax = 5/2\njwindow = -1 : 3\n\ncatalog_bound=4\nstrict_guards = true\n"
                        "max_length = 5 # short pool\nmax_flow = 2\n");
  Config c = parse_config(in);
  CHECK(c.hmax == Rational(5, 2));
  CHECK(c.jmin == -1);
  CHECK(c.jmax == 3);
  CHECK(c.catalog_bound == 4);
  CHECK(c.strict_guards);
  CHECK(c.max_length == 5);
  CHECK(c.max_flow == 2);

  std::istringstream bad_key("depth = 3\n"), bad_line("hmax 3\n"), bad_int("max_flow = 2.5\n"),
      bad_window("jwindow = 3:1\n");
  CHECK_THROWS_AS(parse_config(bad_key), ValidationError);
  CHECK_THROWS_AS(parse_config(bad_line), ValidationError);
  CHECK_THROWS_AS(parse_config(bad_int), ValidationError);
  CHECK_THROWS_AS(parse_config(bad_window), ValidationError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/ghostkit.conf"), ValidationError);

  Config d;
  CHECK(d.hmax == 8);
  CHECK(d.jmin == -6);
  CHECK(d.jmax == 6);
  CHECK_FALSE(d.strict_guards);
}

TEST_CASE("interned fusion table agrees with fuse", "[verify]") {
  FusionTable tab;
  auto pool = test_pool(4, 1);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      INFO(a.str() << " x " << b.str());
      REQUIRE(tab.to_sum(tab.product(tab.id(a), tab.id(b))) == fuse(a, b));
      const auto ab = tab.product(tab.id(a), tab.id(b));
      for (const auto& c : {CM::vac(1), CM::bstr(3, -1)})
        REQUIRE(tab.to_sum(tab.product(ab, tab.id(c))) == fuse(fuse(a, b), FormalSum(c)));
    }
}

TEST_CASE("checks report the lowest failing case", "[verify]") {
  auto r = detail::run_check("demo", 10, 3, [](std::size_t i, Tally& t, unsigned) {
    t.expect(i % 4 != 1, [i] { return "case " + std::to_string(i); });
    t.expect(true, [] { return std::string(); });
  });
  CHECK(r.cases == 20);
  CHECK(r.failures == 3);
  CHECK(r.first_failure == "case 1");
  CHECK_FALSE(r.ok());
}

TEST_CASE("pool shape", "[verify]") {
  auto pool = module_pool(7, 3);
  CHECK(pool.size() == 119);
  CHECK(std::count(pool.begin(), pool.end(), CM::typ(GhostCoset(1, 2), -3)) == 1);
  CHECK(std::count(pool.begin(), pool.end(), CM::tstr(7, 3)) == 1);
}
