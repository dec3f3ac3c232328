#include <doctest.h>

#include "diffgb/cli.hpp"

using namespace diffgb;

namespace {

RunConfig config(std::string command, std::string name = "") {
  RunConfig c;
  c.command = std::move(command);
  c.name = std::move(name);
  return c;
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(Range::parse("1..200").lo == 1);
  CHECK(Range::parse("1..200").hi == 200);
  CHECK(Range::parse("7").hi == 7);
  CHECK_THROWS_AS(Range::parse("5..1"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("a..3"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("1..."), std::invalid_argument);
}

TEST_CASE("identity reports") {
  auto c = config("identity", "rrnm1");
  c.range = "1..200";
  const Report r = run(c);
  CHECK(r.pass);
  CHECK(r.exit_code() == 0);
  CHECK(r.results.size() == 200);

  c = config("identity", "twocolor");
  c.range = "2..2";
  const Report t = run(c);
  CHECK(t.pass);
  CHECK(t.results[0]["left"] == "4");
  CHECK(t.results[0]["right"] == "4");

  c = config("identity", "rr");
  c.range = "6";
  const Report rr = run(c);
  CHECK(rr.results[0]["left"] == "3");
  CHECK(rr.results[0]["right"] == "3");

  c = config("identity", "nope");
  CHECK_THROWS_AS(run(c), std::invalid_argument);
  c = config("identity", "rr");
  c.range = "9..3";
  CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("identity failure names the smallest counterexample") {
  auto c = config("identity", "twocolor");
  c.range = "0..10";
  c.j = "2";
  const Report r = run(c);
  CHECK_FALSE(r.pass);
  CHECK(r.exit_code() != 0);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.back().find("counterexample: j=2 n=1") == 0);
}

TEST_CASE("gb reports") {
  auto c = config("gb");
  c.ideal = "xy";
  c.order = "wrevlex";
  const Report r = run(c);
  CHECK(r.pass);
  CHECK(r.results[0]["generators_match"] == true);
  CHECK(r.results[0]["weight_bound"] == 8);

  c.ideal = "x2";
  c.order = "wlex";
  const Report l = run(c);
  CHECK(l.results[0]["status"] == "conjectural");
  CHECK(l.results[0]["weight_bound"] == 9);

  c.ideal = "xy";
  CHECK_THROWS_AS(run(c), std::invalid_argument);
  c.ideal = "z";
  CHECK_THROWS_AS(run(c), std::invalid_argument);
  c.ideal = "x2";
  c.weight_bound = 1;
  CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("witness report") {
  auto c = config("witness");
  c.k = "6";
  const Report r = run(c);
  CHECK(r.pass);
  CHECK(r.rows.size() == 5);
  c.k = "2";
  const Report d = run(c);
  CHECK(d.pass);
  CHECK(d.rows.size() == 1);
  CHECK(d.rows[0][1] == "x2^3");
}

TEST_CASE("series reports") {
  auto c = config("series", "rr_sum");
  c.series_order = 6;
  CHECK(run(c).notes[0] == "H_1 coeffs: 1, 1, 1, 1, 2, 2, 3");
  c = config("series", "node");
  c.series_order = 2;
  c.check = true;
  const Report n = run(c);
  CHECK(n.notes[0] == "HP(S/J) coeffs: 1, 2, 4");
  CHECK(n.pass);
  c = config("series", "hnl");
  c.n = 1;
  c.series_order = 5;
  CHECK(run(c).notes[0] == "H_n^l coeffs: 1, 0, 0, 0, 0, 0");
  c = config("series", "ab");
  c.k = "2";
  c.i = 3;
  c.series_order = 40;
  c.check = true;
  CHECK(run(c).pass);
  c = config("series", "bogus");
  CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("partitions report") {
  auto c = config("partitions", "gap2");
  c.n = 6;
  c.check = true;
  const Report r = run(c);
  CHECK(r.pass);
  CHECK(r.rows.size() == 3);
  CHECK(r.rows[1][0] == "5+1");
}

TEST_CASE("rendering is deterministic") {
  auto c = config("identity", "rrnm2");
  c.range = "1..40";
  c.k = "1..3";
  const std::string a = run(c).render("json");
  const std::string b = run(c).render("json");
  CHECK(a == b);
  const auto env = nlohmann::json::parse(a);
  CHECK(env.contains("command"));
  CHECK(env.contains("config"));
  CHECK(env.contains("results"));
  CHECK(env["pass"] == true);
  const std::string csv = run(c).render("csv");
  CHECK(csv.rfind("k,n,left,right,series,ok\n", 0) == 0);
  CHECK_THROWS_AS(run(c).render("xml"), std::invalid_argument);
}
