#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "orelclm/algorithms.hpp"

using namespace orelclm;
using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string kPair = R"({"p":2147483647,"ops":[[[0],[1]],[[2147483646],[1]]]})";

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("lclm command output") {
    auto r = run({"lclm", "--algorithm", "new"}, kPair);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"p\":2147483647,\"ops\":[[[0],[2147483646],[1]]]}\n"
          "order: 2\ndegree: 0\nsize: 3\nalgorithm: new\n");
    for (const auto& tag : {"heffter", "euclid", "ext-euclid", "li", "vanhoeij", "heuristic", "dac:li", "iter:new"}) {
      auto o = run({"lclm", "-a", tag}, kPair);
      CHECK(o.code == 0);
      CHECK_MESSAGE(first_line(o.out) == first_line(r.out), tag);
    }
  }

  TEST_CASE("dac on three operators equals new") {
    const std::string three = R"({"p":2147483647,"ops":[[[0],[1]],[[-1],[1]],[[-1],[0,1]]]})";
    auto a = run({"lclm", "--algorithm", "dac:heffter"}, three);
    auto b = run({"lclm", "--algorithm", "new"}, three);
    CHECK(a.code == 0);
    CHECK(first_line(a.out) == first_line(b.out));
  }

  TEST_CASE("exit codes") {
    CHECK(run({"lclm", "--algorithm", "fastest"}, kPair).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto bad = run({"lclm"}, R"({"p": 9, "ops": [[[1]]]})");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("$.p") != std::string::npos);
    CHECK(run({"lclm"}, "{\"p\": 7, \"ops\": [[[1]]").code == 1);
    CHECK(run({"lclm", "/nonexistent/file.json"}).code == 1);
  }

  TEST_CASE("json envelope") {
    auto r = run({"lclm", "--json"}, kPair);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"] == 2);
    CHECK(j["degree"] == 0);
    CHECK(j["size"] == 3);
    CHECK(j["rank"] == 6);
    CHECK(j["algorithm"] == "new");
    CHECK(j["operator"].dump() == "[[0],[2147483646],[1]]");
  }

  TEST_CASE("gcrd, mul and clm commands") {
    const std::string doc = R"({"p":7,"ops":[[[0],[6],[1]],[[6],[1]]]})";
    CHECK(first_line(run({"gcrd"}, doc).out) == R"({"p":7,"ops":[[[6],[1]]]})");
    CHECK(first_line(run({"mul"}, R"({"p":7,"ops":[[[0],[1]],[[0,1]]]})").out) == R"({"p":7,"ops":[[[1],[0,1]]]})");
    auto c = run({"clm"}, kPair);
    CHECK(c.code == 0);
    CHECK(c.out.find("total_degree: ") != std::string::npos);
  }

  TEST_CASE("random documents") {
    auto a = run({"random", "--count", "2", "--degree", "2", "--order", "2", "--seed", "42"});
    auto b = run({"random", "--count", "2", "--degree", "2", "--order", "2", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = parse_operators(a.out);
    REQUIRE(doc.ops.size() == 2);
    for (const auto& L : doc.ops) {
      CHECK(L.order() == 2);
      CHECK(degree(L) <= 2);
    }
    auto c = parse_operators(run({"random", "-k", "1", "-d", "0", "-r", "0", "--seed", "3"}).out);
    REQUIRE(c.ops.size() == 1);
    CHECK(c.ops[0].order() == 0);
    CHECK_FALSE(c.ops[0].is_zero());
    CHECK(parse_operators(run({"random", "--prime", "7"}).out).field.prime() == 7);
  }

  TEST_CASE("bench output sizes") {
    auto r = run({"bench", "--n", "2,3", "--algorithm", "new,heffter"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,k,algorithm,seed,time_ms,order,degree,size");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].starts_with("2,2,new,1,"));
    CHECK(rows[0].ends_with(",4,12,65"));
    CHECK(rows[1].ends_with(",4,12,65"));
    CHECK(rows[2].starts_with("3,2,new,1,"));
    CHECK(rows[3].ends_with(",6,24,175"));
    CHECK(run({"bench", "--algorithm", "nope"}).code == 2);
  }

  TEST_CASE("selfcheck") {
    auto a = run({"selfcheck", "--trials", "6", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out == run({"selfcheck", "--trials", "6", "--seed", "5"}).out);
    auto f = run({"selfcheck", "--trials", "1", "--force-failure"});
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL divisibility") != std::string::npos);
    CHECK(f.out.find("seed 1") != std::string::npos);
  }

  TEST_CASE("bench record size column") {
    auto rec = cli::bench_case(kBig, 2, 2, "new", 7);
    CHECK(rec.size == static_cast<long>(rec.order + 1) * (rec.degree + 1));
    CHECK(cli::to_csv(rec).starts_with("2,2,new,7,"));
  }
}
