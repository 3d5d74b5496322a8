#include <doctest.h>

#include <sstream>

#include "steinermat/cli.hpp"

using namespace steinermat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kSample = "0 1\n1 2\n2 3\n3 4\n1 5\n2 6\n2 7\n";

}  // namespace

TEST_CASE("gen") {
  CHECK(invoke({"gen", "path", "--n", "3"}).out == "0 1\n1 2\n2 3\n");
  Result r = invoke({"gen", "caterpillar", "--n", "4", "--leaves", "1,2,0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0 1\n1 2\n1 5\n2 3\n2 6\n2 7\n3 4\n");
  CHECK(invoke({"gen", "caterpillar", "--n", "4", "--leaves", "1,x,0"}).code == cli::kExitUsage);
  CHECK(invoke({"gen", "caterpillar", "--n", "4", "--leaves", "1,2"}).code == cli::kExitUsage);
  CHECK(invoke({"gen", "caterpillar", "--n", "4", "--leaves", "1,2,"}).code == cli::kExitUsage);
  CHECK(invoke({"gen", "path", "--n", "0"}).code == cli::kExitUsage);
}

TEST_CASE("dk") {
  Result r = invoke({"dk", "--k", "2"}, kSample);
  CHECK(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("X,0|1,0|2,", 0) == 0);
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  CHECK(count == 28);

  Result canon = invoke({"dk", "--k", "2", "--order", "canonical"}, kSample);
  CHECK(canon.out.rfind("X,0|1,0|2,0|3,0|4,1|4,2|4,3|4,0|5,0|6,0|7,", 0) == 0);
  CHECK(canon.out.find("\n0|5,2,3,4,5,5,5,5,2,4,4,") != std::string::npos);

  Result json = invoke({"dk", "--k", "3", "--format", "json"}, "0 1\n1 2\n");
  CHECK(json.out == "{\"labels\":[[0,1,2]],\"entries\":[[\"2\"]]}\n");

  Result too_big = invoke({"dk", "--k", "9"}, kSample);
  CHECK(too_big.code == cli::kExitUsage);
  CHECK_FALSE(too_big.err.empty());
  CHECK(invoke({"dk", "--k", "2"}, "0 1\n1 2\n2 0\n").code == cli::kExitUsage);
  CHECK(invoke({"dk", "--k", "2", "--format", "xml"}, kSample).code == cli::kExitUsage);
  CHECK(invoke({"dk", "--k", "3", "--order", "canonical"}, kSample).code == cli::kExitUsage);
}

TEST_CASE("rank") {
  Result r = invoke({"rank"}, kSample);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "{\"N\":8,\"p\":5,\"rank\":10,\"is_caterpillar\":true,\"formula_value\":10}\n");
}

TEST_CASE("verify") {
  Result all = invoke({"verify", "--check", "all", "--n", "4", "--leaves", "1,2,0", "--no-timing"});
  CHECK(all.code == cli::kExitOk);
  int lines = 0;
  for (char c : all.out) lines += c == '\n';
  CHECK(lines == 11);
  CHECK(all.out.find("elapsed_ms") == std::string::npos);
  CHECK(all.out.find("\"pass\":false") == std::string::npos);

  CHECK(invoke({"verify", "--check", "path-inverse", "--n", "6"}).code == cli::kExitOk);
  CHECK(invoke({"verify", "--check", "rank"}, kSample).code == cli::kExitOk);
  CHECK(invoke({"verify", "--check", "schur"}, kSample).code == cli::kExitOk);
  CHECK(invoke({"verify", "--check", "bogus", "--n", "3"}).code == cli::kExitUsage);
  const char* spider = "0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
  CHECK(invoke({"verify", "--check", "rank"}, spider).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--check", "graham-lovasz"}, spider).code == cli::kExitOk);
}

TEST_CASE("survey") {
  Result r = invoke({"survey", "--max", "4", "--jobs", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("N,tree_id,prufer,rank,is_caterpillar,formula_value,match\n", 0) == 0);
  CHECK(invoke({"survey", "--max", "12"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors and help") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
  CHECK(invoke({"gen", "path"}).code == cli::kExitUsage);
}
