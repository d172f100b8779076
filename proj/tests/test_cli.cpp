#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cyclo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

}  // namespace

TEST_CASE("field command") {
  auto r = run({"field", "--p", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "generator: 3"));

  r = run({"field", "--p", "2", "--r", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["field"]["q"] == 16);
  CHECK(j["field"]["modulus"] == nlohmann::json::array({1, 0, 0, 1, 1}));
  CHECK(j["generator"] == nlohmann::json::array({0, 0, 1, 0}));

  CHECK(run({"field", "--p", "4"}).code == 1);
  CHECK(run({"field", "--p", "2", "--r", "2", "--modulus", "1,0,1"}).code == 1);
  CHECK(run({"field"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compute command") {
  auto r = run({"compute", "--p", "7", "--e", "3", "--generator", "3"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "cyclotomic numbers"));

  r = run({"compute", "--p", "7", "--e", "3", "--method", "reps"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "direct entries: 4 of 9 (5 derived by orbit expansion)"));

  r = run({"compute", "--p", "7", "--e", "3", "--family", "jacobi", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "1,1,-1-3*z\n"));
  CHECK(contains(r.out, "2,2,2+3*z\n"));

  r = run({"compute", "--p", "7", "--e", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["entries"] ==
        nlohmann::json::parse("[[0,0,1],[0,1,1],[1,1,0]]"));

  for (const char* family : {"cyclotomic", "jacobi"}) {
    const auto direct = run({"compute", "--p", "5", "--e", "4", "--family", family,
                             "--format", "json"});
    const auto convert = run({"compute", "--p", "5", "--e", "4", "--family", family,
                              "--method", "convert", "--format", "json"});
    const auto reps = run({"compute", "--p", "5", "--e", "4", "--family", family,
                           "--method", "reps", "--format", "json"});
    CHECK(direct.code == 0);
    CHECK(direct.out == convert.out);
    CHECK(direct.out == reps.out);
  }

  CHECK(run({"compute", "--p", "7", "--e", "4"}).code == 1);
  CHECK(run({"compute", "--p", "7", "--e", "3", "--generator", "2"}).code == 1);
  CHECK(run({"compute", "--p", "7", "--e", "3", "--method", "magic"}).code == 1);
}

TEST_CASE("classes command") {
  auto r = run({"classes", "--e", "3"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "enumerated classes: 4"));
  CHECK(contains(r.out, "closed form with +1: 5"));

  CHECK(run({"classes", "--e", "3", "--case", "odd"}).code == 1);

  r = run({"classes", "--e", "6", "--case", "odd", "--family", "jacobi", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["classes"].size() == 10);
  CHECK(j["enumerated_count"] == 10);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--p", "7", "--e", "3", "--generator", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  bool noted = false;
  for (const auto& n : j["notes"]) noted = noted || contains(n.get<std::string>(), "J(2,2)");
  CHECK(noted);
  CHECK_FALSE(j.contains("timing"));

  for (std::vector<std::string> args : {std::vector<std::string>{"--p", "5", "--e", "4"},
                                        std::vector<std::string>{"--p", "2", "--r", "4", "--e", "5"},
                                        std::vector<std::string>{"--p", "13", "--e", "12"}}) {
    args.insert(args.begin(), "verify");
    r = run(args);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["status"] == "pass");
  }

  r = run({"verify", "--p", "13", "--e", "12", "--timing"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("timing"));
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args{"verify", "--p", "3", "--r", "2", "--e", "8"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.out == second.out);

  const auto path = std::filesystem::temp_directory_path() / "cyclo_cli_test.json";
  auto with_file = args;
  with_file.push_back("--out");
  with_file.push_back(path.string());
  const auto r = run(with_file);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == first.out);
  std::filesystem::remove(path);
}
