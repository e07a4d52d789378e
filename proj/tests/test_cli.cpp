#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <random>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = hurwitz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
  const Result r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

} // namespace

TEST_CASE("reports carry a schema and rationals as strings")
{
  const json doc = invoke_json({"hurwitz-table", "--base-genus", "1", "--degree", "3",
                                "--ramification", "2"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "hurwitz-table");
  CHECK(doc["ok"] == true);
  bool found = false;
  for (const auto& e : doc["entries"]) {
    CHECK(e["value"].is_string());
    if (e["g"] == 1 && e["mu"] == json::array({1, 1, 1}) && e["r"] == 0) {
      CHECK(e["value"] == "8/1");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("oracle subcommand")
{
  const json doc = invoke_json({"oracle", "--base-genus", "0", "--mu", "2,1", "--r", "3", "--connected"});
  CHECK(doc["value"] == "4/1");
  const json conn = invoke_json({"oracle", "--base-genus", "0", "--mu", "1,1", "--r", "2",
                                 "--connected"});
  CHECK(conn["value"] == "1/2");
  const Result over = invoke({"oracle", "--base-genus", "2", "--mu", "3,2", "--r", "4", "--budget", "1000"});
  CHECK(over.code == 2);
  CHECK(over.err.find("budget") != std::string::npos);
  CHECK(invoke({"oracle", "--degree", "4", "--mu", "2,1"}).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({"hurwitz-table", "--degree", "-1"}).code == 2);
  CHECK(invoke({"hurwitz-table", "--format", "yaml"}).code == 2);
  CHECK(invoke({"semiclassical", "--base-genus", "1"}).code == 2);
  CHECK(invoke({"elliptic-series", "--base-genus", "2"}).code == 2);
  CHECK(invoke({"verify-pde", "--genus", "1"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verification subcommands succeed")
{
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-caj", "--base-genus", "1", "--degree", "4"},
           {"verify-pde", "--base-genus", "2", "--genus", "2", "--n", "1"},
           {"verify-quantum-curve", "--base-genus", "0"},
           {"verify-schrodinger", "--base-genus", "2"},
           {"verify-commutator"},
           {"z-match", "--x-bound", "4", "--hbar-bound", "5"},
           {"oracle-compare", "--base-genus", "1", "--degree", "3", "--ramification", "3"},
           {"elliptic-series", "--order", "10"},
           {"elliptic-series", "--genus", "2"},
           {"semiclassical", "--base-genus", "0"},
           {"free-energy", "--genus", "2", "--n", "2"}}) {
    CAPTURE(args.front());
    const Result r = invoke(args);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ok"] == true);
  }
}

TEST_CASE("a failing verification exits with 1")
{
  const Result r = invoke({"z-match", "--base-genus", "0", "--x-bound", "3", "--hbar-bound", "3",
                           "--genus-floor", "1"});
  CHECK(r.code == 1);
  const json doc = json::parse(r.out);
  CHECK(doc["ok"] == false);
  CHECK_FALSE(doc["mismatches"].empty());

  const Result thin = invoke({"elliptic-series", "--genus", "2", "--fit-rows", "2"});
  CHECK(thin.code == 1);
  CHECK(json::parse(thin.out)["quasimodular_fit"]["diagnostic"] == "underdetermined");
}

TEST_CASE("text format")
{
  const Result r = invoke({"oracle", "--base-genus", "1", "--mu", "1,1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "2/1\n");
}

TEST_CASE("cold and warm cache give identical reports")
{
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("hurwitz-cli-" + std::to_string(rd()));
  const std::vector<std::string> args{"verify-caj", "--base-genus", "2", "--degree", "5",
                                      "--cache-dir", dir.string()};
  const Result cold = invoke(args);
  CHECK(std::filesystem::exists(dir / "chartab_5.json"));
  const Result warm = invoke(args);
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution")
{
  CHECK(hurwitz::cli::resolve_cache_dir(std::string("/tmp/x")) == std::filesystem::path("/tmp/x"));
}
