#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using gelfand::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  Json report;
  std::string text;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Json report;
  if (!out.str().empty() && out.str().front() == '{') report = Json::parse(out.str());
  return {code, report, out.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("anisotropic over F3") {
  const auto r = invoke({"anisotropic", "--field", "Fp(3)", "--m", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.report["instances"][0]["verification"]["points_checked"] == 27);
  CHECK(r.report["totals"]["passed"] == 1);
}

TEST_CASE("anisotropic over Q with x^2+1") {
  const auto r = invoke({"anisotropic", "--field", "Q", "--witness", "x^2+1", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.report["instances"][0]["form"] == "x1^2 + x2^2");
  CHECK(r.report["instances"][0]["verification"].contains("note"));
}

TEST_CASE("anisotropic valuation mode") {
  const auto r = invoke({"anisotropic", "--field", "Q", "--p", "5", "--n", "2..3", "--samples", "50"});
  CHECK(r.code == 0);
  CHECK(r.report["instances"].size() == 2);
  for (const auto& instance : r.report["instances"]) CHECK(instance["verification"]["mode"] == "valuation");
}

TEST_CASE("anisotropic rejects m = 1 and bases with roots") {
  const auto r = invoke({"anisotropic", "--field", "Fp(2)", "--m", "1"});
  CHECK(r.code == 2);
  CHECK(r.report["error"]["message"].get<std::string>().find("m >= 2") != std::string::npos);
  CHECK(invoke({"anisotropic", "--field", "Fp(5)", "--witness", "x^2+1"}).code == 2);
  CHECK(invoke({"anisotropic", "--field", "Fp(4)"}).code == 2);
}

TEST_CASE("gelfand commands") {
  const auto r = invoke({"gelfand", "--field", "Fp(2)", "--space", "3", "--oracle"});
  CHECK(r.code == 0);
  const auto& instance = r.report["instances"][0];
  CHECK(instance["bijective"] == true);
  CHECK(instance["topology_match"] == true);
  CHECK(instance["oracle_agrees"] == true);

  CHECK(invoke({"gelfand", "--field", "Fq(2,2,t^2+t+1)", "--space", "1"}).code == 0);

  const auto sweep = invoke({"gelfand", "--field", "Fp(2),Fp(3)", "--space", "1..5"});
  CHECK(sweep.code == 0);
  CHECK(sweep.report["instances"].size() == 10);
  CHECK(sweep.report["totals"]["passed"] == 10);
}

TEST_CASE("cover commands") {
  const auto f5 = temp_file("gelfand_cli_f5.txt", "# two functions\n1,0\n\n0,1\n");
  const auto r = invoke({"cover", "--field", "Fp(5)", "--functions", f5, "--case", "3"});
  CHECK(r.code == 0);
  CHECK(r.report["instances"][0]["witness"] == Json::array({"1", "4"}));

  const auto random = invoke({"cover", "--field", "Fq(3,2)", "--random", "3", "--space", "4", "--seed", "9", "--case", "2"});
  CHECK(random.code == 0);
  CHECK(random.report["instances"][0]["mode"] == "CaseII");
  CHECK(random.report["instances"][0]["pass"] == true);

  const auto zero = temp_file("gelfand_cli_zero.txt", "1,0\n1,0\n");
  const auto bad = invoke({"cover", "--field", "Fp(5)", "--functions", zero, "--case", "all"});
  CHECK(bad.code == 2);
  CHECK(bad.report["error"]["error"] == "CommonZero");
  CHECK(bad.report["error"]["point"] == 1);
}

TEST_CASE("case all marks exhausted avoidance as skipped") {
  const auto f2 = temp_file("gelfand_cli_f2.txt", "1,0\n1,1\n");
  const auto all = invoke({"cover", "--field", "Fp(2)", "--functions", f2, "--case", "all"});
  CHECK(all.code == 0);
  CHECK(all.report["instances"].back()["skipped"] == true);
  CHECK(invoke({"cover", "--field", "Fp(2)", "--functions", f2, "--case", "3"}).code == 2);
}

TEST_CASE("field find-rootfree") {
  const auto r = invoke({"field", "find-rootfree", "--field", "Fp(3)", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.report["instances"][0]["polynomial"] == "x^2 + 1");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"anisotropic"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"gelfand", "--field", "Fp(2)", "--space", "x"}).code == 2);
}

TEST_CASE("helpers") {
  using gelfand::cli::parse_range;
  using gelfand::cli::split_top_level;
  CHECK(parse_range("1..4") == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(parse_range("2,5") == std::vector<std::uint64_t>{2, 5});
  CHECK(split_top_level("Fp(2),Fq(2,2,t^2+t+1),Q", ',') ==
        std::vector<std::string>{"Fp(2)", "Fq(2,2,t^2+t+1)", "Q"});
}

TEST_CASE("reports are identical apart from timing") {
  auto strip = [](Outcome o) {
    o.report.erase("wall_time_ms");
    return o.report.dump();
  };
  const std::vector<std::string> args = {"anisotropic", "--field", "Q(sqrt(-1))", "--n", "1..3", "--seed", "4"};
  CHECK(strip(invoke(args)) == strip(invoke(args)));
}
