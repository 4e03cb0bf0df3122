#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fusionburnside/cli.hpp"

using namespace fusionburnside;

namespace {

struct Result
{
  int status = 0;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> const &args)
{
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(std::string const &name, std::string const &contents)
{
  auto dir = std::filesystem::temp_directory_path() / "fusionburnside-test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << contents;
  return path.string();
}

std::size_t line_count(std::string const &text)
{ return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::string const kS5Header = "8:0,4:0,4:1,4:2,2:0,2:1,2:2,1:0\n";

} // namespace

TEST_CASE("demo walkthrough")
{
  auto r = run_args({"demo"});
  CHECK(r.status == 0);
  CHECK(r.out.find("5·[D8/1]") != std::string::npos);
  CHECK(r.out.find("3·[D8/1]") != std::string::npos);
  CHECK(r.out.find("15·[D8/1]") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("classes and marks")
{
  auto r = run_args({"classes", "--catalog", "D8", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(line_count(r.out) == 9);
  CHECK(r.out.rfind("label,order,class_size,normalizer_order,weyl_order\n", 0) == 0);
  CHECK(r.out.find("2:2,2,1,8,4\n") != std::string::npos);

  auto marks = run_args({"marks", "--catalog", "C2", "--format", "json"});
  CHECK(marks.status == 0);
  auto json = nlohmann::json::parse(marks.out);
  CHECK(json["1:0"]["1:0"] == 2);
  CHECK(json["2:0"]["1:0"] == 0);
  CHECK(json["1:0"]["2:0"] == 1);

  auto text = run_args({"marks", "--catalog", "Q8"});
  CHECK(text.status == 0);
  CHECK(line_count(text.out) == 7);
}

TEST_CASE("csv output is byte-identical across runs")
{
  for (auto const *cmd : {"classes", "marks", "fusion", "alpha"}) {
    CAPTURE(std::string(cmd));
    auto a = run_args({cmd, "--catalog", "S5", "--prime", "2", "--format", "csv"});
    auto b = run_args({cmd, "--catalog", "S5", "--prime", "2", "--format", "csv"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("fusion and alpha output")
{
  auto f = run_args({"fusion", "--catalog", "S5", "--prime", "2"});
  CHECK(f.status == 0);
  CHECK(f.out.find("[2:1]_F: 2:1* 2:2") != std::string::npos);

  auto a = run_args({"alpha", "--catalog", "S5", "--prime", "2", "--format", "csv"});
  CHECK(a.status == 0);
  CHECK(a.out.find("2:1,2:1,0,0,0,0,0,1,2,0\n") != std::string::npos);

  auto j = run_args({"alpha", "--catalog", "S4", "--format", "json"});
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.out).is_object());
}

TEST_CASE("verify")
{
  auto r = run_args({"verify", "--catalog", "C2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("[fail]") == std::string::npos);

  auto seeded = run_args({"verify", "--catalog", "S5", "--prime", "2", "--seed", "7",
                          "--format", "json"});
  CHECK(seeded.status == 0);
  auto json = nlohmann::json::parse(seeded.out);
  CHECK(json.is_object());
}

TEST_CASE("group files")
{
  auto path = temp_file("d8.txt", "# dihedral of order 8\ndegree 4\n(1 2 3 4)\n(1 3)\n");
  auto file = run_args({"classes", "--group", path, "--format", "csv"});
  auto cat = run_args({"classes", "--catalog", "D8", "--format", "csv"});
  CHECK(file.status == 0);
  CHECK(file.out == cat.out);

  auto s3 = temp_file("s3.txt", "degree 3\n(1 2)\n(1 2 3)\n");
  CHECK(run_args({"classes", "--group", s3}).status == 2);
  CHECK(run_args({"fusion", "--group", s3, "--prime", "3"}).status == 0);

  auto bad = temp_file("bad.txt", "degree 3\n(1 4)\n");
  auto r = run_args({"classes", "--group", bad});
  CHECK(r.status == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("decompose")
{
  auto five = temp_file("five.csv", kS5Header + "0,0,0,0,0,0,0,5\n");
  auto r = run_args({"decompose", "--catalog", "S5", "--element", five, "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "8:0,4:0,4:1,4:2,2:0,2:1,1:0\n0,0,0,0,0,0,5\n");

  auto alpha = temp_file("alpha.csv", kS5Header + "0,0,0,0,0,1,2,0\n");
  auto a = run_args({"decompose", "--catalog", "S5", "--element", alpha, "--format", "json"});
  CHECK(a.status == 0);
  auto json = nlohmann::json::parse(a.out);
  CHECK(json["2:1"] == 1);
  CHECK(json["1:0"] == 0);

  auto z = temp_file("z.csv", kS5Header + "0,0,0,0,0,1,0,0\n");
  auto bad = run_args({"decompose", "--catalog", "S5", "--element", z});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("not F-stable") != std::string::npos);
  CHECK(bad.err.find("[2:1]") != std::string::npos);
  CHECK(bad.err.find("[2:2]") != std::string::npos);

  CHECK(run_args({"decompose", "--catalog", "S5"}).status == 2);
  auto junk = temp_file("junk.csv", "8:0\n1\n");
  CHECK(run_args({"decompose", "--catalog", "S5", "--element", junk}).status == 2);
}

TEST_CASE("malformed input exits with status 2")
{
  auto unknown = run_args({"classes", "--catalog", "Z9"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("available") != std::string::npos);
  CHECK(unknown.err.find("D8") != std::string::npos);

  CHECK(run_args({"classes"}).status == 2);
  CHECK(run_args({"frobnicate", "--catalog", "D8"}).status == 2);
  CHECK(run_args({"classes", "--catalog", "D8", "--prime", "4"}).status == 2);
  CHECK(run_args({"classes", "--catalog", "D8", "--format", "xml"}).status == 2);
  CHECK(run_args({"classes", "--catalog", "D8", "--group", "x.txt"}).status == 2);
  CHECK(run_args({"classes", "--group", "/nonexistent/file.txt"}).status == 2);
  CHECK(run_args({"--help"}).status == 0);
}
