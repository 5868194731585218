#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlab/families.hpp"
#include "twistlab/json_io.hpp"
#include "twistlab/standard.hpp"

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace twistlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("TWISTLAB_BIN");
  return b ? b : "./twistlab";
}

Run run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string write_tmp(const std::string& name, const std::string& body) {
  auto path = fs::temp_directory_path() / ("twistlab_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string family_file(const std::string& name, const TwistingFamily& f) {
  return write_tmp(name + ".json", family_to_json(f).dump());
}

}  // namespace

TEST_CASE("verify") {
  auto ok = run("verify " + family_file("flip", flip(2, 3)));
  CHECK(ok.rc == 0);
  auto j = json::parse(ok.out);
  CHECK(j["is_twisting"] == true);
  CHECK(j["violations"].empty());

  auto bad = flip(2, 2);
  bad.A(0, 0) = Mat::zero(2);
  auto r = run("verify " + family_file("bad", bad));
  CHECK(r.rc == 0);
  auto v = json::parse(r.out);
  CHECK(v["is_twisting"] == false);
  bool c3 = false;
  for (const auto& w : v["violations"])
    if (w["cond"] == "C3" && w["witness"]["l"] == 1) c3 = true;
  CHECK(c3);

  auto piped = run("family 2x2 --a 3 | " + bin() + " verify -");
  CHECK(piped.rc == 0);
  CHECK(json::parse(piped.out)["is_twisting"] == true);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("verify " + write_tmp("junk.json", "{not json")).rc == 2);
  CHECK(run("verify " + write_tmp("short.json", R"({"m":2,"n":2,"A":[]})")).rc == 2);
  CHECK(run("verify " + write_tmp("rat.json", R"({"m":1,"n":1,"A":[[[["1/0"]]]]})")).rc == 2);
  CHECK(run("verify /nonexistent/file.json").rc == 2);
  CHECK(run("enumerate-standard --m 2").rc != 0);
  CHECK(run("no-such-command").rc != 0);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run("enumerate-standard --m 4 --n 4").rc == 1);
  CHECK(run("quiver " + family_file("a2", family_2x2(2))).rc == 1);
  auto f = family_file("flip33", flip(3, 3));
  CHECK(run("deform " + f + " --site 1,1,2,2,1,3 --lambda 1").rc == 1);
  CHECK(run("family sumtr3_allones --a 1").rc == 1);
}

TEST_CASE("enumeration and tables") {
  auto e = run("enumerate-standard --m 2 --n 2 --format json");
  CHECK(e.rc == 0);
  CHECK(json::parse(e.out).size() == 7);
  auto t = run("classify-table --m 3 --n 2");
  CHECK(t.rc == 0);
  CHECK(t.out.find("| ") != std::string::npos);
  auto tj = json::parse(run("classify-table --m 3 --n 2 --format json").out);
  CHECK(tj["total"] == 55);
  CHECK(tj["classes"].size() == 7);
  auto csv = run("classify-table --m 2 --n 2 --format csv").out;
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header and three classes
}

TEST_CASE("quiver output") {
  auto f = family_file("flip22", flip(2, 2));
  auto g = run("quiver " + f);
  CHECK(g.rc == 0);
  CHECK(g.out == "• •\n• •\n");
  auto d = run("quiver --dot " + f);
  CHECK(d.out.rfind("digraph", 0) == 0);
  auto j = json::parse(run("quiver --format json " + f).out);
  CHECK(j["arrows"].empty());
}

TEST_CASE("radical, sites, deform, rep") {
  auto r = json::parse(run("family 2x2 --a 0 | " + bin() + " radical -").out);
  CHECK(r["dim"] == 2);  // two vertices, two arrows
  CHECK(r["square_zero"] == true);

  // three-arrow quiver with one site
  auto f = enumerate_standard(3, 3);
  std::string path;
  for (const auto& h : f) {
    auto s = run("sites " + family_file("probe", h));
    auto sj = json::parse(s.out);
    if (sj.size() == 1 && sj[0]["admissible"] == true) {
      path = family_file("one_site", h);
      break;
    }
  }
  REQUIRE_FALSE(path.empty());
  auto sj = json::parse(run("sites " + path).out);
  std::string site;
  for (const auto& x : sj[0]["site"]) site += (site.empty() ? "" : ",") + std::to_string(x.get<int>());
  auto dj = run("deform " + path + " --site " + site + " --lambda 2");
  CHECK(dj.rc == 0);
  auto g = family_from_json(json::parse(dj.out));
  CHECK(is_twisting(g));

  auto rep = run("family 2x2 --a 2 | " + bin() + " rep - --index 1 --side B");
  CHECK(rep.rc == 0);
  auto rj = json::parse(rep.out);
  CHECK(rj["multiplicative"] == true);
  CHECK(rj["image_dim"] == 4);
  CHECK(rj["images"].size() == 4);
}

TEST_CASE("families") {
  for (std::string cmd : {"family flip --m 2 --n 3", "family 2x2 --a 1/2", "family sumtr6_222 --a 2 --variant 2",
                          "family sumtr3_allones --a 3", "family sumtr3_mixed --a 2 --x 1 --y 3",
                          "family sumtr5 --a 2 --z 1", "family crossproduct_xi --vector 1,2,3 --vector 1,-1,2"}) {
    auto r = run(cmd);
    CHECK_MESSAGE(r.rc == 0, cmd);
    auto f = family_from_json(json::parse(r.out));
    CHECK_MESSAGE(is_twisting(f), cmd);
  }
  auto p = run("family non_quasi_column --alpha 2 --z 1");
  CHECK(p.rc == 0);
  CHECK(json::parse(p.out).size() == 3);
}
