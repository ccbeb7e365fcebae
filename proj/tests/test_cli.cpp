#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "stacky/cli.hpp"
#include "stacky/document.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace stacky;
using namespace stacky::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, bool color = false) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, color);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("stacky_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

std::string gallery_file(const std::string& name) {
  const Run r = run({"gallery", name});
  REQUIRE(r.code == 0);
  return write_temp(name, r.out);
}

json report_json(const std::string& path) {
  const Run r = run({"report", path, "--json"});
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

IntVector csv_vector(const std::string& field) {
  IntVector v;
  std::istringstream in(field.substr(1, field.size() - 2));
  for (long x; in >> x;) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("validate: valid, invalid and malformed input") {
  const Run ok = run({"validate", gallery_file("p2")});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  const std::string dependent =
      write_temp("dependent", R"({"group": {"rank": 2, "torsion": []}, "beta": [[1, 0], [2, 0], [0, 1]],
                                   "max_cones": [[0, 1], [2]]})");
  const Run bad = run({"validate", dependent});
  CHECK(bad.code == 2);
  const json j = json::parse(bad.out);
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["kind"] == "simpliciality");

  CHECK(run({"validate", write_temp("malformed", "{\"group\": ")}).code == 1);
  CHECK(run({"validate", "/nonexistent/stacky.json"}).code == 1);
  CHECK(run({"validate", write_temp("schema", R"({"group": {"rank": 1}, "beta": [[1, 2]], "max_cones": []})")}).code == 1);
  CHECK(run({"validate", write_temp("zero-torsion",
                                    R"({"group": {"rank": 1, "torsion": [0]}, "beta": [[1, 0]], "max_cones": [[0]]})")})
            .code == 1);
}

TEST_CASE("validate: polytope problems") {
  const std::string unbounded = write_temp("unbounded", R"({"group": {"rank": 2, "torsion": []},
      "beta": [[1, 0], [0, 1]], "offsets": ["0", "0"]})");
  const Run r = run({"validate", unbounded});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["violations"][0]["kind"] == "unbounded");

  const std::string mismatch = write_temp("mismatch", R"({"group": {"rank": 2, "torsion": []},
      "beta": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1]], "offsets": ["0", "0", "1"]})");
  CHECK(json::parse(run({"validate", mismatch}).out)["violations"][0]["kind"] == "cones-mismatch");
}

TEST_CASE("report: gallery examples") {
  const json z2 = report_json(gallery_file("z2-example"));
  CHECK(z2["is_global_quotient"] == true);
  CHECK(z2["pi1"]["rank"] == 0);
  CHECK(z2["pi1"]["torsion"] == json::array({4}));

  const json z4 = report_json(gallery_file("z4-example"));
  CHECK(z4["is_global_quotient"] == false);
  CHECK(z4["global_quotient_witness"]["cone"] == json::array({1}));

  const json p2 = report_json(gallery_file("p2"));
  CHECK(p2["is_smooth"] == true);
  CHECK(p2["is_manifold"] == true);

  const Run pretty = run({"report", gallery_file("wps-1-2")});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("{2}   Z/2") != std::string::npos);
  CHECK(pretty.out.find("\033[") == std::string::npos);
}

TEST_CASE("cover: z2 example covers by CP^1, smooth input is unchanged") {
  const json z2 = json::parse(run({"cover", gallery_file("z2-example")}).out);
  CHECK(z2["group"] == json({{"rank", 1}, {"torsion", json::array()}}));
  CHECK(z2["beta"] == json::array({json::array({1}), json::array({-1})}));

  const std::string p2 = gallery_file("p2");
  CHECK(json::parse(run({"cover", p2}).out) == to_json(parse_document_text(run({"gallery", "p2"}).out).document));

  const json sheared = json::parse(run({"cover", gallery_file("sheared-a1-2-m112")}).out);
  CHECK(sheared["beta"] == json::parse("[[-1, -1], [1, 0], [0, 1]]"));
}

// The cover has the same N'_sigma and im(beta') = N', so it is a global
// quotient exactly when the input is; in that case it is a manifold.
TEST_CASE("cover output reports trivial pi1 and keeps the global quotient status") {
  int quotients = 0;
  for (const auto& e : gallery()) {
    const std::string path = gallery_file(e.name);
    const Run cover = run({"cover", path});
    REQUIRE(cover.code == 0);
    const json rep = report_json(write_temp(e.name + "-cover", cover.out));
    const bool gq = report_json(path)["is_global_quotient"];
    CHECK(rep["pi1_order"] == "1");
    CHECK(rep["is_global_quotient"] == gq);
    if (gq) {
      CHECK(rep["is_smooth"] == true);
      ++quotients;
    }
  }
  CHECK(quotients >= 6);
}

TEST_CASE("gallery listing, parametrized families and unknown names") {
  const Run list = run({"gallery"});
  CHECK(list.code == 0);
  for (const char* name :
       {"p1", "p2", "wps-1-2", "sheared-a1-2-m112", "trapezoid", "z2-example", "z4-example", "surjective-torsion"})
    CHECK(list.out.find(name) != std::string::npos);
  CHECK(gallery().size() >= 8);

  const json t = json::parse(run({"gallery", "trapezoid", "--a", "1,2", "--m", "2,3,5,7"}).out);
  // Columns of [[-m1 a1, 0, m3, 0], [-m1 a2, m2, 0, -m4]].
  CHECK(t["beta"] == json::parse("[[-2, -4], [0, 3], [5, 0], [0, -7]]"));

  const Run unknown = run({"gallery", "nope"});
  CHECK(unknown.code != 0);
  CHECK(unknown.err.find("z2-example") != std::string::npos);
  CHECK(run({"gallery", "trapezoid", "--a", "2,2", "--m", "1,1,1,1"}).code != 0);
}

TEST_CASE("sweep agrees with the closed forms") {
  const Run sheared = run({"sweep", "sheared-simplex", "--dim", "2", "--a-max", "3", "--m-max", "4", "--csv"});
  REQUIRE(sheared.code == 0);
  auto lines = csv_lines(sheared.out);
  CHECK(lines.size() == 1 + 448);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream in(lines[i]);
    for (std::string s; std::getline(in, s, ',');) f.push_back(s);
    REQUIRE(f.size() == 4);
    CHECK((f[2] == "true") == sheared_simplex_predicate(csv_vector(f[0]), csv_vector(f[1])));
  }

  const Run trap = run({"sweep", "trapezoid", "--csv"});
  lines = csv_lines(trap.out);
  CHECK(lines.size() == 1 + 243);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream in(lines[i]);
    for (std::string s; std::getline(in, s, ',');) f.push_back(s);
    CHECK((f[2] == "true") == trapezoid_predicate(csv_vector(f[0]), csv_vector(f[1])));
  }

  CHECK(run({"sweep", "sheared-simplex", "--a-max", "0"}).code != 0);
  CHECK(run({"sweep", "hexagon"}).code != 0);
  CHECK(run({"sweep", "trapezoid"}).out.find("243 cases") != std::string::npos);
}

TEST_CASE("documents and reports round-trip through JSON") {
  for (const auto& e : gallery()) {
    const json j = to_json(e.document);
    CHECK(parse_document(j).document == e.document);
    CHECK(parse_document(j).warnings.empty());
    const AnalysisReport r = analyze(e.document);
    CHECK(report_from_json(json::parse(report_to_json(r).dump())) == r);
  }
  for (const auto& d : fan_corpus(20)) {
    const AnalysisReport r = analysis_report(StackyFan(d));
    CHECK(report_from_json(report_to_json(r)) == r);
  }
}

TEST_CASE("big integers travel as strings") {
  const std::string big = "123456789012345678901234567890";
  const std::string path = write_temp("big", R"({"group": {"rank": 1, "torsion": []},
      "beta": [[")" + big + R"("], [-1]], "max_cones": [[0], [1]]})");
  const json rep = report_json(path);
  CHECK(rep["input"]["beta"][0][0] == big);
  CHECK(rep["pi1_order"] == "1");
  // P(1, big): not a global quotient.
  CHECK(rep["is_global_quotient"] == false);
  const json wide = report_json(write_temp("big-torsion", R"({"group": {"rank": 1, "torsion": []},
      "beta": [[")" + big + R"("], ["-)" + big + R"("]], "max_cones": [[0], [1]]})"));
  CHECK(wide["pi1"]["torsion"][0] == big);
}

TEST_CASE("non-canonical torsion is canonicalized with a warning") {
  const ParsedDocument p = parse_document_text(R"({"group": {"rank": 1, "torsion": [2, 3]},
      "beta": [[1, 1, 0], [-1, 0, 1]], "max_cones": [[0], [1]]})");
  CHECK(p.document.group == FgAbGroup(1, {6}));
  CHECK(p.warnings.size() == 1);
  // Free coordinates are untouched.
  CHECK(p.document.beta.row(0) == IntVector{1, -1});
  const ParsedDocument q = parse_document_text(R"({"group": {"rank": 1, "torsion": [6, 2]},
      "beta": [[1, 0, 0], [-1, 0, 0]], "max_cones": [[0], [1]]})");
  CHECK(q.document.group == FgAbGroup(1, {2, 6}));
  const Run r = run({"validate", write_temp("noncanonical", to_json(p.document).dump())});
  CHECK(r.code == 0);
  CHECK(run({"validate", write_temp("noncanonical-raw", R"({"group": {"rank": 1, "torsion": [2, 3]},
      "beta": [[1, 1, 0], [-1, 0, 1]], "max_cones": [[0], [1]]})")}).err.find("warning") != std::string::npos);
}

TEST_CASE("STACKY_COLOR overrides the terminal default") {
  const std::string path = gallery_file("p1");
  setenv("STACKY_COLOR", "never", 1);
  CHECK(run({"report", path}, true).out.find("\033[") == std::string::npos);
  setenv("STACKY_COLOR", "always", 1);
  CHECK(run({"report", path}, false).out.find("\033[") != std::string::npos);
  unsetenv("STACKY_COLOR");
  CHECK(run({"report", path}, true).out.find("\033[") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}
