#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "delaunay4/io.hpp"
#include "support.hpp"

namespace d4 {
namespace {

using io::json;

std::string parse_error(const std::string& text) {
  try {
    io::form_from_json(io::parse_text(text, "form"));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    return e.what();
  }
  ADD_FAILURE() << "accepted " << text;
  return {};
}

TEST(FormJson, RoundTrip) {
  QuadraticForm b{{Rational(7, 3), -1}, {-1, 2}};
  auto j = io::to_json(b);
  EXPECT_EQ(j["matrix"][0][0], "7/3");
  EXPECT_EQ(io::form_from_json(j), b);
  EXPECT_EQ(io::form_from_json(io::parse_text(io::dump(j), "x")), b);
}

TEST(FormJson, IntegerEntriesAccepted) {
  EXPECT_EQ(io::form_from_json(json::parse(R"({"rank":2,"matrix":[[2,-1],[-1,2]]})")), test::hexagonal());
}

TEST(FormJson, LocatedErrors) {
  EXPECT_NE(parse_error(R"({"rank":2,"matrix":[["1","0"],["0","x"]]})").find("form.matrix[1][1]"), std::string::npos);
  EXPECT_NE(parse_error(R"({"rank":2,"matrix":[["1","0"]]})").find("form.matrix"), std::string::npos);
  EXPECT_NE(parse_error(R"({"matrix":[]})").find("rank"), std::string::npos);
  EXPECT_NE(parse_error(R"({"rank":2,"matrix":[["1","2"],["0","1"]]})").find("form.matrix"), std::string::npos);
  EXPECT_NE(parse_error(R"({"rank":2, )").find("byte"), std::string::npos);
  EXPECT_NE(parse_error(R"({"rank":7,"matrix":[]})").find("form.rank"), std::string::npos);
}

TEST(CellJson, RoundTripWithCenter) {
  auto c = make_cell(test::hexagonal(), test::sigma1().vertices);
  auto j = io::to_json(c);
  EXPECT_EQ(j["center"], json({"2/3", "1/3"}));
  EXPECT_EQ(j["sq_radius"], "2/3");
  EXPECT_EQ(io::cell_from_json(j), c);
}

TEST(CellJson, LocatedErrors) {
  try {
    io::cells_from_json(json::parse(R"([{"vertices":[[0,0],[1,0]]},{"vertices":[[0,0],[1]]}])"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("pieces[1]"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("cell.vertices[1]"), std::string::npos) << e.what();
  }
}

TEST(StarJson, RoundTrip) {
  auto star = delaunay_star(test::hexagonal());
  auto back = io::star_from_json(io::parse_text(io::dump(io::to_json(star)), "star"));
  EXPECT_EQ(back.form, star.form);
  EXPECT_EQ(back.cells, star.cells);
  EXPECT_EQ(back.orbit_reps, star.orbit_reps);
  for (std::size_t k = 0; k < star.cells.size(); ++k) EXPECT_EQ(back.cells[k].center, star.cells[k].center);
  EXPECT_EQ(io::dump(io::to_json(back)), io::dump(io::to_json(star)));
}

TEST(StarJson, ModTranslationListsReps) {
  auto star = delaunay_star(QuadraticForm::identity(2));
  auto j = io::to_json_mod_translation(star);
  ASSERT_EQ(j["cells"].size(), 1u);
  EXPECT_EQ(j["cells"][0]["vertices"], json::parse("[[0,0],[0,1],[1,0],[1,1]]"));
}

TEST(GenerationJson, Fields) {
  auto r = is_simplicially_generating(test::sigma5(), {test::sigma1(), test::sigma2()});
  auto j = io::to_json(r);
  EXPECT_EQ(j["totally_generating"], true);
  EXPECT_EQ(j["simplicially_generating"], true);
  EXPECT_EQ(j["nilpotency"], "1");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(io::cells_from_json(j["pieces"]), r.decomposition);
  auto bad = io::to_json(is_totally_generating(test::cell({test::zero(2), {1, 0}, {1, 2}})));
  EXPECT_EQ(bad["witness"], json::parse("[1,1]"));
  EXPECT_FALSE(bad.contains("nilpotency"));
}

TEST(CatalogJson, MatchesShippedFile) {
  std::ifstream in(D4_CATALOG_JSON);
  ASSERT_TRUE(in) << D4_CATALOG_JSON;
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), io::dump(io::catalog_to_json()));
}

TEST(CatalogJson, GeneratorsRoundTrip) {
  for (const auto& cone : catalog_entries()) {
    auto j = io::to_json(cone);
    for (std::size_t k = 0; k < cone.generators.size(); ++k) {
      json f{{"rank", cone.ambient_rank}, {"matrix", j["generators"][k]}};
      EXPECT_EQ(io::form_from_json(f), cone.generators[k]) << cone.name << " " << cone.labels[k];
    }
  }
}

TEST(SuiteJson, Shape) {
  SuiteReport r{"x", true, {}};
  r.add("a", true);
  r.add("b", false, "why");
  auto j = io::to_json(r);
  EXPECT_EQ(j["suite"], "x");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["details"][1]["info"], "why");
}

TEST(Dump, CompactScalarArraysAndDeterminism) {
  json j{{"b", {1, 2}}, {"a", json::array({json::array({1}), "x"})}};
  EXPECT_EQ(io::dump(j), "{\n  \"a\": [\n    [1],\n    \"x\"\n  ],\n  \"b\": [1,2]\n}\n");
  EXPECT_EQ(io::dump(json::parse(io::dump(j))), io::dump(j));
  EXPECT_EQ(io::dump(json::array()), "[]\n");
}

TEST(FacesJson, CountsByOrbit) {
  auto j = io::faces_report();
  ASSERT_EQ(j.size(), 64u);
  int bf = 0, rt = 0;
  for (const auto& f : j) {
    bf += f["orbit"] == "BF";
    rt += f["orbit"] == "RT";
    EXPECT_EQ(f["dropped"].size(), 3u);
  }
  EXPECT_EQ(bf, 48);
  EXPECT_EQ(rt, 16);
}

}  // namespace
}  // namespace d4
