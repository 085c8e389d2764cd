#include "doctest.h"

#include <fstream>

#include "digitop/io.hpp"

using namespace digitop;

namespace {

std::string data(const std::string& name) { return std::string(DIGITOP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("image round trip") {
  Image c = circle8();
  CHECK(image_from_json(image_to_json(c)) == c);
  Json j = Json::parse(R"({"dim": 1, "points": [[2], [0], [1]]})");
  CHECK(image_from_json(j) == interval(2));
}

TEST_CASE("map round trip") {
  Map f(interval(2), interval(1), {0, 0, 1});
  Map g = map_from_json(map_to_json(f));
  CHECK(g == f);
  CHECK(g.continuous());
}

TEST_CASE("paths and homotopies") {
  Map p = make_path(diamond(), {{1, 0}, {0, 1}});
  Json j = path_to_json(p);
  CHECK(j["length"] == 1);
  CHECK(path_from_json(j, diamond()) == p);
  Homotopy h = interval_contraction(2);
  Homotopy back = homotopy_from_json(homotopy_to_json(h));
  CHECK(back.stages() == h.stages());
}

TEST_CASE("malformed input names the location") {
  CHECK_THROWS_AS(image_from_json(Json::parse(R"({"dim": 2, "points": [[0, 0], [0, 0]]})")), ParseError);
  try {
    image_from_json(Json::parse(R"({"dim": 2, "points": [[0, 0], [1]]})"), "x.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("x.json") != std::string::npos);
    CHECK(msg.find("/points/1") != std::string::npos);
  }
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"domain": {"dim": 1, "points": [[0]]}})")), ParseError);
  CHECK_THROWS_AS(image_from_json(Json::parse(R"({"dim": 1, "points": [[0.5]]})")), ParseError);
  CHECK_THROWS_AS(load_image(data("broken.json")), ParseError);
  CHECK_THROWS_AS(load_image(data("duplicate.json")), ParseError);
}

TEST_CASE("files") {
  CHECK(load_image(data("diamond.json")) == diamond());
  CHECK(load_map(data("id_D.json")) == identity(diamond()));
  CHECK_THROWS_AS(load_image(data("missing.json")), Error);
}

TEST_CASE("fixtures by name") {
  CHECK(fixture("diamond") == diamond());
  CHECK(fixture("circle8") == circle8());
  CHECK(fixture("point").size() == 1);
  CHECK(fixture("sphere:2").size() == 6);
  CHECK(fixture("interval:3") == interval(3));
  CHECK(fixture("cube:1:3").size() == 8);
  CHECK_THROWS(fixture("torus"));
}

TEST_CASE("verdicts serialize outcome and bounds") {
  auto v = is_contractible(diamond());
  Json j = verdict_to_json(v, homotopy_to_json);
  CHECK(j["outcome"] == "no");
  CHECK(j["bounds"]["visited"] == 1);
  CHECK_FALSE(j.contains("witness"));
  Json d = dcat_to_json(dcat(diamond()));
  CHECK(d["lower"] == 1);
  CHECK(d["upper"] == 1);
}
