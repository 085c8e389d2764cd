#include "doctest.h"

#include "digitop/circle.hpp"
#include "digitop/cofib.hpp"
#include "digitop/subdivision.hpp"
#include "oracle.hpp"

using namespace digitop;

namespace {

// Independent triangle check: r on the included part is rho_k x rho_m.
bool triangle_holds(const RetractionWitness& w) {
  const Map& r = w.r;
  for (std::size_t i = 0; i < r.domain().size(); ++i) {
    Point p = r.domain().point(i);
    int d = p.dim() - 1;
    std::vector<int> base(p.vec().begin(), p.vec().end() - 1);
    for (auto& v : base) v = floor_div(v, w.k);
    int t = p[d];
    bool on_sub = w.sub.contains(Point(base));
    if (t != 0 && !on_sub) continue;
    std::vector<int> want = base;
    want.push_back(on_sub ? floor_div(t, w.m) : 0);
    if (r(p) != Point(want)) return false;
  }
  return true;
}

HepProblem nonfiller() {
  Image a = interval(0), x = interval(2), y = interval(3);
  Map h = Map::from_pairs(product(a, interval(1)), y, {{Point{0, 0}, Point{1}}, {Point{0, 1}, Point{0}}});
  Map f = Map::from_function(x, y, [](const Point& p) { return Point{p[0] + 1}; });
  return {a, x, h, f};
}

HepProblem nonpush() {
  Image a = interval(0), x = interval(1), d = diamond();
  Map h = Map::from_pairs(product(a, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}});
  Map f = Map::from_pairs(x, d, {{Point{0}, Point{1, 0}}, {Point{1}, Point{0, -1}}});
  return {a, x, h, f};
}

}  // namespace

TEST_CASE("origin retraction values") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto w = retraction_origin_interval(m, n);
      CHECK(w.k == 2);
      CHECK(check_retraction(w).ok());
      CHECK(triangle_holds(w));
      for (int q = 0; q <= 4 * n + 3; ++q) CHECK(w.r(Point{0, q}) == Point{0, q / 2});
      for (int p = 1; p <= 2 * m + 1; ++p) CHECK(w.r(Point{p, 0}) == Point{p / 2, 0});
    }
  auto w = retraction_origin_interval(2, 1);
  CHECK(w.r.domain().size() == 48);
}

TEST_CASE("perturbed retraction fails") {
  auto w = retraction_origin_interval(2, 1);
  Table t = w.r.table();
  t[*w.r.domain().index_of(Point{1, 0})] = static_cast<std::uint32_t>(*w.r.codomain().index_of(Point{2, 0}));
  RetractionWitness bad = w;
  bad.r = Map(w.r.domain(), w.r.codomain(), t);
  CHECK_FALSE(check_retraction(bad).ok());
  CHECK_FALSE(verify_retraction(bad));
}

TEST_CASE("endpoint retraction") {
  // Frozen exponents from the smallest-p rule.
  const int expect[3][3] = {{4, 5, 5}, {6, 6, 7}, {5, 5, 6}};
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      CHECK(endpoints_exponent(m, n) == expect[m - 1][n - 1]);
      if (m * n > 4) continue;
      auto w = retraction_both_endpoints(m, n);
      CHECK(w.p == expect[m - 1][n - 1]);
      CHECK(w.k == 1 << *w.p);
      CHECK(check_retraction(w).ok());
      CHECK(triangle_holds(w));
    }
}

TEST_CASE("literal composite breaks the triangle") {
  auto w = literal_endpoints_composite(2, 1);
  auto c = check_retraction(w);
  CHECK_FALSE(c.triangle);
  CHECK_FALSE(c.ok());
}

TEST_CASE("product with a cofibration") {
  auto w = retraction_origin_interval(1, 1);
  auto pt = product_with_cofibration(w, single_point(1));
  CHECK(check_retraction(pt).ok());
  auto face = product_with_cofibration(w, interval(1));
  CHECK(face.space == product(interval(1), interval(1)));
  CHECK(face.sub == product(interval(1), interval(0)));
  CHECK(check_retraction(face).ok());
}

TEST_CASE("pushout fillers") {
  Image a = interval(0), x = interval(1), d = diamond();
  Map h = Map::from_pairs(product(a, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}});
  Map f = Map::from_pairs(x, d, {{Point{0}, Point{1, 0}}, {Point{1}, Point{0, -1}}});
  CHECK(count_pushout_fillers(a, x, h, f, 1).count == 0);
  CHECK(count_pushout_fillers(a, x, h, f, 2).count == 1);
  auto v = exhaustive_pushout_search(a, x, h, f, 3);
  REQUIRE(v.yes());
  CHECK(v.witness->continuous());
  Map hc = Map::from_pairs(product(a, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{1, 0}}});
  Map fc = constant_map(x, Point{1, 0}, d);
  Map phi = pushout_filler(a, x, hc, fc, 2);
  for (std::size_t i = 0; i < phi.domain().size(); ++i) CHECK(phi.at(i) == *d.index_of(Point{1, 0}));
}

TEST_CASE("negative fixtures") {
  auto e42 = nonfiller();
  CHECK(exhaustive_filler_search(e42, 1, 1).no());
  CHECK(filler_search_at(e42, 1, 2).no());
  auto yes = filler_search_at(e42, 2, 2);
  REQUIRE(yes.yes());
  CHECK(verify_hep_filler(e42, *yes.witness));
  auto np = nonpush();
  CHECK(exhaustive_filler_search(np, 1, 1).no());
  auto npy = filler_search_at(np, 1, 2);
  REQUIRE(npy.yes());
  CHECK(verify_hep_filler(np, *npy.witness));
  for (const auto& prob : {e42, np}) {
    auto built = hep_filler(prob, retraction_origin_interval(static_cast<int>(prob.space.size()) - 1, 1));
    CHECK(verify_hep_filler(prob, built));
  }
}

TEST_CASE("constant homotopy filler restricts to the pulled-back f") {
  Image a = interval(0), x = interval(2), y = interval(3);
  Map f = Map::from_function(x, y, [](const Point& p) { return Point{p[0] + 1}; });
  Map h = Map::from_pairs(product(a, interval(1)), y, {{Point{0, 0}, Point{1}}, {Point{0, 1}, Point{1}}});
  HepProblem prob{a, x, h, f};
  auto w = hep_filler(prob, retraction_origin_interval(2, 1));
  REQUIRE(verify_hep_filler(prob, w));
  for (std::size_t i = 0; i < w.filler.domain().size(); ++i) {
    Point p = w.filler.domain().point(i);
    if (p[1] == 0) CHECK(w.filler(p) == f(Point{floor_div(p[0], w.k)}));
  }
}

TEST_CASE("hep fillers on random small instances") {
  Image a = interval(0), x = interval(2), y = interval(2);
  Image ai = product(a, interval(2));
  int checked = 0;
  for (const auto& hp : MapSpace(ai, y).all())
    for (const auto& f : MapSpace(x, y).all()) {
      if (hp.at(0) != f.at(0)) continue;
      HepProblem prob{a, x, hp, f};
      CHECK(verify_hep_filler(prob, hep_filler(prob, retraction_origin_interval(2, 2))));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("borsuk filler over a point") {
  Image z = single_point(1), x = interval(1), a = interval(0), y = interval(2);
  Map f = Map::from_pairs(product(z, x), y, {{Point{0, 0}, Point{1}}, {Point{0, 1}, Point{2}}});
  Map h = Map::from_pairs(product(product(z, interval(1)), a), y,
                          {{Point{0, 0, 0}, Point{1}}, {Point{0, 1, 0}, Point{0}}});
  BorsukProblem prob{z, x, a, f, h};
  auto w = borsuk_filler(prob, retraction_origin_interval(1, 1));
  CHECK(verify_borsuk_filler(prob, w));
}

TEST_CASE("path fibration lift") {
  Image z = single_point(1), d = diamond();
  Map f = Map::from_pairs(product(z, interval(2)), d,
                          {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}, {Point{0, 2}, Point{-1, 0}}});
  Map h = Map::from_pairs(product(z, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, -1}}});
  auto w = path_fibration_lift(z, f, h);
  CHECK(verify_path_lift(z, f, h, w));
  Map hc = Map::from_pairs(product(z, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{1, 0}}});
  CHECK(verify_path_lift(z, f, hc, path_fibration_lift(z, f, hc)));
}

TEST_CASE("endpoints fibration lift") {
  Image z = single_point(1), d = diamond(), dd = product(diamond(), diamond());
  Map f = Map::from_pairs(product(z, interval(2)), d,
                          {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}, {Point{0, 2}, Point{-1, 0}}});
  Map h = Map::from_pairs(product(z, interval(1)), dd,
                          {{Point{0, 0}, Point{1, 0, -1, 0}}, {Point{0, 1}, Point{0, 1, 0, 1}}});
  auto w = endpoints_fibration_lift(z, f, h);
  CHECK(verify_endpoints_lift(z, f, h, w));
  Map f1 = Map::from_pairs(product(z, interval(1)), d, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}});
  Map h1 = Map::from_pairs(product(z, interval(1)), dd, {{Point{0, 0}, Point{1, 0, 0, 1}}, {Point{0, 1}, Point{1, 0, 0, 1}}});
  CHECK_THROWS_AS(endpoints_fibration_lift(z, f1, h1), PreconditionFailed);
}

TEST_CASE("based path fibration lift") {
  Image z = single_point(1), d = diamond();
  Point y0{1, 0};
  Map f = Map::from_pairs(product(z, interval(2)), d,
                          {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}, Point{0, 1}}, {Point{0, 2}, Point{-1, 0}}});
  Map h = Map::from_pairs(product(z, interval(2)), d,
                          {{Point{0, 0}, Point{-1, 0}}, {Point{0, 1}, Point{0, -1}}, {Point{0, 2}, Point{1, 0}}});
  auto w = based_path_fibration_lift(z, f, h, y0);
  CHECK(verify_based_lift(z, f, h, y0, w));
  // Every output path starts at y0: the time-zero slice of the lift.
  const Image& dom = w.filler.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Point p = dom.point(i);
    if (p[p.dim() - 1] == 0) CHECK(w.filler(p) == y0);
  }
}

TEST_CASE("hep input validation") {
  auto prob = nonfiller();
  prob.f = Map::from_function(prob.space, prob.f.codomain(), [](const Point& p) { return Point{p[0]}; });
  CHECK_THROWS_AS(hep_filler(prob, retraction_origin_interval(2, 1)), PreconditionFailed);
}
