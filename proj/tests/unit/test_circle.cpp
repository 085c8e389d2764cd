#include "doctest.h"

#include <algorithm>

#include "digitop/circle.hpp"
#include "oracle.hpp"

using namespace digitop;

namespace {

Map loop4() { return make_path(diamond(), {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}); }

// Lift by brute force: every sequence in the window whose covering points match alpha.
std::vector<std::vector<long long>> brute_lifts(const std::vector<Point>& alpha, long long start) {
  std::vector<std::vector<long long>> out;
  long long lo = start - static_cast<long long>(alpha.size()), hi = start + static_cast<long long>(alpha.size());
  std::vector<long long> cur{start};
  std::function<void()> rec = [&] {
    if (cur.size() == alpha.size()) {
      out.push_back(cur);
      return;
    }
    for (long long v = lo; v <= hi; ++v) {
      if (std::llabs(v - cur.back()) > 1) continue;
      long long r = ((v % 4) + 4) % 4;
      static const int xs[4] = {1, 0, -1, 0}, ys[4] = {0, 1, 0, -1};
      if (Point{xs[r], ys[r]} != alpha[cur.size()]) continue;
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  static const int xs[4] = {1, 0, -1, 0}, ys[4] = {0, 1, 0, -1};
  long long r0 = ((start % 4) + 4) % 4;
  if (Point{xs[r0], ys[r0]} == alpha[0]) rec();
  return out;
}

}  // namespace

TEST_CASE("fixtures") {
  CHECK(diamond().size() == 4);
  CHECK(is_connected(diamond()));
  CHECK(circle8().size() == 8);
  CHECK(circle8().contains(Point{-1, -1}));
  CHECK(sphere(2).size() == 6);
  CHECK(sphere(2).dim() == 3);
  CHECK(sphere(1) == diamond());
}

TEST_CASE("covering map") {
  CHECK(cover_point(0) == Point{1, 0});
  CHECK(cover_point(4) == Point{1, 0});
  CHECK(cover_point(-1) == Point{0, -1});
  CHECK(cover_point(6) == Point{-1, 0});
  for (long long n = -9; n <= 9; ++n) CHECK(adjacent(cover_point(n), cover_point(n + 1)));
  CHECK(diamond_index(Point{0, -1}) == 3);
  CHECK(diamond_step(Point{0, -1}, Point{1, 0}) == 1);
  CHECK(diamond_step(Point{1, 0}, Point{0, -1}) == -1);
  CHECK_THROWS(diamond_index(Point{0, 0}));
}

TEST_CASE("path lifts") {
  Map c = make_path(diamond(), {{1, 0}, {1, 0}, {1, 0}});
  CHECK(lift_path(c, 0).path() == std::vector<long long>{0, 0, 0});
  CHECK(lift_path(loop4(), 0).path() == std::vector<long long>{0, 1, 2, 3, 4});
  CHECK(lift_path(loop4(), 4).path() == std::vector<long long>{4, 5, 6, 7, 8});
  CHECK(verify_path_lift(loop4(), lift_path(loop4(), 0)));
  CHECK_THROWS(lift_path(loop4(), 1));
  auto pts = diamond_path_points(loop4());
  CHECK(brute_lifts(pts, 0) == std::vector<std::vector<long long>>{{0, 1, 2, 3, 4}});
  CHECK(enumerate_path_lifts(loop4(), 0) == brute_lifts(pts, 0));
}

TEST_CASE("lift uniqueness on all length-3 paths") {
  for (const auto& p : MapSpace(interval(3), diamond()).all()) {
    auto pts = diamond_path_points(p);
    long long start = diamond_index(pts[0]) + 8;
    auto bl = brute_lifts(pts, start);
    REQUIRE(bl.size() == 1);
    CHECK(lift_path(p, start).path() == bl[0]);
  }
}

TEST_CASE("winding") {
  CHECK(winding_number(make_path(diamond(), {{0, 1}, {0, 1}})) == 0);
  CHECK(winding_number(loop4()) == 4);
  CHECK(winding_index(loop4()) == 1);
  Map rev = make_path(diamond(), {{1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}});
  CHECK(winding_number(rev) == -4);
  CHECK(is_diamond_loop(loop4()));
  CHECK_FALSE(is_diamond_loop(make_path(diamond(), {{1, 0}, {0, 1}})));
  CHECK_THROWS(winding_number(make_path(diamond(), {{1, 0}, {0, 1}})));
}

TEST_CASE("homotopy lifts") {
  // H(-,1) drags the start of loop4 one step forward.
  Image dom = product(interval(4), interval(1));
  Map h = Map::from_function(dom, diamond(), [](const Point& p) { return cover_point(p[1] == 0 ? p[0] : std::max(p[0], 1)); });
  auto init = lift_path(loop4(), 0);
  auto lift = lift_homotopy(h, init);
  CHECK(verify_homotopy_lift(h, lift));
  REQUIRE(lift.rows.size() == 2);
  CHECK(lift.rows[1] == std::vector<long long>{1, 1, 2, 3, 4});
  Map hc = Map::from_function(dom, diamond(), [](const Point& p) { return cover_point(p[0]); });
  auto lc = lift_homotopy(hc, init);
  CHECK(lc.rows[0] == lc.rows[1]);
}

TEST_CASE("winding is invariant on adjacent loops of length 4") {
  std::vector<Map> loops;
  for (const auto& p : MapSpace(interval(4), diamond()).all())
    if (is_diamond_loop(p)) loops.push_back(p);
  // Step sums in {-4, 0, 4}: 19 + 2 per start.
  CHECK(loops.size() == 84);
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = i + 1; j < loops.size(); ++j)
      if (maps_adjacent(loops[i], loops[j])) CHECK(winding_number(loops[i]) == winding_number(loops[j]));
}

TEST_CASE("winding obstruction") {
  Map c = make_path(diamond(), {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  auto o = winding_obstruction(loop4(), c);
  REQUIRE(o);
  CHECK(o->winding_f == 4);
  CHECK(o->winding_g == 0);
  Map rot = make_path(diamond(), {{0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}});
  CHECK_FALSE(winding_obstruction(loop4(), rot));
  CHECK_FALSE(winding_obstruction(loop4(), loop4()));
  CHECK(homotopic_loops(loop4(), c).no());
}
