#include "doctest.h"

#include <set>

#include "digitop/circle.hpp"
#include "digitop/subdivision.hpp"
#include "oracle.hpp"

using namespace digitop;

TEST_CASE("floor division") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(floor_div(-5, 4) == -2);
}

TEST_CASE("subdivided intervals") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(subdivide_image(interval(n), k) == interval(k * n + k - 1));
  CHECK(subdivide_image(Image(1, {{0}}), 3) == interval(2));
}

TEST_CASE("subdivision sizes and fibers") {
  CHECK(subdivide_image(diamond(), 2).size() == 16);
  CHECK(subdivide_image(circle8(), 3).size() == 72);
  auto s = subdivide(diamond(), 2);
  auto fib = fiber(s, Point{1, 0});
  CHECK(std::set<Point>(fib.begin(), fib.end()) == std::set<Point>{{2, 0}, {2, 1}, {3, 0}, {3, 1}});
  for (const auto& p : diamond().points()) CHECK(fiber(subdivide(diamond(), 3), p).size() == 9);
}

TEST_CASE("projection is floor division and continuous") {
  for (const auto& x : {diamond(), circle8(), product(interval(1), interval(2))})
    for (int k = 1; k <= 3; ++k) {
      Map r = subdivision_projection(x, k);
      CHECK(r.continuous());
      for (std::size_t i = 0; i < r.domain().size(); ++i) {
        auto c = r.domain().point(i).vec();
        for (auto& v : c) v = floor_div(v, k);
        CHECK(r(r.domain().point(i)) == Point(c));
      }
    }
}

TEST_CASE("subdivided inclusions") {
  Map sj = subdivide_inclusion(inclusion(Image(1, {{0}}), interval(2)), 2);
  CHECK(sj.domain() == interval(1));
  CHECK(sj.codomain() == interval(5));
  Map ends = subdivide_inclusion(inclusion(Image(1, {{0}, {3}}), interval(3)), 2);
  CHECK(ends.domain() == Image(1, {{0}, {1}, {6}, {7}}));
}

TEST_CASE("iterated subdivision isomorphism") {
  Map a = iso_iterated(interval(1), 2, 2);
  CHECK(a.domain() == interval(7));
  CHECK(a.codomain() == interval(7));
  CHECK(a.continuous());
  Map b = iso_iterated(diamond(), 2, 3);
  CHECK(b.domain().size() == 144);
  std::set<std::uint32_t> hit(b.table().begin(), b.table().end());
  CHECK(hit.size() == 144);
  CHECK(compose(subdivision_projection(diamond(), 6), b) ==
        compose(subdivision_projection(diamond(), 2), subdivision_projection(subdivide_image(diamond(), 2), 3)));
}

TEST_CASE("product subdivision isomorphism") {
  Map iso = iso_product_subdivision(interval(1), interval(1), 2);
  CHECK(iso.domain().size() == 16);
  CHECK(iso.continuous());
  std::set<std::uint32_t> hit(iso.table().begin(), iso.table().end());
  CHECK(hit.size() == 16);
}

TEST_CASE("interval projection") {
  Map r = interval_projection(3, 2);
  CHECK(r.domain() == interval(7));
  CHECK(r(Point{5}) == Point{2});
}
