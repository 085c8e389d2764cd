#include "doctest.h"

#include "digitop/circle.hpp"
#include "digitop/lattice.hpp"
#include "digitop/maps.hpp"
#include "oracle.hpp"

using namespace digitop;

TEST_CASE("adjacency is the coordinatewise rule") {
  CHECK(adjacent(Point{1, 0}, Point{0, 1}));
  CHECK(adjacent(Point{3, 3}, Point{3, 3}));
  CHECK_FALSE(adjacent(Point{0, 0}, Point{2, 0}));
  CHECK_THROWS_AS(adjacent(Point{0}, Point{0, 0}), DimensionMismatch);

  std::vector<Point> grid;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) grid.push_back(Point{a, b});
  for (const auto& p : grid)
    for (const auto& q : grid) {
      CHECK(adjacent(p, q) == adjacent(q, p));
      CHECK(adjacent(p, q) == oracle::cheb_adjacent(p.vec(), q.vec()));
    }
}

TEST_CASE("intervals and canonical order") {
  CHECK(interval(1).size() == 2);
  CHECK(interval(2).points() == std::vector<Point>{Point{0}, Point{1}, Point{2}});
  Image x(2, {{1, 0}, {0, 1}, {0, -1}, {-1, 0}});
  CHECK(x.point(0) == Point{-1, 0});
  CHECK(x.point(3) == Point{1, 0});
  CHECK(x == diamond());
  CHECK_THROWS_AS(Image(2, {{0, 0}, {0, 0}}), PreconditionFailed);
  CHECK_THROWS(interval(-1));
}

TEST_CASE("products") {
  Image sq = product(interval(1), interval(1));
  CHECK(sq.size() == 4);
  CHECK(sq.dim() == 2);
  CHECK(adjacent(Point{0, 0}, Point{1, 1}));
  CHECK(sq.adjacent_idx(*sq.index_of(Point{0, 0}), *sq.index_of(Point{1, 1})));
  Image dx = product(diamond(), interval(1));
  CHECK(dx.size() == 8);
  CHECK(dx.dim() == 3);
  CHECK(find_isomorphism(product(diamond(), single_point()), diamond()).yes());
  // Index of (x_i, y_j) is i*|Y| + j.
  Image p = product(interval(2), diamond());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(p.point(i * 4 + j) == concat(interval(2).point(i), diamond().point(j)));
}

TEST_CASE("connectivity against the oracle") {
  CHECK(is_connected(diamond()));
  CHECK_FALSE(is_connected(Image(2, {{0, 0}, {5, 5}})));
  CHECK(component_count(Image(2, {{0, 0}, {5, 5}})) == 2);
  CHECK(is_connected(single_point(3)));
  for (const auto& x : {circle8(), sphere(2), product(interval(2), interval(1)), Image(1, {{0}, {2}, {3}})})
    CHECK(is_connected(x) == oracle::is_connected(oracle::points(x)));
}

TEST_CASE("neighborhoods") {
  Image d = diamond();
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto nb = d.neighbors(i);
    std::vector<std::uint32_t> want;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (oracle::cheb_adjacent(d.point(i).vec(), d.point(j).vec())) want.push_back(static_cast<std::uint32_t>(j));
    CHECK(std::vector<std::uint32_t>(nb.begin(), nb.end()) == want);
  }
}

TEST_CASE("isomorphism") {
  CHECK(find_isomorphism(interval(2), Image(1, {{5}, {6}, {7}})).yes());
  CHECK(find_isomorphism(interval(2), interval(3)).no());
  CHECK(find_isomorphism(diamond(), circle8()).no());
  auto self = find_isomorphism(circle8(), circle8());
  REQUIRE(self.yes());
  CHECK(self.witness->forward.continuous());
  CHECK(self.witness->inverse.continuous());
  CHECK(compose(self.witness->inverse, self.witness->forward) == identity(circle8()));
  // Same size, different adjacency.
  CHECK(find_isomorphism(Image(1, {{0}, {1}, {3}}), interval(2)).no());
}
