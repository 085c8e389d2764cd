#include "doctest.h"

#include <random>

#include "digitop/circle.hpp"
#include "digitop/funcspace.hpp"
#include "oracle.hpp"

using namespace digitop;

TEST_CASE("map space counts match brute force") {
  CHECK(MapSpace(interval(1), interval(1)).all().size() == 4);
  CHECK(MapSpace(interval(1), Image(2, {{0, 0}, {5, 5}})).all().size() == 2);
  for (const auto& [x, y] : std::vector<std::pair<Image, Image>>{{interval(2), diamond()},
                                                                  {diamond(), diamond()},
                                                                  {interval(3), interval(2)},
                                                                  {diamond(), Image(1, {{0}, {1}, {3}})},
                                                                  {product(interval(1), interval(1)), interval(3)}})
    CHECK(MapSpace(x, y).for_each([](const Map&) { return true; }).count == oracle::count_continuous(x, y));
}

TEST_CASE("enumeration respects the cap") {
  auto st = MapSpace(interval(3), interval(3)).for_each([](const Map&) { return true; }, 10);
  CHECK(st.overflow);
  CHECK(st.count == 10);
  CHECK_THROWS_AS(MapSpace(interval(3), interval(3)).all(10), CapExceeded);
}

TEST_CASE("map space adjacency") {
  Image d = diamond();
  Map a = make_path(d, {{1, 0}, {0, 1}});
  Map b = make_path(d, {{1, 0}, {0, -1}});
  CHECK_FALSE(maps_adjacent(a, b));
  CHECK(maps_adjacent(a, a));
  Map c = make_path(d, {{1, 0}, {1, 0}});
  CHECK(maps_adjacent(a, c));
  CHECK_THROWS_AS(maps_adjacent(a, identity(d)), SignatureMismatch);
}

TEST_CASE("adjacent paths have adjacent endpoints") {
  std::mt19937 rng(11);
  auto paths = MapSpace(interval(3), diamond()).all();
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    const Map& p = paths[pick(rng)];
    const Map& q = paths[pick(rng)];
    if (!maps_adjacent(p, q)) continue;
    auto [p0, p1] = endpoints(p);
    auto [q0, q1] = endpoints(q);
    CHECK(adjacent(p0, q0));
    CHECK(adjacent(p1, q1));
  }
}

TEST_CASE("based path spaces") {
  CHECK(BasedPathSpace(diamond(), Point{1, 0}, 1).all().size() == 3);
  // Two-step walks from (1,0) in D: each step has 3 choices.
  CHECK(BasedPathSpace(diamond(), Point{1, 0}, 2).all().size() == 9);
  CHECK(BasedPathSpace(interval(2), Point{0}, 2).all().size() == 5);
  for (const auto& p : BasedPathSpace(circle8(), Point{2, 0}, 2).all()) CHECK(eval_at(p, 0) == Point{2, 0});
}

TEST_CASE("path operations") {
  Image y = interval(3);
  Map p = make_path(y, {{0}, {1}, {2}});
  CHECK(path_length(p) == 2);
  Map q = trivial_extension(p, 4);
  CHECK(path_length(q) == 4);
  CHECK(eval_at(q, 4) == Point{2});
  Map r = refine_path(p, 2);
  CHECK(path_length(r) == 5);
  CHECK(eval_at(r, 3) == Point{1});
  CHECK(r.continuous());
  Map s = pushforward(Map(y, y, {1, 1, 2, 3}), p);
  CHECK(eval_at(s, 0) == Point{1});
  Map t = pullback(Map(interval(1), interval(2), {2, 1}), p);
  CHECK(eval_at(t, 0) == Point{2});
  CHECK_FALSE(make_path(y, {{0}, {2}}).continuous());
}

TEST_CASE("curry round trips and reflects continuity") {
  Image x = interval(2), y = interval(1), z = interval(3);
  Image xy = product(x, y);
  std::uint64_t seen = 0;
  oracle::all_functions(xy.size(), z.size(), [&](const auto& f) {
    Map m(xy, z, Table(f.begin(), f.end()));
    auto g = curry(m, x, y);
    CHECK(uncurry(g) == m);
    CHECK(is_continuous(g) == m.continuous());
    ++seen;
  });
  CHECK(seen == 4096);
}
