#include "doctest.h"

#include "digitop/circle.hpp"
#include "digitop/maps.hpp"
#include "digitop/subdivision.hpp"
#include "oracle.hpp"

using namespace digitop;

TEST_CASE("continuity of the interval examples") {
  Map f(interval(2), interval(1), {0, 0, 1});
  CHECK(f.continuous());
  Map g(interval(1), interval(2), {0, 2});
  CHECK_FALSE(g.continuous());
  CHECK_THROWS_AS(g.require_continuous("g"), PreconditionFailed);
}

TEST_CASE("constructor rejects bad tables") {
  CHECK_THROWS(Map(interval(1), interval(1), {0}));
  CHECK_THROWS(Map(interval(1), interval(1), {0, 2}));
  CHECK_THROWS(Map::from_pairs(interval(1), interval(1), {{Point{0}, Point{0}}}));
}

TEST_CASE("continuity flag agrees with a brute-force check") {
  auto dom = oracle::points(interval(2));
  auto cod = oracle::points(diamond());
  oracle::all_functions(dom.size(), cod.size(), [&](const auto& f) {
    Table t(f.begin(), f.end());
    Map m(interval(2), diamond(), t);
    CHECK(m.continuous() == oracle::continuous(dom, cod, f));
    CHECK(table_continuous(interval(2), diamond(), t) == m.continuous());
  });
}

TEST_CASE("continuity flag is shared by copies") {
  Map f(interval(2), interval(1), {0, 0, 1});
  Map copy = f;
  CHECK(copy.continuous());
  CHECK(f.continuous());
}

TEST_CASE("composition and the covering square") {
  Map j = inclusion(Image(1, {{0}}), interval(2));
  CHECK(is_inclusion(j));
  Map sj = subdivide_inclusion(j, 2);
  CHECK(compose(subdivision_projection(interval(2), 2), sj) == compose(j, subdivision_projection(Image(1, {{0}}), 2)));
  CHECK_THROWS_AS(compose(j, j), SignatureMismatch);
}

TEST_CASE("product maps") {
  Image x = interval(1);
  Map rr = product_map(subdivision_projection(x, 2), subdivision_projection(x, 2));
  Map iso = iso_product_subdivision(x, x, 2);
  CHECK(compose(rr, iso) == subdivision_projection(product(x, x), 2));
  Map fc = product_map(Map(interval(2), interval(1), {0, 0, 1}), constant_map(diamond(), Point{0, 1}, diamond()));
  CHECK(fc.continuous());
}

TEST_CASE("diagonal and projections") {
  Map d = diagonal(interval(1));
  CHECK(d(Point{0}) == Point{0, 0});
  CHECK(d(Point{1}) == Point{1, 1});
  CHECK(d.continuous());
  Map dd = diagonal(diamond());
  CHECK(dd.codomain().dim() == 4);
  CHECK(dd.continuous());
  CHECK(projection_first(diamond(), interval(2)).continuous());
  CHECK(projection_second(diamond(), interval(2)).continuous());
  CHECK(compose(projection_first(diamond(), diamond()), dd) == identity(diamond()));
}

TEST_CASE("constant maps are continuous") {
  CHECK(constant_map(circle8(), Point{2, 0}, circle8()).continuous());
  CHECK_THROWS(constant_map(circle8(), Point{0, 0}, circle8()));
}
