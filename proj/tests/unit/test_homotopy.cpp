#include "doctest.h"

#include <algorithm>

#include "digitop/circle.hpp"
#include "digitop/homotopy.hpp"
#include "oracle.hpp"

using namespace digitop;

TEST_CASE("interval contraction formula") {
  for (int m = 1; m <= 6; ++m) {
    Homotopy h = interval_contraction(m);
    CHECK(h.length() == m);
    CHECK(verify_homotopy(h, identity(interval(m)), constant_map(interval(m), Point{0}, interval(m))));
  }
}

TEST_CASE("one-stage homotopies are adjacent maps") {
  Image d = diamond();
  Map f = identity(d);
  for (const auto& g : MapSpace(d, d).all()) CHECK(verify_homotopy(Homotopy({f, g}), f, g) == maps_adjacent(f, g));
}

TEST_CASE("left form round trip and operations") {
  Homotopy h = interval_contraction(3);
  Map lf = h.left_form();
  CHECK(lf.continuous());
  Homotopy back = Homotopy::from_left_form(lf, interval(3));
  CHECK(back.stages() == h.stages());
  Homotopy r = reverse(h);
  CHECK(verify_homotopy(r, h.end(), h.start()));
  Homotopy c = concat(h, r);
  CHECK(c.length() == 6);
  CHECK(verify_homotopy(c, h.start(), h.start()));
  CHECK(prolong(h, 5).length() == 5);
  CHECK(verify_homotopy(constant_homotopy(h.start(), 2), h.start(), h.start()));
}

TEST_CASE("component of id_I1 is all of map(I_1,I_1)") {
  auto c = mapspace_component(identity(interval(1)));
  CHECK(c.complete);
  CHECK(c.maps.size() == 4);
}

TEST_CASE("component of id_D against a brute-force filter") {
  Image d = diamond();
  auto c = mapspace_component(identity(d));
  CHECK(c.complete);
  // Oracle: closure of {id} under adjacency, computed over the full table list.
  auto all = MapSpace(d, d).all();
  std::vector<bool> in(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) in[i] = all[i] == identity(d);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        if (in[i] && !in[j] && maps_adjacent(all[i], all[j])) in[j] = grew = true;
  }
  CHECK(static_cast<std::size_t>(std::count(in.begin(), in.end(), true)) == c.maps.size());
  CHECK(c.maps.size() == 1);
}

TEST_CASE("contractibility") {
  for (int m = 1; m <= 4; ++m) CHECK(is_contractible(interval(m)).yes());
  CHECK(is_contractible(single_point()).yes());
  CHECK(is_contractible(product(interval(2), interval(1))).yes());
  auto d = is_contractible(diamond());
  CHECK(d.no());
  CHECK(d.bounds.get("visited") == 1);
  auto c = is_contractible(interval(3));
  REQUIRE(c.yes());
  CHECK(verify_homotopy(*c.witness, identity(interval(3)), c.witness->end()));
}

TEST_CASE("homotopic") {
  Image d = diamond();
  CHECK(homotopic(identity(d), constant_map(d, Point{1, 0}, d)).no());
  Map a = constant_map(interval(2), Point{0}, interval(3));
  Map b = constant_map(interval(2), Point{3}, interval(3));
  auto v = homotopic(a, b);
  REQUIRE(v.yes());
  CHECK(v.witness->length() == 3);
  CHECK(verify_homotopy(*v.witness, a, b));
  auto capped = homotopic(a, b, {1, 1000});
  CHECK(capped.unknown());
}

TEST_CASE("subdivision contractibility") {
  CHECK(is_subdivision_contractible(single_point(), 2).yes());
  CHECK(is_subdivision_contractible(diamond(), 2, {std::nullopt, 20'000}).unknown());
}

TEST_CASE("homotopy equivalence") {
  CHECK(homotopy_equivalent(single_point(), interval(2)).yes());
  CHECK(homotopy_equivalent(interval(2), Image(1, {{4}, {5}, {6}})).yes());
}

TEST_CASE("ev_0 witness") {
  auto w = ev0_homotopy_equivalence_witness(interval(1), 2);
  auto c = validate_ev0_witness(w);
  CHECK(c.ok);
  CHECK(c.exhaustive);
  auto s = validate_ev0_witness(ev0_homotopy_equivalence_witness(diamond(), 3), 10, 300);
  CHECK(s.ok);
  CHECK_FALSE(s.exhaustive);
  CHECK(validate_ev0_witness(ev0_homotopy_equivalence_witness(single_point(), 1)).ok);
}
